#pragma once

// Guarded commands over an explicit finite state space.
//
//   skip           identity
//   abort          top matrix (every transition allowed)
//   atom "a"       matrix bound to "a"; "magic" is the empty relation
//   seq [P, Q]     P ; Q
//   choice [P, Q]  P + Q
//   if b P Q       b;P + (not b);Q
//   while b P      closure(b;P) ; not b

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quantrel/relmat.hpp"
#include "quantrel/subtype.hpp"

namespace quantrel {

struct ProgramNode;

/// Immutable syntax tree handle.
class Program {
 public:
  static Program skip();
  static Program abort();
  static Program atom(std::string name);
  static Program seq(std::vector<Program> parts);
  static Program choice(std::vector<Program> options);
  static Program cond(std::string guard, Program then_branch,
                      Program else_branch);
  static Program loop(std::string guard, Program body);

  const ProgramNode& node() const { return *node_; }

 private:
  explicit Program(std::shared_ptr<const ProgramNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const ProgramNode> node_;
};

struct Skip {};
struct Abort {};
struct Atom {
  std::string name;
};
struct Seq {
  std::vector<Program> parts;
};
struct Choice {
  std::vector<Program> options;
};
struct Cond {
  std::string guard;
  Program then_branch;
  Program else_branch;
};
struct While {
  std::string guard;
  Program body;
};

struct ProgramNode {
  std::variant<Skip, Abort, Atom, Seq, Choice, Cond, While> v;
};

/// Name bindings for one state type.
class Env {
 public:
  static constexpr const char* kMagic = "magic";

  Env(FinType state, QuantalePtr q);

  const FinType& state() const { return state_; }
  const QuantalePtr& quantale() const { return q_; }

  /// Throws TypeMismatch unless `m` is square over the state type.
  void add_atom(std::string name, Mat m);
  /// Throws TypeMismatch unless `p` is over the state type.
  void add_pred(std::string name, Comonoid p);

  /// Throws Unresolved for unknown names; "magic" is the zero matrix unless
  /// rebound.
  Mat atom(const std::string& name) const;
  const Comonoid& pred(const std::string& name) const;

 private:
  FinType state_;
  QuantalePtr q_;
  std::map<std::string, Mat> atoms_;
  std::map<std::string, Comonoid> preds_;
};

/// Throws Unresolved, or Unsupported when the program needs a top or a
/// closure the quantale cannot provide.
Mat compile(const Program& p, const Env& env, std::size_t max_iters = 64);

struct Verdict {
  bool holds = true;
  /// Boolean quantale: a state satisfying the precondition with a successor
  /// outside the postcondition. Otherwise: the first violated entry pair.
  std::optional<std::string> counterexample;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
};

Verdict verify(const Comonoid& pre, const Program& p, const Comonoid& post,
               const Env& env);
Verdict verify(const std::string& pre, const Program& p,
               const std::string& post, const Env& env);
/// Same check against an already compiled term.
Verdict check_triple(const Comonoid& pre, const Mat& term,
                     const Comonoid& post);

Comonoid program_wlp(const Program& p, const Comonoid& post, const Env& env);
Comonoid program_sp(const Program& p, const Comonoid& pre, const Env& env);

}  // namespace quantrel
