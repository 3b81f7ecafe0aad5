#pragma once

// Predicates (comonoids) and reflexive-transitive endoterms (monoids).
//
// A comonoid is a diagonal endomatrix whose entries are idempotents below the
// unit. With the boolean quantale these are exactly the subsets of a type.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quantrel/relmat.hpp"

namespace quantrel {

class Comonoid {
 public:
  /// Throws InvalidValue unless every entry is an idempotent below the unit.
  Comonoid(FinType type, QuantalePtr q, std::vector<QElem> diag);

  /// Members get the unit, everything else bottom.
  static Comonoid crisp(const FinType& type, const QuantalePtr& q,
                        std::span<const std::string> members);
  static Comonoid crisp(const FinType& type, const QuantalePtr& q,
                        std::initializer_list<std::string> members);
  /// The identity comonoid.
  static Comonoid full(const FinType& type, const QuantalePtr& q);
  /// The bottom comonoid.
  static Comonoid empty(const FinType& type, const QuantalePtr& q);

  const FinType& type() const { return type_; }
  const QuantalePtr& quantale() const { return q_; }
  const std::vector<QElem>& diag() const { return diag_; }
  const QElem& at(std::size_t i) const { return diag_.at(i); }

  Mat as_mat() const;
  /// True when every entry is the unit or bottom.
  bool is_crisp() const;
  /// Labels whose entry is the unit.
  std::vector<std::string> members() const;

  friend bool operator==(const Comonoid& a, const Comonoid& b);

 private:
  FinType type_;
  QuantalePtr q_;
  std::vector<QElem> diag_;
};

/// Pointwise order on diagonals (equivalently, the matrix order).
bool leq(const Comonoid& u, const Comonoid& v);

/// An endoterm above the identity that is idempotent under compose.
class MonoidTerm {
 public:
  /// Throws InvalidValue unless `m` is reflexive and transitive.
  explicit MonoidTerm(Mat m);
  const Mat& mat() const { return mat_; }
  const FinType& type() const { return mat_.src(); }

 private:
  Mat mat_;
};

/// Square, below identity, idempotent, and bottom off the diagonal.
bool is_comonoid(const Mat& p);
/// Square, above identity, idempotent.
bool is_monoid(const Mat& p);

/// Largest comonoid below the square matrix `p`.
Comonoid interior(const Mat& p);

/// Least monoid above `p`: the join of all powers of `p`, computed by
/// squaring identity + p until it stops changing. Each squaring counts as one
/// iteration; Divergence is thrown when `max_iters` is exceeded.
MonoidTerm closure(const Mat& p, std::size_t max_iters = 64);

Comonoid comeet(const Comonoid& u, const Comonoid& v);
Comonoid cojoin(const Comonoid& u, const Comonoid& v);

/// Largest comonoid disjoint from `u` (entrywise tensor is bottom).
Comonoid negation(const Comonoid& u);
Comonoid double_negation(const Comonoid& u);
bool is_regular(const Comonoid& u);
/// Join in the Boolean algebra of regular comonoids: not not (u + v).
Comonoid regular_join(const Comonoid& u, const Comonoid& v);

/// int(u |> v); the relative pseudo-complement of `u` and `v`.
Comonoid std_implication(const Comonoid& u, const Comonoid& v);

}  // namespace quantrel
