#pragma once

// JSON verification documents.
//
//   {
//     "quantale": "boolean",
//     "types": {"S": ["s0", "s1"], "U": {"sum": ["S", "S2"]}},
//     "matrices": {"step": {"src": "S", "dst": "S", "entries": [[0, 1], [0, 0]]}},
//     "predicates": {"b": {"type": "S", "members": ["s0"]}},
//     "programs": {"loop": {"while": {"cond": "b", "body": {"atom": "step"}}}},
//     "assertions": [{"pre": "b", "prog": "loop", "post": "c"}]
//   }

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quantrel/error.hpp"
#include "quantrel/gcl.hpp"
#include "quantrel/relmat.hpp"
#include "quantrel/subtype.hpp"
#include "quantrel/sums.hpp"

namespace quantrel {

/// Load failure; the message starts with the offending key path.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& key, const std::string& what)
      : Error(key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct Assertion {
  std::string pre;
  /// Exactly one of these names is set.
  std::optional<std::string> prog;
  std::optional<std::string> term;
  std::string post;
};

struct Document {
  QuantalePtr quantale;
  std::map<std::string, FinType> types;
  std::map<std::string, SumType> sums;
  std::map<std::string, Mat> matrices;
  std::map<std::string, Comonoid> predicates;
  std::map<std::string, Program> programs;
  /// State type of each program, inferred from the names it uses. Absent when
  /// the program mentions no atom or guard.
  std::map<std::string, std::optional<FinType>> program_types;
  std::vector<Assertion> assertions;

  /// Atoms are the square matrices over `state`, predicates those on it.
  Env env_for(const FinType& state) const;
};

/// `selector` is "boolean", "tropical", "natural", {"heyting": {...}} or
/// {"language": [...]}.
QuantalePtr parse_quantale(const nlohmann::json& selector);
/// Same, from command-line text: a bare kind name or a JSON object.
QuantalePtr parse_quantale(const std::string& text);

QElem parse_scalar(const Quantale& q, const nlohmann::json& j);
nlohmann::json scalar_to_json(const Quantale& q, const QElem& e);

Program parse_program(const nlohmann::json& j, const std::string& key = "program");
nlohmann::json program_to_json(const Program& p);

nlohmann::json mat_to_json(const Mat& m);
nlohmann::json comonoid_to_json(const Comonoid& c);

/// Throws DocumentError. A non-null `quantale_override` replaces the
/// document's own selector.
Document load_document(const nlohmann::json& j,
                       const QuantalePtr& quantale_override = nullptr);
Document load_document_file(const std::filesystem::path& path,
                            const QuantalePtr& quantale_override = nullptr);

}  // namespace quantrel
