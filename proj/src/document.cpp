#include "quantrel/document.hpp"

#include <fstream>
#include <set>

namespace quantrel {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw DocumentError(key, what);
}

const json& member(const json& obj, const std::string& name,
                   const std::string& key) {
  if (!obj.is_object() || !obj.contains(name)) {
    fail(key, "missing field '" + name + "'");
  }
  return obj.at(name);
}

std::string as_string(const json& j, const std::string& key) {
  if (!j.is_string()) fail(key, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_string_list(const json& j, const std::string& key) {
  if (!j.is_array()) fail(key, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_string(j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

QuantalePtr parse_quantale(const json& selector) {
  const std::string key = "quantale";
  if (selector.is_string()) {
    const auto s = selector.get<std::string>();
    if (s == "boolean") return boolean_quantale();
    if (s == "tropical") return tropical_quantale();
    if (s == "natural") return natural_quantale();
    fail(key, "unknown quantale '" + s + "'");
  }
  if (selector.is_object() && selector.size() == 1) {
    try {
      if (selector.contains("heyting")) {
        const json& t = selector.at("heyting");
        HeytingTable table;
        table.elements =
            as_string_list(member(t, "elements", key + ".heyting"),
                           key + ".heyting.elements");
        const json& order = member(t, "order", key + ".heyting");
        if (!order.is_array()) fail(key + ".heyting.order", "expected pairs");
        for (std::size_t i = 0; i < order.size(); ++i) {
          const std::string k = key + ".heyting.order[" + std::to_string(i) + "]";
          auto p = as_string_list(order[i], k);
          if (p.size() != 2) fail(k, "expected a [lower, upper] pair");
          table.order.emplace_back(p[0], p[1]);
        }
        return heyting_quantale(std::move(table));
      }
      if (selector.contains("language")) {
        return language_quantale(
            as_string_list(selector.at("language"), key + ".language"));
      }
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& e) {
      fail(key, e.what());
    }
  }
  fail(key,
       "expected \"boolean\", \"tropical\", \"natural\", {\"heyting\": ...} "
       "or {\"language\": [...]}");
}

QuantalePtr parse_quantale(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail("quantale", std::string("invalid JSON: ") + e.what());
    }
    return parse_quantale(j);
  }
  return parse_quantale(json(text));
}

QElem parse_scalar(const Quantale& q, const json& j) {
  auto bad = [&](const std::string& what) -> QElem {
    throw InvalidValue("bad " + q.name() + " scalar " + j.dump() + ": " + what);
  };
  switch (q.kind()) {
    case QuantaleKind::boolean:
      if (j.is_boolean()) return j.get<bool>();
      if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v == 0 || v == 1) return v == 1;
      }
      return bad("expected 0 or 1");
    case QuantaleKind::tropical:
      if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) return bad("must be nonnegative");
        return tropical(v);
      }
      if (j.is_string()) return parse_tropical(j.get<std::string>());
      if (j.is_number_float()) {
        return bad("write non-integers as decimal strings, e.g. \"2.5\"");
      }
      return bad("expected a number or \"inf\"");
    case QuantaleKind::natural:
      if (j.is_number_unsigned() ||
          (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        return natural(j.get<std::uint64_t>());
      }
      if (j.is_string() && j.get<std::string>() == "inf") return natural_inf();
      return bad("expected a nonnegative integer or \"inf\"");
    case QuantaleKind::heyting: {
      const auto& h = dynamic_cast<const HeytingQuantale&>(q);
      if (!j.is_string()) return bad("expected a lattice label");
      auto idx = h.find(j.get<std::string>());
      if (!idx) return bad("unknown lattice label");
      return *idx;
    }
    case QuantaleKind::language: {
      if (!j.is_array()) return bad("expected an array of words");
      Language l;
      for (const auto& w : j) {
        if (!w.is_string()) return bad("words must be strings");
        l.words.insert(w.get<std::string>());
      }
      QElem e = l;
      if (!q.contains(e)) return bad("word uses a symbol outside the alphabet");
      return e;
    }
  }
  return bad("unknown quantale");
}

json scalar_to_json(const Quantale& q, const QElem& e) {
  q.require(e);
  switch (q.kind()) {
    case QuantaleKind::boolean:
      return std::get<bool>(e) ? 1 : 0;
    case QuantaleKind::tropical: {
      const auto& t = std::get<TropicalValue>(e);
      if (t.is_infinite()) return "inf";
      if (boost::multiprecision::denominator(t.value()) == 1 &&
          t.value() <= Rational(std::numeric_limits<std::int64_t>::max())) {
        return static_cast<std::int64_t>(
            boost::multiprecision::numerator(t.value()));
      }
      return q.format(e);
    }
    case QuantaleKind::natural: {
      const auto& n = std::get<NaturalValue>(e);
      if (n.is_infinite()) return "inf";
      return n.value();
    }
    case QuantaleKind::heyting:
      return q.format(e);
    case QuantaleKind::language: {
      json arr = json::array();
      for (const auto& w : std::get<Language>(e).words) arr.push_back(w);
      return arr;
    }
  }
  return nullptr;
}

Program parse_program(const json& j, const std::string& key) {
  if (!j.is_object() || j.size() != 1) {
    fail(key, "a program is an object with exactly one of skip, abort, atom, "
              "seq, choice, cond, while");
  }
  const auto& [tag, body] = *j.items().begin();
  const std::string k = key + "." + tag;
  auto list = [&]() {
    if (!body.is_array()) fail(k, "expected an array of programs");
    std::vector<Program> out;
    for (std::size_t i = 0; i < body.size(); ++i)
      out.push_back(parse_program(body[i], k + "[" + std::to_string(i) + "]"));
    return out;
  };
  if (tag == "skip") return Program::skip();
  if (tag == "abort") return Program::abort();
  if (tag == "atom") return Program::atom(as_string(body, k));
  if (tag == "seq") return Program::seq(list());
  if (tag == "choice") return Program::choice(list());
  if (tag == "cond") {
    return Program::cond(as_string(member(body, "if", k), k + ".if"),
                         parse_program(member(body, "then", k), k + ".then"),
                         parse_program(member(body, "else", k), k + ".else"));
  }
  if (tag == "while") {
    return Program::loop(as_string(member(body, "cond", k), k + ".cond"),
                         parse_program(member(body, "body", k), k + ".body"));
  }
  fail(key, "unknown program form '" + tag + "'");
}

namespace {

struct ToJson {
  json operator()(const Skip&) const { return {{"skip", json::object()}}; }
  json operator()(const Abort&) const { return {{"abort", json::object()}}; }
  json operator()(const Atom& a) const { return {{"atom", a.name}}; }
  json operator()(const Seq& s) const {
    json arr = json::array();
    for (const auto& p : s.parts) arr.push_back(program_to_json(p));
    return {{"seq", arr}};
  }
  json operator()(const Choice& c) const {
    json arr = json::array();
    for (const auto& p : c.options) arr.push_back(program_to_json(p));
    return {{"choice", arr}};
  }
  json operator()(const Cond& c) const {
    return {{"cond",
             {{"if", c.guard},
              {"then", program_to_json(c.then_branch)},
              {"else", program_to_json(c.else_branch)}}}};
  }
  json operator()(const While& w) const {
    return {{"while", {{"cond", w.guard}, {"body", program_to_json(w.body)}}}};
  }
};

}  // namespace

json program_to_json(const Program& p) { return std::visit(ToJson{}, p.node().v); }

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t y = 0; y < m.rows(); ++y) {
    json row = json::array();
    for (std::size_t x = 0; x < m.cols(); ++x)
      row.push_back(scalar_to_json(m.q(), m.at(y, x)));
    rows.push_back(row);
  }
  return {{"src", m.src().name()}, {"dst", m.dst().name()}, {"entries", rows}};
}

json comonoid_to_json(const Comonoid& c) {
  if (c.quantale()->kind() == QuantaleKind::boolean) {
    return {{"type", c.type().name()}, {"members", c.members()}};
  }
  json diag = json::array();
  for (const auto& e : c.diag()) diag.push_back(scalar_to_json(*c.quantale(), e));
  return {{"type", c.type().name()}, {"diag", diag}};
}

Env Document::env_for(const FinType& state) const {
  Env env(state, quantale);
  for (const auto& [name, m] : matrices)
    if (m.src() == state && m.dst() == state) env.add_atom(name, m);
  for (const auto& [name, p] : predicates)
    if (p.type() == state) env.add_pred(name, p);
  return env;
}

namespace {

class Loader {
 public:
  Loader(const json& j, const QuantalePtr& override_q) : j_(j) {
    if (!j_.is_object()) fail("$", "document must be a JSON object");
    doc_.quantale = override_q ? override_q
                               : parse_quantale(member(j_, "quantale", "$"));
  }

  Document run() {
    load_types();
    load_matrices();
    load_predicates();
    load_programs();
    load_assertions();
    return std::move(doc_);
  }

 private:
  const json& section(const char* name) {
    static const json kEmpty = json::object();
    if (!j_.contains(name)) return kEmpty;
    const json& s = j_.at(name);
    if (!s.is_object()) fail(name, "expected an object");
    return s;
  }

  const FinType& type_named(const std::string& name, const std::string& key) {
    auto it = doc_.types.find(name);
    if (it == doc_.types.end()) fail(key, "undeclared type '" + name + "'");
    return it->second;
  }

  void load_types() {
    const json& types = section("types");
    for (const auto& [name, body] : types.items()) {
      if (body.is_array()) {
        try {
          doc_.types.emplace(name, FinType(name, as_string_list(body, "types." + name)));
        } catch (const DocumentError&) {
          throw;
        } catch (const Error& e) {
          fail("types." + name, e.what());
        }
      } else if (!(body.is_object() && body.size() == 1 && body.contains("sum"))) {
        fail("types." + name, "expected a label list or {\"sum\": [...]}");
      }
    }
    std::set<std::string> visiting;
    for (const auto& [name, body] : types.items())
      if (body.is_object()) resolve_sum(name, visiting);
  }

  void resolve_sum(const std::string& name, std::set<std::string>& visiting) {
    if (doc_.types.count(name)) return;
    const std::string key = "types." + name;
    if (!visiting.insert(name).second) fail(key, "sum types form a cycle");
    const json& types = j_.at("types");
    std::vector<FinType> parts;
    for (const auto& c : as_string_list(types.at(name).at("sum"), key + ".sum")) {
      if (!types.contains(c)) fail(key + ".sum", "undeclared type '" + c + "'");
      if (types.at(c).is_object()) resolve_sum(c, visiting);
      parts.push_back(doc_.types.at(c));
    }
    try {
      SumType s = make_sum(std::move(parts), doc_.quantale, name);
      doc_.types.emplace(name, s.total());
      doc_.sums.emplace(name, std::move(s));
    } catch (const Error& e) {
      fail(key, e.what());
    }
    visiting.erase(name);
  }

  void load_matrices() {
    for (const auto& [name, body] : section("matrices").items()) {
      const std::string key = "matrices." + name;
      const FinType& src =
          type_named(as_string(member(body, "src", key), key + ".src"), key + ".src");
      const FinType& dst =
          type_named(as_string(member(body, "dst", key), key + ".dst"), key + ".dst");
      const json& rows = member(body, "entries", key);
      if (!rows.is_array() || rows.size() != src.size()) {
        fail(key + ".entries", "expected " + std::to_string(src.size()) +
                                   " rows for type '" + src.name() + "'");
      }
      std::vector<QElem> entries;
      for (std::size_t y = 0; y < rows.size(); ++y) {
        const std::string rk = key + ".entries[" + std::to_string(y) + "]";
        if (!rows[y].is_array() || rows[y].size() != dst.size()) {
          fail(rk, "expected " + std::to_string(dst.size()) +
                       " columns for type '" + dst.name() + "'");
        }
        for (std::size_t x = 0; x < dst.size(); ++x) {
          try {
            entries.push_back(parse_scalar(*doc_.quantale, rows[y][x]));
          } catch (const Error& e) {
            fail(rk + "[" + std::to_string(x) + "]", e.what());
          }
        }
      }
      doc_.matrices.emplace(name, Mat(src, dst, doc_.quantale, std::move(entries)));
    }
  }

  void load_predicates() {
    for (const auto& [name, body] : section("predicates").items()) {
      const std::string key = "predicates." + name;
      const FinType& t = type_named(
          as_string(member(body, "type", key), key + ".type"), key + ".type");
      try {
        if (body.contains("members")) {
          auto members = as_string_list(body.at("members"), key + ".members");
          doc_.predicates.emplace(name,
                                  Comonoid::crisp(t, doc_.quantale, members));
        } else if (body.contains("diag")) {
          const json& d = body.at("diag");
          if (!d.is_array() || d.size() != t.size()) {
            fail(key + ".diag", "expected " + std::to_string(t.size()) + " entries");
          }
          std::vector<QElem> diag;
          for (const auto& e : d) diag.push_back(parse_scalar(*doc_.quantale, e));
          doc_.predicates.emplace(name, Comonoid(t, doc_.quantale, std::move(diag)));
        } else {
          fail(key, "expected 'members' or 'diag'");
        }
      } catch (const DocumentError&) {
        throw;
      } catch (const Error& e) {
        fail(key, e.what());
      }
    }
  }

  // Collects the state type implied by every atom and guard in `p`.
  void infer(const Program& p, const std::string& key,
             std::optional<FinType>& state) {
    auto unify = [&](const FinType& t, const std::string& what) {
      if (state && !(*state == t)) {
        fail(key, what + " is over '" + t.name() + "' but the program runs on '" +
                      state->name() + "'");
      }
      state = t;
    };
    auto guard = [&](const std::string& g) {
      auto it = doc_.predicates.find(g);
      if (it == doc_.predicates.end()) fail(key, "undeclared predicate '" + g + "'");
      unify(it->second.type(), "predicate '" + g + "'");
    };
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Atom>) {
            auto it = doc_.matrices.find(n.name);
            if (it == doc_.matrices.end()) {
              if (n.name == Env::kMagic) return;
              fail(key, "undeclared atom '" + n.name + "'");
            }
            if (!it->second.is_square()) {
              fail(key, "atom '" + n.name + "' is not an endoterm");
            }
            unify(it->second.src(), "atom '" + n.name + "'");
          } else if constexpr (std::is_same_v<N, Seq>) {
            for (const auto& c : n.parts) infer(c, key, state);
          } else if constexpr (std::is_same_v<N, Choice>) {
            for (const auto& c : n.options) infer(c, key, state);
          } else if constexpr (std::is_same_v<N, Cond>) {
            guard(n.guard);
            infer(n.then_branch, key, state);
            infer(n.else_branch, key, state);
          } else if constexpr (std::is_same_v<N, While>) {
            guard(n.guard);
            infer(n.body, key, state);
          }
        },
        p.node().v);
  }

  void load_programs() {
    for (const auto& [name, body] : section("programs").items()) {
      const std::string key = "programs." + name;
      Program p = parse_program(body, key);
      std::optional<FinType> state;
      infer(p, key, state);
      doc_.programs.emplace(name, p);
      doc_.program_types.emplace(name, state);
    }
  }

  const Comonoid& pred_named(const json& a, const char* field,
                             const std::string& key) {
    const std::string k = key + "." + field;
    const std::string name = as_string(member(a, field, key), k);
    auto it = doc_.predicates.find(name);
    if (it == doc_.predicates.end()) fail(k, "undeclared predicate '" + name + "'");
    return it->second;
  }

  void load_assertions() {
    if (!j_.contains("assertions")) return;
    const json& list = j_.at("assertions");
    if (!list.is_array()) fail("assertions", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string key = "assertions[" + std::to_string(i) + "]";
      const json& a = list[i];
      Assertion out;
      const Comonoid& pre = pred_named(a, "pre", key);
      const Comonoid& post = pred_named(a, "post", key);
      out.pre = a.at("pre").get<std::string>();
      out.post = a.at("post").get<std::string>();
      const bool has_prog = a.contains("prog");
      const bool has_term = a.contains("term");
      if (has_prog == has_term) fail(key, "give exactly one of 'prog' or 'term'");
      if (has_prog) {
        const std::string name = as_string(a.at("prog"), key + ".prog");
        auto it = doc_.program_types.find(name);
        if (it == doc_.program_types.end()) {
          fail(key + ".prog", "undeclared program '" + name + "'");
        }
        if (!(pre.type() == post.type())) {
          fail(key, "pre and post of a program must share one state type");
        }
        if (it->second && !(*it->second == pre.type())) {
          fail(key, "program '" + name + "' runs on '" + it->second->name() +
                        "' but the predicates are on '" + pre.type().name() + "'");
        }
        out.prog = name;
      } else {
        const std::string name = as_string(a.at("term"), key + ".term");
        auto it = doc_.matrices.find(name);
        if (it == doc_.matrices.end()) {
          fail(key + ".term", "undeclared matrix '" + name + "'");
        }
        if (!(it->second.src() == pre.type()) || !(it->second.dst() == post.type())) {
          fail(key, "matrix '" + name + "' does not run from '" +
                        pre.type().name() + "' to '" + post.type().name() + "'");
        }
        out.term = name;
      }
      doc_.assertions.push_back(std::move(out));
    }
  }

  const json& j_;
  Document doc_;
};

}  // namespace

Document load_document(const json& j, const QuantalePtr& quantale_override) {
  return Loader(j, quantale_override).run();
}

Document load_document_file(const std::filesystem::path& path,
                            const QuantalePtr& quantale_override) {
  std::ifstream in(path);
  if (!in) fail(path.string(), "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(path.string(), std::string("invalid JSON: ") + e.what());
  }
  return load_document(j, quantale_override);
}

}  // namespace quantrel
