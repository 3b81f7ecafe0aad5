#include "quantrel/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quantrel/document.hpp"
#include "quantrel/flow.hpp"
#include "quantrel/gcl.hpp"

namespace quantrel {

using nlohmann::json;

std::string format_mat(const Mat& m) {
  const Quantale& q = m.q();
  std::vector<std::vector<std::string>> cells(m.rows() + 1);
  cells[0].push_back("");
  for (const auto& l : m.dst().labels()) cells[0].push_back(l);
  for (std::size_t y = 0; y < m.rows(); ++y) {
    cells[y + 1].push_back(m.src().label(y));
    for (std::size_t x = 0; x < m.cols(); ++x)
      cells[y + 1].push_back(q.format(m.at(y, x)));
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << m.src().name() << " -> " << m.dst().name() << '\n';
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        line += row[c] + std::string(width[c] - row[c].size(), ' ');
      } else {
        line += "  " + std::string(width[c] - row[c].size(), ' ') + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string format_comonoid(const Comonoid& c) {
  std::ostringstream out;
  if (c.quantale()->kind() == QuantaleKind::boolean) {
    out << '{';
    const auto members = c.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      out << (i ? ", " : "") << members[i];
    out << '}';
  } else {
    out << '[';
    for (std::size_t i = 0; i < c.diag().size(); ++i)
      out << (i ? ", " : "") << c.type().label(i) << ": "
          << c.quantale()->format(c.at(i));
    out << ']';
  }
  return out.str();
}

namespace {

struct Options {
  std::string path;
  std::string quantale;
  bool json = false;
  std::string prog;
  std::string pred;
  std::string matrix;
  std::string type;
};

Document load(const Options& o) {
  QuantalePtr q;
  if (!o.quantale.empty()) q = parse_quantale(o.quantale);
  return load_document_file(o.path, q);
}

// A program name, or failing that a matrix used as a single atom.
struct Term {
  Mat mat;
  std::string label;
};

Term resolve_term(const Document& doc, const std::string& name,
                  const std::optional<FinType>& hint) {
  if (auto it = doc.programs.find(name); it != doc.programs.end()) {
    const auto& inferred = doc.program_types.at(name);
    std::optional<FinType> state = inferred ? inferred : hint;
    if (!state) {
      throw DocumentError(name, "cannot infer the state type of program '" +
                                    name + "'; pass --type");
    }
    if (inferred && hint && !(*inferred == *hint)) {
      throw DocumentError(name, "program '" + name + "' runs on '" +
                                    inferred->name() + "', not '" +
                                    hint->name() + "'");
    }
    return {compile(it->second, doc.env_for(*state)), name};
  }
  if (auto it = doc.matrices.find(name); it != doc.matrices.end()) {
    return {it->second, name};
  }
  throw DocumentError(name, "no program or matrix named '" + name + "'");
}

const Comonoid& predicate(const Document& doc, const std::string& name) {
  auto it = doc.predicates.find(name);
  if (it == doc.predicates.end()) {
    throw DocumentError(name, "undeclared predicate '" + name + "'");
  }
  return it->second;
}

const Mat& matrix(const Document& doc, const std::string& name) {
  auto it = doc.matrices.find(name);
  if (it == doc.matrices.end()) {
    throw DocumentError(name, "undeclared matrix '" + name + "'");
  }
  return it->second;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Document doc = load(o);
  json results = json::array();
  bool all = true;
  for (const auto& a : doc.assertions) {
    const Comonoid& pre = doc.predicates.at(a.pre);
    const Comonoid& post = doc.predicates.at(a.post);
    const std::string what = a.prog ? *a.prog : *a.term;
    const Mat term = a.prog ? resolve_term(doc, *a.prog, pre.type()).mat
                            : doc.matrices.at(*a.term);
    const Verdict v = check_triple(pre, term, post);
    all = all && v.holds;
    if (o.json) {
      json r = {{"pre", a.pre}, {"post", a.post}, {"holds", v.holds}};
      r[a.prog ? "prog" : "term"] = what;
      if (v.counterexample) r["counterexample"] = *v.counterexample;
      results.push_back(r);
    } else {
      out << (v.holds ? "HOLDS" : "FAILS") << "  {" << a.pre << "} " << what
          << " {" << a.post << "}";
      if (v.counterexample) out << "  counterexample: " << *v.counterexample;
      out << '\n';
    }
  }
  if (o.json) out << json{{"holds", all}, {"results", results}}.dump(2) << '\n';
  return all ? kOk : kFails;
}

int cmd_transformer(const Options& o, std::ostream& out, bool strongest) {
  const Document doc = load(o);
  const Comonoid& p = predicate(doc, o.pred);
  const Term t = resolve_term(doc, o.prog, p.type());
  const Comonoid result = strongest ? sp(t.mat, p) : wlp(t.mat, p);
  if (o.json) {
    out << comonoid_to_json(result).dump(2) << '\n';
  } else {
    out << format_comonoid(result) << '\n';
  }
  return kOk;
}

void print_mat(const Options& o, const Mat& m, std::ostream& out) {
  if (o.json) {
    out << mat_to_json(m).dump(2) << '\n';
  } else {
    out << format_mat(m);
  }
}

int cmd_star(const Options& o, std::ostream& out) {
  const Document doc = load(o);
  print_mat(o, closure(matrix(doc, o.matrix)).mat(), out);
  return kOk;
}

int cmd_dump(const Options& o, std::ostream& out) {
  const Document doc = load(o);
  print_mat(o, matrix(doc, o.matrix), out);
  return kOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
  const Document doc = load(o);
  if (!doc.programs.count(o.prog)) {
    throw DocumentError(o.prog, "undeclared program '" + o.prog + "'");
  }
  std::optional<FinType> hint;
  if (!o.type.empty()) {
    auto it = doc.types.find(o.type);
    if (it == doc.types.end()) {
      throw DocumentError(o.type, "undeclared type '" + o.type + "'");
    }
    hint = it->second;
  }
  print_mat(o, resolve_term(doc, o.prog, hint).mat, out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Check Hoare triples and predicate transformers over "
               "quantale-valued relations"};
  app.name("quantrel");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--quantale", o.quantale,
                 "Override the document quantale (kind name or JSON object)");
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* check = app.add_subcommand("check", "Check every assertion");
  check->add_option("document", o.path)->required();

  auto* spc = app.add_subcommand("sp", "Strongest postcondition");
  auto* wlpc = app.add_subcommand("wlp", "Weakest liberal precondition");
  for (auto* c : {spc, wlpc}) {
    c->add_option("document", o.path)->required();
    c->add_option("program", o.prog, "Program or matrix name")->required();
    c->add_option("predicate", o.pred)->required();
  }

  auto* star = app.add_subcommand("star", "Reflexive-transitive closure");
  auto* dump = app.add_subcommand("dump", "Print a matrix");
  for (auto* c : {star, dump}) {
    c->add_option("document", o.path)->required();
    c->add_option("matrix", o.matrix)->required();
  }

  auto* comp = app.add_subcommand("compile", "Print a program's matrix");
  comp->add_option("document", o.path)->required();
  comp->add_option("program", o.prog)->required();
  comp->add_option("--type", o.type,
                   "State type, for programs that mention no atom or guard");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*spc) return cmd_transformer(o, out, true);
    if (*wlpc) return cmd_transformer(o, out, false);
    if (*star) return cmd_star(o, out);
    if (*dump) return cmd_dump(o, out);
    if (*comp) return cmd_compile(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace quantrel
