#include "quantrel/gcl.hpp"

#include "quantrel/error.hpp"
#include "quantrel/flow.hpp"

namespace quantrel {

Program Program::skip() {
  return Program(std::make_shared<const ProgramNode>(ProgramNode{Skip{}}));
}
Program Program::abort() {
  return Program(std::make_shared<const ProgramNode>(ProgramNode{Abort{}}));
}
Program Program::atom(std::string name) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Atom{std::move(name)}}));
}
Program Program::seq(std::vector<Program> parts) {
  return Program(
      std::make_shared<const ProgramNode>(ProgramNode{Seq{std::move(parts)}}));
}
Program Program::choice(std::vector<Program> options) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Choice{std::move(options)}}));
}
Program Program::cond(std::string guard, Program then_branch,
                      Program else_branch) {
  return Program(std::make_shared<const ProgramNode>(ProgramNode{
      Cond{std::move(guard), std::move(then_branch), std::move(else_branch)}}));
}
Program Program::loop(std::string guard, Program body) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{While{std::move(guard), std::move(body)}}));
}

Env::Env(FinType state, QuantalePtr q)
    : state_(std::move(state)), q_(std::move(q)) {}

void Env::add_atom(std::string name, Mat m) {
  require_same_quantale(q_, m.quantale(), "atom '" + name + "'");
  if (!(m.src() == state_) || !(m.dst() == state_)) {
    throw TypeMismatch("atom '" + name + "' is not an endoterm on '" +
                       state_.name() + "'");
  }
  atoms_.insert_or_assign(std::move(name), std::move(m));
}

void Env::add_pred(std::string name, Comonoid p) {
  require_same_quantale(q_, p.quantale(), "predicate '" + name + "'");
  if (!(p.type() == state_)) {
    throw TypeMismatch("predicate '" + name + "' is not on '" +
                       state_.name() + "'");
  }
  preds_.insert_or_assign(std::move(name), std::move(p));
}

Mat Env::atom(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it != atoms_.end()) return it->second;
  if (name == kMagic) return mzero(state_, state_, q_);
  throw Unresolved("unknown atom '" + name + "'");
}

const Comonoid& Env::pred(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw Unresolved("unknown predicate '" + name + "'");
  return it->second;
}

namespace {

struct Compiler {
  const Env& env;
  std::size_t max_iters;

  Mat operator()(const Program& p) const { return std::visit(*this, p.node().v); }

  Mat operator()(const Skip&) const {
    return identity(env.state(), env.quantale());
  }
  Mat operator()(const Abort&) const {
    return mtop(env.state(), env.state(), env.quantale());
  }
  Mat operator()(const Atom& a) const { return env.atom(a.name); }
  Mat operator()(const Seq& s) const {
    Mat acc = identity(env.state(), env.quantale());
    for (const auto& part : s.parts) acc = compose(acc, (*this)(part));
    return acc;
  }
  Mat operator()(const Choice& c) const {
    Mat acc = mzero(env.state(), env.state(), env.quantale());
    for (const auto& opt : c.options) acc = mjoin(acc, (*this)(opt));
    return acc;
  }
  Mat operator()(const Cond& c) const {
    const Comonoid& b = env.pred(c.guard);
    return mjoin(compose(b.as_mat(), (*this)(c.then_branch)),
                 compose(negation(b).as_mat(), (*this)(c.else_branch)));
  }
  Mat operator()(const While& w) const {
    const Comonoid& b = env.pred(w.guard);
    const Mat guarded = compose(b.as_mat(), (*this)(w.body));
    return compose(closure(guarded, max_iters).mat(), negation(b).as_mat());
  }
};

}  // namespace

Mat compile(const Program& p, const Env& env, std::size_t max_iters) {
  return Compiler{env, max_iters}(p);
}

Verdict check_triple(const Comonoid& pre, const Mat& term,
                     const Comonoid& post) {
  Verdict out;
  if (is_triple(pre, term, post)) return out;
  out.holds = false;
  const Quantale& q = term.q();
  if (q.kind() == QuantaleKind::boolean) {
    for (std::size_t y = 0; y < term.rows(); ++y) {
      if (!(pre.at(y) == q.unit())) continue;
      for (std::size_t x = 0; x < term.cols(); ++x) {
        if (term.at(y, x) == q.unit() && !(post.at(x) == q.unit())) {
          out.counterexample = term.src().label(y);
          out.row = y;
          out.col = x;
          return out;
        }
      }
    }
  }
  const Mat lhs = compose(pre.as_mat(), term);
  const Mat rhs = compose(term, post.as_mat());
  for (std::size_t y = 0; y < term.rows(); ++y)
    for (std::size_t x = 0; x < term.cols(); ++x)
      if (!q.leq(lhs.at(y, x), rhs.at(y, x))) {
        out.counterexample =
            "(" + term.src().label(y) + "," + term.dst().label(x) + ")";
        out.row = y;
        out.col = x;
        return out;
      }
  return out;
}

Verdict verify(const Comonoid& pre, const Program& p, const Comonoid& post,
               const Env& env) {
  return check_triple(pre, compile(p, env), post);
}

Verdict verify(const std::string& pre, const Program& p,
               const std::string& post, const Env& env) {
  return verify(env.pred(pre), p, env.pred(post), env);
}

Comonoid program_wlp(const Program& p, const Comonoid& post, const Env& env) {
  return wlp(compile(p, env), post);
}

Comonoid program_sp(const Program& p, const Comonoid& pre, const Env& env) {
  return sp(compile(p, env), pre);
}

}  // namespace quantrel
