#include "quantrel/subtype.hpp"

#include <algorithm>
#include <set>

#include "quantrel/error.hpp"

namespace quantrel {

Comonoid::Comonoid(FinType type, QuantalePtr q, std::vector<QElem> diag)
    : type_(std::move(type)), q_(std::move(q)), diag_(std::move(diag)) {
  if (diag_.size() != type_.size()) {
    throw TypeMismatch("comonoid on '" + type_.name() + "' needs " +
                       std::to_string(type_.size()) + " diagonal entries");
  }
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    q_->require(diag_[i]);
    if (!q_->is_idempotent(diag_[i])) {
      throw InvalidValue("comonoid entry for '" + type_.label(i) + "' (" +
                         q_->format(diag_[i]) +
                         ") is not an idempotent below the unit");
    }
  }
}

Comonoid Comonoid::crisp(const FinType& type, const QuantalePtr& q,
                         std::span<const std::string> members) {
  std::vector<QElem> d(type.size(), q->bottom());
  for (const auto& m : members) {
    auto i = type.index_of(m);
    if (!i) {
      throw Unresolved("type '" + type.name() + "' has no label '" + m + "'");
    }
    d[*i] = q->unit();
  }
  return Comonoid(type, q, std::move(d));
}

Comonoid Comonoid::crisp(const FinType& type, const QuantalePtr& q,
                         std::initializer_list<std::string> members) {
  return crisp(type, q, std::span<const std::string>(members.begin(),
                                                     members.size()));
}

Comonoid Comonoid::full(const FinType& type, const QuantalePtr& q) {
  return Comonoid(type, q, std::vector<QElem>(type.size(), q->unit()));
}

Comonoid Comonoid::empty(const FinType& type, const QuantalePtr& q) {
  return Comonoid(type, q, std::vector<QElem>(type.size(), q->bottom()));
}

Mat Comonoid::as_mat() const {
  Mat m = mzero(type_, type_, q_);
  std::vector<QElem> e = m.entries();
  for (std::size_t i = 0; i < diag_.size(); ++i)
    e[i * diag_.size() + i] = diag_[i];
  return Mat(type_, type_, q_, std::move(e));
}

bool Comonoid::is_crisp() const {
  const QElem unit = q_->unit();
  const QElem bot = q_->bottom();
  return std::all_of(diag_.begin(), diag_.end(), [&](const QElem& e) {
    return e == unit || e == bot;
  });
}

std::vector<std::string> Comonoid::members() const {
  std::vector<std::string> out;
  const QElem unit = q_->unit();
  for (std::size_t i = 0; i < diag_.size(); ++i)
    if (diag_[i] == unit) out.push_back(type_.label(i));
  return out;
}

bool operator==(const Comonoid& a, const Comonoid& b) {
  return same_quantale(a.q_, b.q_) && a.type_ == b.type_ && a.diag_ == b.diag_;
}

namespace {

void require_same(const Comonoid& u, const Comonoid& v, std::string_view op) {
  require_same_quantale(u.quantale(), v.quantale(), op);
  if (!(u.type() == v.type())) {
    throw TypeMismatch(std::string(op) + ": comonoids on different types ('" +
                       u.type().name() + "' vs '" + v.type().name() + "')");
  }
}

}  // namespace

bool leq(const Comonoid& u, const Comonoid& v) {
  require_same(u, v, "leq");
  for (std::size_t i = 0; i < u.diag().size(); ++i)
    if (!u.quantale()->leq(u.at(i), v.at(i))) return false;
  return true;
}

MonoidTerm::MonoidTerm(Mat m) : mat_(std::move(m)) {
  if (!is_monoid(mat_)) {
    throw InvalidValue("matrix on '" + mat_.src().name() +
                       "' is not reflexive and transitive");
  }
}

namespace {

void require_square(const Mat& p, std::string_view op) {
  if (!p.is_square()) {
    throw TypeMismatch(std::string(op) + ": expected an endoterm, got " +
                       p.src().name() + "->" + p.dst().name());
  }
}

}  // namespace

bool is_comonoid(const Mat& p) {
  require_square(p, "is_comonoid");
  const Quantale& q = p.q();
  for (std::size_t y = 0; y < p.rows(); ++y)
    for (std::size_t x = 0; x < p.cols(); ++x)
      if (y != x && !(p.at(y, x) == q.bottom())) return false;
  return mleq(p, identity(p.src(), p.quantale())) && compose(p, p) == p;
}

bool is_monoid(const Mat& p) {
  require_square(p, "is_monoid");
  return mleq(identity(p.src(), p.quantale()), p) && compose(p, p) == p;
}

Comonoid interior(const Mat& p) {
  require_square(p, "interior");
  std::vector<QElem> d;
  d.reserve(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i)
    d.push_back(p.q().scalar_interior(p.at(i, i)));
  return Comonoid(p.src(), p.quantale(), std::move(d));
}

MonoidTerm closure(const Mat& p, std::size_t max_iters) {
  require_square(p, "closure");
  if (!p.q().supports_closure()) {
    throw Unsupported("closure is not computable in the " + p.q().name() +
                      " quantale");
  }
  Mat y = mjoin(identity(p.src(), p.quantale()), p);
  for (std::size_t i = 0; i < max_iters; ++i) {
    Mat next = compose(y, y);
    if (next == y) return MonoidTerm(std::move(y));
    y = std::move(next);
  }
  throw Divergence("closure did not stabilize within " +
                   std::to_string(max_iters) + " squarings");
}

Comonoid comeet(const Comonoid& u, const Comonoid& v) {
  require_same(u, v, "comeet");
  std::vector<QElem> d;
  for (std::size_t i = 0; i < u.diag().size(); ++i)
    d.push_back(u.quantale()->tensor(u.at(i), v.at(i)));
  return Comonoid(u.type(), u.quantale(), std::move(d));
}

Comonoid cojoin(const Comonoid& u, const Comonoid& v) {
  require_same(u, v, "cojoin");
  std::vector<QElem> d;
  for (std::size_t i = 0; i < u.diag().size(); ++i)
    d.push_back(u.quantale()->join(u.at(i), v.at(i)));
  return Comonoid(u.type(), u.quantale(), std::move(d));
}

Comonoid negation(const Comonoid& u) {
  const Quantale& q = *u.quantale();
  const QElem bot = q.bottom();
  std::vector<QElem> d;
  for (const auto& ux : u.diag()) {
    QElem best = bot;
    for (const auto& e : q.idempotents())
      if (q.tensor(e, ux) == bot) best = q.join(best, e);
    d.push_back(std::move(best));
  }
  return Comonoid(u.type(), u.quantale(), std::move(d));
}

Comonoid double_negation(const Comonoid& u) { return negation(negation(u)); }

bool is_regular(const Comonoid& u) { return double_negation(u) == u; }

Comonoid regular_join(const Comonoid& u, const Comonoid& v) {
  return double_negation(cojoin(u, v));
}

Comonoid std_implication(const Comonoid& u, const Comonoid& v) {
  require_same(u, v, "std_implication");
  return interior(residual_left(u.as_mat(), v.as_mat()));
}

}  // namespace quantrel
