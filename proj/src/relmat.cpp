#include "quantrel/relmat.hpp"

#include <algorithm>
#include <set>

#include "quantrel/error.hpp"

namespace quantrel {

FinType::FinType() : FinType("0", {}) {}

FinType::FinType(std::string name, std::vector<std::string> labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw InvalidValue("type '" + name + "' repeats label '" + l + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(name), std::move(labels)});
}

FinType FinType::unit() {
  static const FinType one("1", {"*"});
  return one;
}

std::optional<std::size_t> FinType::index_of(std::string_view label) const {
  const auto& ls = labels();
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

bool operator==(const FinType& a, const FinType& b) {
  return a.data_ == b.data_ ||
         (a.name() == b.name() && a.labels() == b.labels());
}

void require_same_quantale(const QuantalePtr& a, const QuantalePtr& b,
                           std::string_view op) {
  if (!same_quantale(a, b)) {
    throw DomainMismatch(std::string(op) + ": operands use different quantales (" +
                         a->name() + " vs " + b->name() + ")");
  }
}

namespace {

std::string shape(const Mat& m) {
  return m.src().name() + "->" + m.dst().name();
}

}  // namespace

void require_parallel(const Mat& s, const Mat& r, std::string_view op) {
  require_same_quantale(s.quantale(), r.quantale(), op);
  if (!(s.src() == r.src()) || !(s.dst() == r.dst())) {
    throw TypeMismatch(std::string(op) + ": matrices are not parallel (" +
                       shape(s) + " vs " + shape(r) + ")");
  }
}

Mat::Mat(FinType src, FinType dst, QuantalePtr q)
    : src_(std::move(src)), dst_(std::move(dst)), q_(std::move(q)) {
  entries_.assign(rows() * cols(), q_->bottom());
}

Mat::Mat(FinType src, FinType dst, QuantalePtr q, std::vector<QElem> entries)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      q_(std::move(q)),
      entries_(std::move(entries)) {
  if (entries_.size() != rows() * cols()) {
    throw TypeMismatch("matrix " + shape(*this) + " expects " +
                       std::to_string(rows() * cols()) + " entries, got " +
                       std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) q_->require(e);
}

Mat Mat::with(std::size_t y, std::size_t x, QElem value) const {
  q_->require(value);
  Mat out = *this;
  out.entries_.at(y * cols() + x) = std::move(value);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return same_quantale(a.q_, b.q_) && a.src_ == b.src_ && a.dst_ == b.dst_ &&
         a.entries_ == b.entries_;
}

Mat identity(const FinType& t, const QuantalePtr& q) {
  Mat m(t, t, q);
  std::vector<QElem> e = m.entries();
  for (std::size_t i = 0; i < t.size(); ++i) e[i * t.size() + i] = q->unit();
  return Mat(t, t, q, std::move(e));
}

Mat mzero(const FinType& src, const FinType& dst, const QuantalePtr& q) {
  return Mat(src, dst, q);
}

Mat mtop(const FinType& src, const FinType& dst, const QuantalePtr& q) {
  return Mat(src, dst, q,
             std::vector<QElem>(src.size() * dst.size(), q->top_or_throw()));
}

Mat compose(const Mat& s, const Mat& r) {
  require_same_quantale(s.quantale(), r.quantale(), "compose");
  if (!(s.dst() == r.src())) {
    throw TypeMismatch("compose: " + shape(s) + " cannot be followed by " +
                       shape(r));
  }
  const Quantale& q = s.q();
  std::vector<QElem> out;
  out.reserve(s.rows() * r.cols());
  for (std::size_t z = 0; z < s.rows(); ++z) {
    for (std::size_t x = 0; x < r.cols(); ++x) {
      QElem acc = q.bottom();
      for (std::size_t y = 0; y < s.cols(); ++y) {
        acc = q.join(acc, q.tensor(s.at(z, y), r.at(y, x)));
      }
      out.push_back(std::move(acc));
    }
  }
  return Mat(s.src(), r.dst(), s.quantale(), std::move(out));
}

namespace {

template <typename F>
Mat pointwise(const Mat& s, const Mat& r, std::string_view op, F f) {
  require_parallel(s, r, op);
  std::vector<QElem> out;
  out.reserve(s.entries().size());
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    out.push_back(f(s.entries()[i], r.entries()[i]));
  }
  return Mat(s.src(), s.dst(), s.quantale(), std::move(out));
}

}  // namespace

Mat mjoin(const Mat& s, const Mat& r) {
  const Quantale& q = s.q();
  return pointwise(s, r, "mjoin",
                   [&](const QElem& a, const QElem& b) { return q.join(a, b); });
}

Mat mmeet(const Mat& s, const Mat& r) {
  const Quantale& q = s.q();
  return pointwise(s, r, "mmeet",
                   [&](const QElem& a, const QElem& b) { return q.meet(a, b); });
}

bool mleq(const Mat& s, const Mat& r) {
  require_parallel(s, r, "mleq");
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    if (!s.q().leq(s.entries()[i], r.entries()[i])) return false;
  }
  return true;
}

Mat residual_right(const Mat& s, const Mat& r) {
  require_same_quantale(s.quantale(), r.quantale(), "residual_right");
  if (!(s.dst() == r.dst())) {
    throw TypeMismatch("residual_right: targets differ (" + shape(s) + " vs " +
                       shape(r) + ")");
  }
  const Quantale& q = s.q();
  std::vector<QElem> out;
  out.reserve(s.rows() * r.rows());
  for (std::size_t z = 0; z < s.rows(); ++z) {
    for (std::size_t y = 0; y < r.rows(); ++y) {
      std::vector<QElem> terms;
      terms.reserve(s.cols());
      for (std::size_t x = 0; x < s.cols(); ++x) {
        terms.push_back(q.residual(s.at(z, x), r.at(y, x)));
      }
      out.push_back(q.meet_all(terms));
    }
  }
  return Mat(s.src(), r.src(), s.quantale(), std::move(out));
}

Mat residual_left(const Mat& r, const Mat& t) {
  require_same_quantale(r.quantale(), t.quantale(), "residual_left");
  if (!(r.src() == t.src())) {
    throw TypeMismatch("residual_left: sources differ (" + shape(r) + " vs " +
                       shape(t) + ")");
  }
  const Quantale& q = r.q();
  std::vector<QElem> out;
  out.reserve(r.cols() * t.cols());
  for (std::size_t x = 0; x < r.cols(); ++x) {
    for (std::size_t z = 0; z < t.cols(); ++z) {
      std::vector<QElem> terms;
      terms.reserve(r.rows());
      for (std::size_t y = 0; y < r.rows(); ++y) {
        terms.push_back(q.residual(t.at(y, z), r.at(y, x)));
      }
      out.push_back(q.meet_all(terms));
    }
  }
  return Mat(r.dst(), t.dst(), r.quantale(), std::move(out));
}

Mat transpose(const Mat& r) {
  std::vector<QElem> out;
  out.reserve(r.entries().size());
  for (std::size_t x = 0; x < r.cols(); ++x)
    for (std::size_t y = 0; y < r.rows(); ++y) out.push_back(r.at(y, x));
  return Mat(r.dst(), r.src(), r.quantale(), std::move(out));
}

bool is_adjoint_pair(const Mat& r, const Mat& s) {
  if (!(r.src() == s.dst()) || !(r.dst() == s.src())) {
    throw TypeMismatch("is_adjoint_pair: " + shape(r) + " and " + shape(s) +
                       " are not opposed");
  }
  return mleq(identity(r.src(), r.quantale()), compose(r, s)) &&
         mleq(compose(s, r), identity(r.dst(), r.quantale()));
}

bool is_functional(const Mat& r) { return is_adjoint_pair(r, transpose(r)); }

Functionality classify(const Mat& r) {
  if (!is_functional(r)) return Functionality::none;
  const Mat rt = transpose(r);
  const bool unit_eq = compose(r, rt) == identity(r.src(), r.quantale());
  const bool counit_eq = compose(rt, r) == identity(r.dst(), r.quantale());
  if (unit_eq && counit_eq) return Functionality::inversion;
  if (unit_eq) return Functionality::coreflective;
  if (counit_eq) return Functionality::reflective;
  return Functionality::functional;
}

Mat heyting_direct_image(const Mat& r, const Mat& q) {
  if (!(q.src() == r.src()) || !q.is_square()) {
    throw TypeMismatch("heyting_direct_image: q must be an endoterm on " +
                       r.src().name());
  }
  return residual_left(r, compose(q, r));
}

Mat heyting_inverse_image(const Mat& r, const Mat& p) {
  if (!(p.src() == r.dst()) || !p.is_square()) {
    throw TypeMismatch("heyting_inverse_image: p must be an endoterm on " +
                       r.dst().name());
  }
  return residual_right(compose(r, p), r);
}

Mat obj_direct(const Mat& phi, const Mat& r) {
  if (!(phi.src() == FinType::unit())) {
    throw TypeMismatch("obj_direct: expected an object 1->" + r.src().name());
  }
  return compose(phi, r);
}

Mat obj_inverse(const Mat& psi, const Mat& r) {
  if (!(psi.src() == FinType::unit())) {
    throw TypeMismatch("obj_inverse: expected an object 1->" + r.dst().name());
  }
  return residual_right(psi, r);
}

Mat object(const FinType& t, const QuantalePtr& q, std::vector<QElem> values) {
  return Mat(FinType::unit(), t, q, std::move(values));
}

}  // namespace quantrel
