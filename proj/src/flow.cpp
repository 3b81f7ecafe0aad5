#include "quantrel/flow.hpp"

#include "quantrel/error.hpp"

namespace quantrel {

namespace {

void require_pre(const Comonoid& v, const Mat& r, std::string_view op) {
  require_same_quantale(v.quantale(), r.quantale(), op);
  if (!(v.type() == r.src())) {
    throw TypeMismatch(std::string(op) + ": precondition on '" +
                       v.type().name() + "' but term starts at '" +
                       r.src().name() + "'");
  }
}

void require_post(const Comonoid& u, const Mat& r, std::string_view op) {
  require_same_quantale(u.quantale(), r.quantale(), op);
  if (!(u.type() == r.dst())) {
    throw TypeMismatch(std::string(op) + ": postcondition on '" +
                       u.type().name() + "' but term ends at '" +
                       r.dst().name() + "'");
  }
}

// Meet (resp. join) of the declared idempotents accepted by `ok`. The defining
// conditions used below are closed under these, so the result is itself the
// least (resp. largest) accepted idempotent.
template <typename Pred>
QElem least_idempotent(const Quantale& q, Pred ok) {
  QElem acc = q.unit();
  for (const auto& e : q.idempotents())
    if (ok(e)) acc = q.meet(acc, e);
  return acc;
}

template <typename Pred>
QElem largest_idempotent(const Quantale& q, Pred ok) {
  QElem acc = q.bottom();
  for (const auto& e : q.idempotents())
    if (ok(e)) acc = q.join(acc, e);
  return acc;
}

}  // namespace

bool is_triple(const Comonoid& v, const Mat& r, const Comonoid& u) {
  require_pre(v, r, "is_triple");
  require_post(u, r, "is_triple");
  return mleq(compose(v.as_mat(), r), compose(r, u.as_mat()));
}

bool is_cotriple(const Comonoid& v, const Mat& r, const Comonoid& u) {
  require_pre(v, r, "is_cotriple");
  require_post(u, r, "is_cotriple");
  return mleq(compose(r, u.as_mat()), compose(v.as_mat(), r));
}

bool HoareTriple::valid() const { return is_triple(pre, term, post); }

HoareTriple compose_triples(const HoareTriple& first,
                            const HoareTriple& second) {
  if (!(first.post == second.pre)) {
    throw InvalidValue("compose_triples: midpoint conditions differ");
  }
  if (!first.valid() || !second.valid()) {
    throw InvalidValue("compose_triples: input triple does not hold");
  }
  return HoareTriple{first.pre, compose(first.term, second.term), second.post};
}

bool in_source_filter(const Comonoid& v, const Mat& r) {
  require_pre(v, r, "in_source_filter");
  return mleq(r, compose(v.as_mat(), r));
}

bool in_target_filter(const Comonoid& u, const Mat& r) {
  require_post(u, r, "in_target_filter");
  return mleq(r, compose(r, u.as_mat()));
}

bool in_source_ideal(const Comonoid& v, const Mat& r) {
  require_pre(v, r, "in_source_ideal");
  return compose(v.as_mat(), r) == mzero(r.src(), r.dst(), r.quantale());
}

bool in_target_ideal(const Comonoid& u, const Mat& r) {
  require_post(u, r, "in_target_ideal");
  return compose(r, u.as_mat()) == mzero(r.src(), r.dst(), r.quantale());
}

Comonoid domain(const Mat& r) {
  const Quantale& q = r.q();
  std::vector<QElem> d;
  for (std::size_t y = 0; y < r.rows(); ++y) {
    d.push_back(least_idempotent(q, [&](const QElem& e) {
      for (std::size_t x = 0; x < r.cols(); ++x)
        if (!q.leq(r.at(y, x), q.tensor(e, r.at(y, x)))) return false;
      return true;
    }));
  }
  return Comonoid(r.src(), r.quantale(), std::move(d));
}

Comonoid range(const Mat& r) {
  const Quantale& q = r.q();
  std::vector<QElem> d;
  for (std::size_t x = 0; x < r.cols(); ++x) {
    d.push_back(least_idempotent(q, [&](const QElem& e) {
      for (std::size_t y = 0; y < r.rows(); ++y)
        if (!q.leq(r.at(y, x), q.tensor(r.at(y, x), e))) return false;
      return true;
    }));
  }
  return Comonoid(r.dst(), r.quantale(), std::move(d));
}

Comonoid kernel(const Mat& r) {
  const Quantale& q = r.q();
  const QElem bot = q.bottom();
  std::vector<QElem> d;
  for (std::size_t y = 0; y < r.rows(); ++y) {
    d.push_back(largest_idempotent(q, [&](const QElem& e) {
      for (std::size_t x = 0; x < r.cols(); ++x)
        if (!(q.tensor(e, r.at(y, x)) == bot)) return false;
      return true;
    }));
  }
  return Comonoid(r.src(), r.quantale(), std::move(d));
}

Comonoid cokernel(const Mat& r) {
  const Quantale& q = r.q();
  const QElem bot = q.bottom();
  std::vector<QElem> d;
  for (std::size_t x = 0; x < r.cols(); ++x) {
    d.push_back(largest_idempotent(q, [&](const QElem& e) {
      for (std::size_t y = 0; y < r.rows(); ++y)
        if (!(q.tensor(r.at(y, x), e) == bot)) return false;
      return true;
    }));
  }
  return Comonoid(r.dst(), r.quantale(), std::move(d));
}

FlowReport flow_report(const Mat& r) {
  FlowReport rep{domain(r), range(r), kernel(r), cokernel(r)};
  rep.total = rep.domain == Comonoid::full(r.src(), r.quantale());
  rep.weakly_total = rep.kernel == Comonoid::empty(r.src(), r.quantale());
  return rep;
}

Comonoid sp(const Mat& r, const Comonoid& v) {
  require_pre(v, r, "sp");
  return range(compose(v.as_mat(), r));
}

Comonoid wlp(const Mat& r, const Comonoid& u) {
  require_post(u, r, "wlp");
  const Quantale& q = r.q();
  std::vector<QElem> d;
  for (std::size_t y = 0; y < r.rows(); ++y) {
    d.push_back(largest_idempotent(q, [&](const QElem& e) {
      for (std::size_t x = 0; x < r.cols(); ++x) {
        if (!q.leq(q.tensor(e, r.at(y, x)), q.tensor(r.at(y, x), u.at(x))))
          return false;
      }
      return true;
    }));
  }
  return Comonoid(r.src(), r.quantale(), std::move(d));
}

Comonoid wlp_via_kernel(const Mat& r, const Comonoid& u) {
  require_post(u, r, "wlp_via_kernel");
  return kernel(compose(r, negation(u).as_mat()));
}

Comonoid dual_direct(const Mat& r, const Comonoid& u) {
  require_post(u, r, "dual_direct");
  return domain(compose(r, u.as_mat()));
}

bool is_coprocess(const Comonoid& v, const Mat& r, const Comonoid& u) {
  require_pre(v, r, "is_coprocess");
  require_post(u, r, "is_coprocess");
  return compose(v.as_mat(), r) == r && compose(r, u.as_mat()) == r;
}

Mat subterm(const Comonoid& v, const Mat& r, const Comonoid& u) {
  require_pre(v, r, "subterm");
  require_post(u, r, "subterm");
  return compose(compose(v.as_mat(), r), u.as_mat());
}

Mat reproduce(const Mat& inputs, const Mat& outputs, const Mat& phi) {
  require_parallel(inputs, outputs, "reproduce");
  return obj_direct(obj_inverse(phi, inputs), outputs);
}

Mat dialectical_fixpoint(const Mat& inputs, const Mat& outputs,
                         const Mat& start, std::size_t max_iters) {
  Mat phi = start;
  for (std::size_t i = 0; i < max_iters; ++i) {
    Mat next = reproduce(inputs, outputs, phi);
    if (next == phi) return phi;
    phi = std::move(next);
  }
  throw Divergence("dialectical fixpoint did not stabilize within " +
                   std::to_string(max_iters) + " steps");
}

}  // namespace quantrel
