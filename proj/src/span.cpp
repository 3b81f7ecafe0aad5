#include "quantrel/span.hpp"

#include "quantrel/error.hpp"

namespace quantrel {

FinFunction::FinFunction(FinType dom_, FinType cod_,
                         std::vector<std::size_t> map_)
    : dom(std::move(dom_)), cod(std::move(cod_)), map(std::move(map_)) {
  if (map.size() != dom.size()) {
    throw InvalidValue("function on '" + dom.name() + "' needs " +
                       std::to_string(dom.size()) + " images");
  }
  for (auto m : map)
    if (m >= cod.size()) {
      throw InvalidValue("function image " + std::to_string(m) +
                         " is outside '" + cod.name() + "'");
    }
}

FinFunction identity_function(const FinType& t) {
  std::vector<std::size_t> m(t.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return FinFunction(t, t, std::move(m));
}

FinFunction then(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod == g.dom)) {
    throw TypeMismatch("then: '" + f.cod.name() + "' is not '" + g.dom.name() +
                       "'");
  }
  std::vector<std::size_t> m;
  for (auto i : f.map) m.push_back(g(i));
  return FinFunction(f.dom, g.cod, std::move(m));
}

Mat graph(const FinFunction& f) {
  const auto q = boolean_quantale();
  std::vector<QElem> e(f.dom.size() * f.cod.size(), false);
  for (std::size_t i = 0; i < f.dom.size(); ++i) e[i * f.cod.size() + f(i)] = true;
  return Mat(f.dom, f.cod, q, std::move(e));
}

SpanT::SpanT(FinFunction left, FinFunction right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.dom == right_.dom)) {
    throw InvalidValue("span legs start at different apexes ('" +
                       left_.dom.name() + "' vs '" + right_.dom.name() + "')");
  }
}

SpanT identity_span(const FinType& t) {
  return SpanT(identity_function(t), identity_function(t));
}

SpanT span_op(const SpanT& rho) { return SpanT(rho.right(), rho.left()); }

SpanT bottom_span(const FinType& src, const FinType& dst) {
  const FinType apex("0", {});
  return SpanT(FinFunction(apex, src, {}), FinFunction(apex, dst, {}));
}

SpanT top_span(const FinType& src, const FinType& dst) {
  std::vector<std::string> labels;
  std::vector<std::size_t> l, r;
  for (std::size_t y = 0; y < src.size(); ++y)
    for (std::size_t x = 0; x < dst.size(); ++x) {
      labels.push_back("(" + src.label(y) + "," + dst.label(x) + ")");
      l.push_back(y);
      r.push_back(x);
    }
  const FinType apex(src.name() + "*" + dst.name(), std::move(labels));
  return SpanT(FinFunction(apex, src, std::move(l)),
               FinFunction(apex, dst, std::move(r)));
}

namespace {

void require_parallel_spans(const SpanT& s, const SpanT& r,
                            std::string_view op) {
  if (!(s.src() == r.src()) || !(s.dst() == r.dst())) {
    throw TypeMismatch(std::string(op) + ": spans are not parallel");
  }
}

}  // namespace

SpanT span_sum(const SpanT& sigma, const SpanT& rho) {
  require_parallel_spans(sigma, rho, "span_sum");
  std::vector<std::string> labels;
  std::vector<std::size_t> l, r;
  for (std::size_t i = 0; i < sigma.apex().size(); ++i) {
    labels.push_back("0." + sigma.apex().label(i));
    l.push_back(sigma.left()(i));
    r.push_back(sigma.right()(i));
  }
  for (std::size_t i = 0; i < rho.apex().size(); ++i) {
    labels.push_back("1." + rho.apex().label(i));
    l.push_back(rho.left()(i));
    r.push_back(rho.right()(i));
  }
  const FinType apex(sigma.apex().name() + "+" + rho.apex().name(),
                     std::move(labels));
  return SpanT(FinFunction(apex, sigma.src(), std::move(l)),
               FinFunction(apex, sigma.dst(), std::move(r)));
}

SpanT pullback(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod == g.cod)) {
    throw TypeMismatch("pullback: cospan legs end at different types");
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> l, r;
  for (std::size_t y = 0; y < f.dom.size(); ++y)
    for (std::size_t z = 0; z < g.dom.size(); ++z)
      if (f(y) == g(z)) {
        labels.push_back("(" + f.dom.label(y) + "," + g.dom.label(z) + ")");
        l.push_back(y);
        r.push_back(z);
      }
  const FinType apex(f.dom.name() + "x" + g.dom.name(), std::move(labels));
  return SpanT(FinFunction(apex, f.dom, std::move(l)),
               FinFunction(apex, g.dom, std::move(r)));
}

SpanT span_compose(const SpanT& sigma, const SpanT& rho) {
  if (!(sigma.dst() == rho.src())) {
    throw TypeMismatch("span_compose: '" + sigma.dst().name() +
                       "' does not meet '" + rho.src().name() + "'");
  }
  const SpanT p = pullback(sigma.right(), rho.left());
  return SpanT(then(p.left(), sigma.left()), then(p.right(), rho.right()));
}

SpanOrderWitness span_leq(const SpanT& sigma, const SpanT& rho) {
  require_parallel_spans(sigma, rho, "span_leq");
  // A mediator is chosen elementwise: each apex point of sigma needs some
  // apex point of rho with the same pair of leg images. Index a is tried
  // first, so comparing a span with itself yields the identity.
  std::vector<std::size_t> m;
  const auto matches = [&](std::size_t a, std::size_t b) {
    return rho.left()(b) == sigma.left()(a) && rho.right()(b) == sigma.right()(a);
  };
  for (std::size_t a = 0; a < sigma.apex().size(); ++a) {
    std::optional<std::size_t> hit;
    if (a < rho.apex().size() && matches(a, a)) hit = a;
    for (std::size_t b = 0; b < rho.apex().size() && !hit; ++b)
      if (matches(a, b)) hit = b;
    if (!hit) return {};
    m.push_back(*hit);
  }
  return {FinFunction(sigma.apex(), rho.apex(), std::move(m))};
}

bool span_equiv(const SpanT& sigma, const SpanT& rho) {
  return static_cast<bool>(span_leq(sigma, rho)) &&
         static_cast<bool>(span_leq(rho, sigma));
}

SpanT yoneda(const FinFunction& f) {
  return SpanT(identity_function(f.dom), f);
}

bool is_functional_span(const SpanT& rho) {
  const SpanT op = span_op(rho);
  return static_cast<bool>(
             span_leq(identity_span(rho.src()), span_compose(rho, op))) &&
         static_cast<bool>(
             span_leq(span_compose(op, rho), identity_span(rho.dst())));
}

SpanT span_interior(const SpanT& pi) {
  if (!(pi.src() == pi.dst())) {
    throw TypeMismatch("span_interior: expected an endospan");
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> legs;
  for (std::size_t e = 0; e < pi.apex().size(); ++e)
    if (pi.left()(e) == pi.right()(e)) {
      labels.push_back(pi.apex().label(e));
      legs.push_back(pi.left()(e));
    }
  const FinType apex("int(" + pi.apex().name() + ")", std::move(labels));
  return SpanT(FinFunction(apex, pi.src(), legs),
               FinFunction(apex, pi.dst(), legs));
}

SpanDomain span_domain(const SpanT& rho) {
  std::vector<bool> hit(rho.src().size(), false);
  for (auto y : rho.left().map) hit[y] = true;
  SpanDomain out{{}, rho};
  std::vector<std::string> labels;
  std::vector<std::size_t> position(rho.src().size(), 0);
  for (std::size_t y = 0; y < hit.size(); ++y)
    if (hit[y]) {
      position[y] = out.subset.size();
      out.subset.push_back(y);
      labels.push_back(rho.src().label(y));
    }
  const FinType d("dom(" + rho.src().name() + ")", std::move(labels));
  std::vector<std::size_t> l;
  for (auto y : rho.left().map) l.push_back(position[y]);
  out.totalized = SpanT(FinFunction(rho.apex(), d, std::move(l)), rho.right());
  return out;
}

Mat flatten(const SpanT& rho) {
  return compose(transpose(graph(rho.left())), graph(rho.right()));
}

bool beck_check(const FinFunction& f, const FinFunction& g) {
  const SpanT p = pullback(f, g);
  const Mat f_graph = graph(f);
  const Mat g_inverse = transpose(graph(g));
  const Mat ghat_inverse = transpose(graph(p.left()));
  const Mat fhat_graph = graph(p.right());
  const auto q = boolean_quantale();
  const std::size_t n = f.dom.size();
  if (n >= 24) throw Unsupported("beck_check: source too large to enumerate");
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<QElem> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = ((bits >> i) & 1U) != 0;
    const Mat subset = object(f.dom, q, std::move(s));
    const Mat lhs = obj_direct(obj_direct(subset, f_graph), g_inverse);
    const Mat rhs = obj_direct(obj_direct(subset, ghat_inverse), fhat_graph);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace quantrel
