#pragma once

// Spans of finite sets, composed by pullback and ordered by mediating maps.

#include <cstddef>
#include <optional>
#include <vector>

#include "quantrel/relmat.hpp"

namespace quantrel {

/// A total function between finite types, as an index array.
struct FinFunction {
  FinType dom;
  FinType cod;
  std::vector<std::size_t> map;

  /// Throws InvalidValue unless `map` sends every element of `dom` into `cod`.
  FinFunction(FinType dom, FinType cod, std::vector<std::size_t> map);

  std::size_t operator()(std::size_t i) const { return map[i]; }
  friend bool operator==(const FinFunction&, const FinFunction&) = default;
};

FinFunction identity_function(const FinType& t);
/// g after f.
FinFunction then(const FinFunction& f, const FinFunction& g);
/// Boolean graph matrix dom -> cod.
Mat graph(const FinFunction& f);

/// Y <- apex -> X.
class SpanT {
 public:
  /// Legs must share their domain (the apex).
  SpanT(FinFunction left, FinFunction right);

  const FinType& apex() const { return left_.dom; }
  const FinType& src() const { return left_.cod; }
  const FinType& dst() const { return right_.cod; }
  const FinFunction& left() const { return left_; }
  const FinFunction& right() const { return right_; }

  friend bool operator==(const SpanT&, const SpanT&) = default;

 private:
  FinFunction left_;
  FinFunction right_;
};

/// Absent mediator means the order does not hold.
struct SpanOrderWitness {
  std::optional<FinFunction> mediator;
  explicit operator bool() const { return mediator.has_value(); }
};

SpanT identity_span(const FinType& t);
/// Leg swap.
SpanT span_op(const SpanT& rho);
/// Empty apex.
SpanT bottom_span(const FinType& src, const FinType& dst);
/// Product apex src x dst.
SpanT top_span(const FinType& src, const FinType& dst);
/// Disjoint union of apexes of parallel spans.
SpanT span_sum(const SpanT& sigma, const SpanT& rho);

/// sigma: Z->Y then rho: Y->X. The apex is the pullback
/// {(s, r) | sigma.right(s) = rho.left(r)} ordered lexicographically.
SpanT span_compose(const SpanT& sigma, const SpanT& rho);

/// Finds m: apex(sigma) -> apex(rho) commuting with both legs.
SpanOrderWitness span_leq(const SpanT& sigma, const SpanT& rho);
bool span_equiv(const SpanT& sigma, const SpanT& rho);

/// Y <-id- Y -f-> X.
SpanT yoneda(const FinFunction& f);
/// Unit and counit of rho against its leg swap, checked at span level.
bool is_functional_span(const SpanT& rho);

/// Equalizer of the legs of an endospan, as a diagonal span.
SpanT span_interior(const SpanT& pi);

struct SpanDomain {
  std::vector<std::size_t> subset;  // image of the left leg, ascending
  SpanT totalized;                  // same apex, left leg onto the image
};
SpanDomain span_domain(const SpanT& rho);

/// Boolean relation: transpose(graph(left)) ; graph(right).
Mat flatten(const SpanT& rho);

/// Pullback of the cospan f: Y->X, g: Z->X, as a span Y <- P -> Z.
SpanT pullback(const FinFunction& f, const FinFunction& g);

/// Checks g^-1(f(S)) = f'(g'^-1(S)) for every subset S of Y, where
/// Y <-g'- P -f'-> Z is the pullback. Direct and inverse images are computed
/// with boolean matrices.
bool beck_check(const FinFunction& f, const FinFunction& g);

}  // namespace quantrel
