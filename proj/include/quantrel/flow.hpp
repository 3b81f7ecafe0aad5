#pragma once

// Hoare triples and predicate transformers over quantale-valued relations.
//
// With a term r: Y->X, a precondition v on Y and a postcondition u on X, the
// triple {v} r {u} holds when guarding r by v is below corestricting r to u:
//
//     compose(v, r) <= compose(r, u).
//
// sp(r, -) and wlp(r, -) are the lower and upper adjoints characterising
// this relation.

#include <cstddef>

#include "quantrel/relmat.hpp"
#include "quantrel/subtype.hpp"

namespace quantrel {

struct HoareTriple {
  Comonoid pre;
  Mat term;
  Comonoid post;

  bool valid() const;
};

bool is_triple(const Comonoid& v, const Mat& r, const Comonoid& u);
/// Dual constraint: compose(v, r) >= compose(r, u).
bool is_cotriple(const Comonoid& v, const Mat& r, const Comonoid& u);

/// {w} s {v} followed by {v} r {u} gives {w} s;r {u}. Throws InvalidValue if
/// either triple is invalid or the midpoints differ.
HoareTriple compose_triples(const HoareTriple& first, const HoareTriple& second);

// Filter and ideal membership.
bool in_source_filter(const Comonoid& v, const Mat& r);  // v;r >= r
bool in_target_filter(const Comonoid& u, const Mat& r);  // r <= r;u
bool in_source_ideal(const Comonoid& v, const Mat& r);   // v;r = 0
bool in_target_ideal(const Comonoid& u, const Mat& r);   // r;u = 0

/// Least member of the source filter.
Comonoid domain(const Mat& r);
/// Least member of the target filter.
Comonoid range(const Mat& r);
/// Largest member of the source ideal.
Comonoid kernel(const Mat& r);
/// Largest member of the target ideal.
Comonoid cokernel(const Mat& r);

struct FlowReport {
  Comonoid domain;
  Comonoid range;
  Comonoid kernel;
  Comonoid cokernel;
  bool total = false;         // domain is the whole source
  bool weakly_total = false;  // kernel is empty
};

FlowReport flow_report(const Mat& r);

/// Strongest postcondition: range(v;r).
Comonoid sp(const Mat& r, const Comonoid& v);
/// Weakest liberal precondition: the largest v with {v} r {u}.
Comonoid wlp(const Mat& r, const Comonoid& u);
/// kernel(r ; not u). Agrees with wlp when predicates are complemented.
Comonoid wlp_via_kernel(const Mat& r, const Comonoid& u);
/// Weakest dual precondition: domain(r;u).
Comonoid dual_direct(const Mat& r, const Comonoid& u);

/// v;r = r and r;u = r.
bool is_coprocess(const Comonoid& v, const Mat& r, const Comonoid& u);
/// v;r;u.
Mat subterm(const Comonoid& v, const Mat& r, const Comonoid& u);

/// Reproduction operator of the system (inputs, outputs): an object phi on X
/// is sent to obj_direct(obj_inverse(phi, inputs), outputs). Iterates from
/// `start` until a fixpoint is reached; throws Divergence after `max_iters`
/// steps.
Mat dialectical_fixpoint(const Mat& inputs, const Mat& outputs,
                         const Mat& start, std::size_t max_iters);

/// One application of the reproduction operator.
Mat reproduce(const Mat& inputs, const Mat& outputs, const Mat& phi);

}  // namespace quantrel
