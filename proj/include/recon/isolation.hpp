#pragma once

#include "recon/poly.hpp"

#include <vector>

namespace recon {

/// Rational-endpoint interval certified to contain exactly one real root of
/// `poly` (a squarefree polynomial).  lo == hi reports an exact rational
/// root.  `multiplicity` is the root's multiplicity in the polynomial the
/// isolation was requested for.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  Poly poly;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

/// Number of distinct real roots of p (any multiplicities).
int count_distinct_real_roots(const Poly& p);

/// Distinct real roots of p strictly inside (a, b); roots at the endpoints
/// are not counted.  Requires a <= b.
int count_roots_in_open(const Poly& p, const Rational& a, const Rational& b);

/// One interval per distinct real root, pairwise disjoint, sorted by
/// position.  Exact rational roots come out degenerate.
std::vector<IsolatingInterval> sturm_isolate(const Poly& p);

/// As sturm_isolate, restricted to roots strictly inside (a, b).
std::vector<IsolatingInterval> sturm_isolate_in(const Poly& p, const Rational& a,
                                                const Rational& b);

/// Bisection refinement with exact sign evaluation: returns an interval
/// nested in iv around the same root with width <= width.  If iv is already
/// at least as tight (or degenerate) it is returned unchanged.
IsolatingInterval refine_root(const IsolatingInterval& iv, const Rational& width);

/// Orders the real algebraic numbers isolated by a and b: -1, 0, +1.
/// Detects equality exactly (via a gcd certificate when the defining
/// polynomials differ).
int compare_algebraic(const IsolatingInterval& a, const IsolatingInterval& b);

/// Convenience: the isolated root of a compared against a rational point.
int compare_algebraic_to_rational(const IsolatingInterval& a, const Rational& x);

} // namespace recon
