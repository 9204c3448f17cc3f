#pragma once

#include "recon/isolation.hpp"
#include "recon/stencil.hpp"
#include "recon/weights.hpp"

#include <vector>

namespace recon {

/// An interval endpoint that is an algebraic number: a certified root of a
/// named fundamental reconstruction polynomial.  Exact rational endpoints
/// come out as degenerate isolating intervals.
struct AlgebraicEndpoint {
  IsolatingInterval root;  // carries the defining squarefree polynomial
  Stencil source;          // stencil of the defining alpha polynomial
  int ell = 0;             // its sample index
  int window = 0;          // window n of the root
};

/// Open interval (lo, hi) around xi = 1/2 on which every weight-function of
/// sd is certified strictly positive (hence, by consistency, in (0,1)).
struct ConvexityInterval {
  Subdivision sd;
  AlgebraicEndpoint lo;
  AlgebraicEndpoint hi;
};

/// Level-1 interval per the root bounds
///   lo = max over the named alpha roots in window 0,
///   hi = min over the named alpha roots in window 1.
/// Requires M >= 2 and -m_minus <= 0 < 1 <= m_plus.
ConvexityInterval convexity_interval_ks1(const Stencil& s);

/// Intersection of the level-1 intervals over all level-1 subdivisions
/// reached by the recursion; requires is_positive_subdivision(sd).
/// Construction certifies exactly, for every weight-function, that its
/// reduced numerator and denominator have no root strictly inside the
/// interval and that it is positive at an interior sample.
ConvexityInterval convexity_interval(const Subdivision& sd);

/// Exact positivity certificate for every sigma(sd, k) on the open interval
/// (lo, hi); throws CertificationError on failure.
void certify_weights_positive(const Subdivision& sd, const AlgebraicEndpoint& lo,
                              const AlgebraicEndpoint& hi);

/// Endpoint of the mirrored interval under xi -> -xi.
AlgebraicEndpoint reflect_endpoint(const AlgebraicEndpoint& e);

struct IntervalTableRow {
  int m = 0;
  Stencil stencil;
  int ks = 0;
  IsolatingInterval lo; // refined
  IsolatingInterval hi; // refined
  Rational length_midpoint; // midpoint(hi) - midpoint(lo)
};

/// Rows for the standard stencils (m_minus = floor(M/2), ks = ceil(M/2)),
/// M in {2..max_m}, endpoints refined to `width`.
std::vector<IntervalTableRow> interval_table(int max_m,
                                             const Rational& width = Rational(1, 1000000000000L));

} // namespace recon
