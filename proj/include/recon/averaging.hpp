#pragma once

#include "recon/poly.hpp"

namespace recon {

/// Deconvolution coefficients: tau_0 = 1, odd entries vanish, and
/// tau_{2k} = sum_{s=1..k} -tau_{2k-2s} / (2^{2s} (2s+1)!).
/// Generated by (x/2)/sinh(x/2).  Memoized, thread-safe; n must be >= 0.
Rational tau(int n);

/// q(xi) = integral of p over [xi-1/2, xi+1/2].  Degree and leading
/// coefficient are preserved.
Poly sliding_average(const Poly& p);

/// Inverse of sliding_average on polynomials: sum_k tau_{2k} p^(2k), the
/// series being finite (2k <= deg p).
Poly deconvolve(const Poly& p);

} // namespace recon
