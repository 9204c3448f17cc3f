#pragma once

#include "recon/isolation.hpp"
#include "recon/rational_function.hpp"
#include "recon/stencil.hpp"

#include <vector>

namespace recon {

/// Level-1 weight-functions of a stencil with M >= 2:
///   sigma_0 = alpha_recon(s, -m_minus) / alpha_recon({m_minus, m_plus-1}, -m_minus)
///   sigma_1 = alpha_recon(s, +m_plus)  / alpha_recon({m_minus-1, m_plus}, +m_plus)
/// Reduced; sigma_0 + sigma_1 = 1 identically.
RationalFunction sigma_level1(const Stencil& s, int k);

/// Weight-function of substencil k of sd, by the level-by-level recursion on
/// top of sigma_level1.  ks = 0 yields the constant 1.  Stored reduced;
/// memoized on (m_minus, m_plus, ks, k).
RationalFunction sigma(const Subdivision& sd, int k);

struct WeightFunction {
  Subdivision sd;
  int k = 0;
  RationalFunction value;
};

/// Snapshot / restore of the sigma memo cache, for the optional on-disk
/// persistence offered by the CLI.
std::vector<WeightFunction> sigma_cache_snapshot();
void sigma_cache_restore(const std::vector<WeightFunction>& entries);

/// Actual poles of the reduced weight-function family of sd: the distinct
/// real roots of the reduced denominators.  Construction verifies that every
/// pole is real, none sits at a half-integer, and the set is contained in
/// the union of roots of the level-1 edge polynomials of the recursion.
struct PoleSet {
  Subdivision sd;
  std::vector<IsolatingInterval> poles;
};

PoleSet pole_set(const Subdivision& sd);

/// Exact weight values (sigma_k(xi)) for all substencils; they sum to 1.
/// Throws PoleError when any reduced denominator vanishes at xi.
std::vector<Rational> weights_at(const Subdivision& sd, const Rational& xi);

/// Independent verification path: solves the (ks+1) x (ks+1) linear system
/// made of the consistency row and the error-elimination rows
/// sum_k w_k lambda_recon(substencil_k, n)(xi) = 0, n in {M-ks+1..M}.
/// Throws SingularSystemError when the matrix is singular at xi.
std::vector<Rational> oracle_weights_at(const Subdivision& sd, const Rational& xi);

} // namespace recon
