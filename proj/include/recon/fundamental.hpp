#pragma once

#include "recon/isolation.hpp"
#include "recon/poly.hpp"
#include "recon/stencil.hpp"

#include <vector>

namespace recon {

/// Fundamental polynomial of Lagrange interpolation on s: the degree-M
/// polynomial with alpha(n) = delta_{n,ell} on the stencil nodes.
Poly alpha_interp(const Stencil& s, int ell);

/// Same polynomial built from the inverse Vandermonde columns; agrees with
/// the product form exactly (checked by tests).
Poly alpha_interp_vandermonde(const Stencil& s, int ell);

/// Fundamental polynomial of Lagrange reconstruction on s (the reconstruction
/// pair of alpha_interp): production path is the tau / inverse-Vandermonde
/// closed form.  Memoized.
Poly alpha_recon(const Stencil& s, int ell);

/// Verification path: deconvolution of the interpolation polynomial.
Poly alpha_recon_via_pair(const Stencil& s, int ell);

/// Verification path: primitive-function sum over cell interfaces.
Poly alpha_recon_primitive_sum(const Stencil& s, int ell);

/// Truncation-error polynomials: mu multiplies dx^n f^(n)(x_i) in the error
/// expansion about the pivot, lambda multiplies dx^n h^(n)(x) in the
/// expansion about the evaluation point.  Both require n >= M+1.
Poly mu_recon(const Stencil& s, int n);
Poly mu_interp(const Stencil& s, int n);
Poly lambda_recon(const Stencil& s, int n);
Poly lambda_interp(const Stencil& s, int n);

/// sum_l alpha_recon(s, l) * cell_averages[l + m_minus]; the samples are the
/// cell averages on the stencil in node order (M+1 of them).
Poly reconstructing_polynomial(const Stencil& s, const std::vector<Rational>& cell_averages);

/// Certified real roots of alpha_recon(s, ell): exactly M of them, one in
/// each window (n-1/2, n+1/2) for n in the stencil minus {ell}; integer roots
/// are detected exactly and reported as degenerate intervals.
struct RootCertificate {
  Stencil stencil;
  int ell = 0;
  std::vector<IsolatingInterval> roots; // in window order
  std::vector<int> windows;             // window index n for roots[i]
  std::vector<int> integer_roots;
};

/// Throws CertificationError if any window check fails (that would be a bug,
/// not a data-dependent outcome).  Each root interval is refined to at most
/// `width` when width > 0.
RootCertificate certify_roots(const Stencil& s, int ell, const Rational& width = Rational(0));

} // namespace recon
