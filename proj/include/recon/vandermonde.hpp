#pragma once

#include "recon/poly.hpp"
#include "recon/stencil.hpp"

#include <memory>
#include <vector>

namespace recon {

/// Inverse of the node-power Vandermonde matrix of a stencil.  Convention,
/// fixed once here: entry(m, l) is the element in row m+1 (power) and column
/// l + m_minus + 1 (node l in {-m_minus..m_plus}) of V^{-1}, where
/// V[node][power] = node^power.  Columns of V^{-1} are therefore the
/// coefficient vectors of the fundamental interpolation polynomials.
///
/// Construction computes the matrix twice, by exact Gauss-Jordan elimination
/// and by the unsigned-Stirling closed form for {0..M} composed with the
/// shift to {-m_minus..m_plus}; the two must agree and V * V^{-1} = I is
/// asserted.
class InvVandermonde {
public:
  explicit InvVandermonde(Stencil s);

  const Stencil& stencil() const { return s_; }
  const Rational& entry(int power, int node) const;
  const std::vector<std::vector<Rational>>& rows() const { return w_; }

private:
  Stencil s_;
  std::vector<std::vector<Rational>> w_; // w_[power][node + m_minus]
};

/// Shared, memoized accessor.
std::shared_ptr<const InvVandermonde> inverse_vandermonde(const Stencil& s);

/// nu_{m_minus, m_plus, m, k} = sum_l (V^{-1})_{m+1, l+m_minus+1} l^k.
/// Equals delta_{mk} for 0 <= k <= M.  Requires 0 <= m <= M and k >= 0.
Rational nu(const Stencil& s, int m, int k);

} // namespace recon
