#pragma once

#include <vector>

namespace recon {

/// Contiguous point set {-m_minus, ..., +m_plus} in pivot-relative indices on
/// a unit grid. M := m_minus + m_plus >= 0 intervals, M+1 points.  Stencils
/// with m_minus*m_plus < 0 (pivot outside) are representable.
struct Stencil {
  int m_minus = 0;
  int m_plus = 0;

  Stencil() = default;
  Stencil(int mm, int mp); // throws std::invalid_argument if mm + mp < 0

  int intervals() const { return m_minus + m_plus; } // M
  int points() const { return intervals() + 1; }
  int left() const { return -m_minus; }
  int right() const { return m_plus; }
  bool contains(int node) const { return left() <= node && node <= right(); }

  friend bool operator==(const Stencil& a, const Stencil& b) {
    return a.m_minus == b.m_minus && a.m_plus == b.m_plus;
  }
  friend bool operator!=(const Stencil& a, const Stencil& b) { return !(a == b); }
};

/// A stencil together with a subdivision level ks in [0, M-1].  Substencil
/// k is Stencil(m_minus - k, m_plus - ks + k): ks+1 substencils of M-ks+1
/// points each, consecutive ones shifted by one cell.
struct Subdivision {
  Stencil stencil;
  int ks = 0;

  Subdivision() = default;
  Subdivision(Stencil s, int level); // throws unless 0 <= level <= M-1

  Stencil substencil(int k) const; // throws if k outside [0, ks]
  std::vector<Stencil> substencils() const;
};

/// True iff every substencil contains point 0 or point 1, equivalently
/// -m_minus <= 0 < 1 <= m_plus and 1 <= ks <= min(m_minus + 1, m_plus).
bool is_positive_subdivision(const Subdivision& sd);

} // namespace recon
