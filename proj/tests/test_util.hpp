#pragma once

#include "recon/poly.hpp"
#include "recon/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace testutil {

using recon::Poly;
using recon::Rational;

// Independent exact linear solver for the small in-test oracles.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// splitmix64-driven deterministic rationals for property tests
struct Rng {
  std::uint64_t state;
  std::uint64_t next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long next_long(long lo, long hi) { // inclusive
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational next_rational(long span = 10, long max_den = 12) {
    return recon::make_rational(next_long(-span, span), next_long(1, max_den));
  }
  Poly next_poly(int max_deg, long span = 9) {
    std::vector<Rational> c(static_cast<std::size_t>(next_long(0, max_deg)) + 1);
    for (auto& x : c) x = next_rational(span);
    return Poly{std::move(c)};
  }
};

} // namespace testutil
