#include "recon/weights.hpp"

#include "recon/errors.hpp"
#include "recon/fundamental.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace recon {

namespace {

std::mutex sigma_mutex;
std::map<std::tuple<int, int, int, int>, RationalFunction> sigma_cache;

RationalFunction sigma_impl(int mm, int mp, int ks, int k);

RationalFunction sigma_cached(int mm, int mp, int ks, int k) {
  {
    std::lock_guard<std::mutex> lock(sigma_mutex);
    auto it = sigma_cache.find({mm, mp, ks, k});
    if (it != sigma_cache.end()) return it->second;
  }
  RationalFunction v = sigma_impl(mm, mp, ks, k);
  std::lock_guard<std::mutex> lock(sigma_mutex);
  sigma_cache.emplace(std::make_tuple(mm, mp, ks, k), v);
  return v;
}

RationalFunction sigma_impl(int mm, int mp, int ks, int k) {
  if (ks == 1) return sigma_level1(Stencil(mm, mp), k);
  RationalFunction sum;
  for (int ls = std::max(0, k - 1); ls <= std::min(ks - 1, k); ++ls)
    sum = sum + sigma_cached(mm, mp, ks - 1, ls) * sigma_cached(mm - ls, mp - (ks - 1) + ls, 1, k - ls);
  return sum;
}

} // namespace

RationalFunction sigma_level1(const Stencil& s, int k) {
  if (s.intervals() < 2)
    throw std::invalid_argument("sigma_level1: requires a stencil of M >= 2 intervals");
  if (k != 0 && k != 1) throw std::invalid_argument("sigma_level1: k must be 0 or 1");
  if (k == 0)
    return RationalFunction(alpha_recon(s, -s.m_minus),
                            alpha_recon(Stencil(s.m_minus, s.m_plus - 1), -s.m_minus));
  return RationalFunction(alpha_recon(s, s.m_plus),
                          alpha_recon(Stencil(s.m_minus - 1, s.m_plus), s.m_plus));
}

RationalFunction sigma(const Subdivision& sd, int k) {
  if (k < 0 || k > sd.ks) throw std::invalid_argument("sigma: substencil index out of range");
  if (sd.ks == 0) return RationalFunction(Rational(1));
  return sigma_cached(sd.stencil.m_minus, sd.stencil.m_plus, sd.ks, k);
}

std::vector<WeightFunction> sigma_cache_snapshot() {
  std::lock_guard<std::mutex> lock(sigma_mutex);
  std::vector<WeightFunction> out;
  out.reserve(sigma_cache.size());
  for (const auto& [key, value] : sigma_cache) {
    const auto& [mm, mp, ks, k] = key;
    out.push_back(WeightFunction{Subdivision(Stencil(mm, mp), ks), k, value});
  }
  return out;
}

void sigma_cache_restore(const std::vector<WeightFunction>& entries) {
  std::lock_guard<std::mutex> lock(sigma_mutex);
  for (const auto& e : entries)
    sigma_cache.emplace(
        std::make_tuple(e.sd.stencil.m_minus, e.sd.stencil.m_plus, e.sd.ks, e.k), e.value);
}

PoleSet pole_set(const Subdivision& sd) {
  if (sd.ks < 1) throw std::invalid_argument("pole_set: requires ks >= 1");
  Poly den_product = Poly::constant(Rational(1));
  for (int k = 0; k <= sd.ks; ++k) {
    const RationalFunction f = sigma(sd, k);
    den_product = den_product * f.den();
  }
  Poly distinct = squarefree_part(den_product);

  PoleSet out;
  out.sd = sd;
  out.poles = sturm_isolate(distinct);

  // Every pole is real: the denominators divide products of alpha edge
  // polynomials whose roots are all real; verify computationally anyway.
  int total_deg = 0, total_real = 0;
  for (int k = 0; k <= sd.ks; ++k) {
    const RationalFunction f = sigma(sd, k);
    total_deg += f.den().degree();
    for (const auto& [factor, mult] : squarefree_decomposition(f.den()))
      total_real += mult * count_distinct_real_roots(factor);
  }
  if (total_real != total_deg)
    throw CertificationError("pole_set: a reduced denominator has non-real roots");

  // No pole at any half-integer across the stencil span.
  for (int n = -sd.stencil.m_minus - 1; n <= sd.stencil.m_plus + 1; ++n) {
    Rational half = Rational(static_cast<long>(n)) + Rational(1, 2);
    if (distinct(half) == 0)
      throw CertificationError("pole_set: pole at half-integer " + to_string(half));
  }

  // Containment in the superset of level-1 edge-polynomial roots named by
  // the recursion.
  Poly superset = Poly::constant(Rational(1));
  for (int L = 0; L <= sd.ks - 1; ++L)
    for (int ls = 0; ls <= L; ++ls) {
      Stencil edge(sd.stencil.m_minus - 1 - ls, sd.stencil.m_plus - L + ls);
      superset = superset * alpha_recon(edge, edge.m_plus);
    }
  Poly sf_superset = squarefree_part(superset);
  Poly g = poly_gcd(distinct, sf_superset);
  if (g.degree() != distinct.degree())
    throw CertificationError("pole_set: poles not contained in the level-1 edge-root superset");
  return out;
}

std::vector<Rational> weights_at(const Subdivision& sd, const Rational& xi) {
  std::vector<Rational> out;
  out.reserve(sd.ks + 1);
  for (int k = 0; k <= sd.ks; ++k) {
    RationalFunction f = sigma(sd, k);
    if (f.den()(xi) == 0)
      throw PoleError("weights_at: xi = " + to_string(xi) +
                      " is a pole of the weight-function family");
    out.push_back(f(xi));
  }
  return out;
}

std::vector<Rational> oracle_weights_at(const Subdivision& sd, const Rational& xi) {
  const int n = sd.ks + 1;
  const int M = sd.stencil.intervals();
  if (sd.ks == 0) return {Rational(1)};
  // Rows: consistency, then error elimination for orders M-ks+1 .. M.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
  for (int k = 0; k < n; ++k) a[0][k] = 1;
  a[0][n] = 1;
  for (int row = 1; row < n; ++row) {
    const int order = M - sd.ks + row;
    for (int k = 0; k < n; ++k)
      a[row][k] = lambda_recon(sd.substencil(k), order)(xi);
    a[row][n] = 0;
  }
  // Exact Gaussian elimination with partial pivoting by nonzero entry.
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n)
      throw SingularSystemError("oracle_weights_at: singular system at xi = " + to_string(xi));
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (int j = col; j <= n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> w(n);
  for (int k = 0; k < n; ++k) w[k] = a[k][n];
  return w;
}

} // namespace recon
