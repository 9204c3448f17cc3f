#include "recon/vandermonde.hpp"

#include "recon/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace recon {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(int n) {
  Matrix I(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

// Exact Gauss-Jordan inverse of the node-power matrix V[node][power] =
// node^power; the result is indexed [power][node].
Matrix invert_by_elimination(const Stencil& s) {
  const int n = s.points();
  Matrix a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    const Rational node(static_cast<long>(i - s.m_minus));
    Rational p(1);
    for (int j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= node;
    }
  }
  Matrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw CertificationError("Vandermonde matrix singular (bug)");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = Rational(1) / a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational g = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  // inv satisfies inv * V = I with V[node][power]; row i of inv follows the
  // power index, column j the node index.
  return inv;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Unsigned Stirling numbers of the first kind, up to row n.
std::vector<std::vector<Integer>> stirling_first(int n) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[i][j] = s[i - 1][j - 1] + Integer(static_cast<long>(i - 1)) * s[i - 1][j];
  return s;
}

// Closed form via unsigned Stirling numbers for the {0..M} stencil, then the
// shift with binomial factors in m_minus.
Matrix invert_by_stirling(const Stencil& s) {
  const int M = s.intervals();
  const int n = M + 1;
  const auto str = stirling_first(M);
  Matrix base(n, std::vector<Rational>(n)); // 1-based formula indices folded to 0-based
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational sum(0);
      for (int k = 1; k <= n; ++k) {
        Integer t = binomial(k - 1, j - 1) * str[k - 1][i - 1];
        if (t == 0) continue;
        sum += Rational(t) / Rational(factorial(k - 1));
      }
      if ((i + j) % 2 == 1) sum = -sum;
      base[i - 1][j - 1] = sum;
    }
  }
  if (s.m_minus == 0) return base;
  Matrix out(n, std::vector<Rational>(n, Rational(0)));
  const Rational mm(static_cast<long>(s.m_minus));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational sum(0);
      Rational mm_pow(1);
      for (int nn = 0; nn <= M + 1 - i; ++nn) {
        sum += mm_pow * Rational(binomial(nn + i - 1, nn)) * base[i + nn - 1][j - 1];
        mm_pow *= mm;
      }
      out[i - 1][j - 1] = sum;
    }
  }
  return out;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const InvVandermonde>> cache;

} // namespace

InvVandermonde::InvVandermonde(Stencil s) : s_(s) {
  w_ = invert_by_elimination(s_);
  Matrix check = invert_by_stirling(s_);
  if (w_ != check)
    throw CertificationError("InvVandermonde: elimination and Stirling paths disagree");
  // V * V^{-1} = I with V[node][power] = node^power.
  const int n = s_.points();
  for (int i = 0; i < n; ++i) {
    const Rational node(static_cast<long>(i - s_.m_minus));
    for (int j = 0; j < n; ++j) {
      Rational sum(0);
      Rational p(1);
      for (int k = 0; k < n; ++k) {
        sum += p * w_[k][j];
        p *= node;
      }
      if (sum != ((i == j) ? 1 : 0))
        throw CertificationError("InvVandermonde: V * V^-1 != I");
    }
  }
}

const Rational& InvVandermonde::entry(int power, int node) const {
  if (power < 0 || power > s_.intervals() || !s_.contains(node))
    throw std::invalid_argument("InvVandermonde::entry: index out of range");
  return w_[power][node + s_.m_minus];
}

std::shared_ptr<const InvVandermonde> inverse_vandermonde(const Stencil& s) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(s.m_minus, s.m_plus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto v = std::make_shared<const InvVandermonde>(s);
  cache.emplace(key, v);
  return v;
}

Rational nu(const Stencil& s, int m, int k) {
  if (m < 0 || m > s.intervals()) throw std::invalid_argument("nu: m out of range");
  if (k < 0) throw std::invalid_argument("nu: k must be >= 0");
  auto v = inverse_vandermonde(s);
  Rational sum(0);
  for (int l = s.left(); l <= s.right(); ++l)
    sum += v->entry(m, l) * pow_int(Rational(static_cast<long>(l)), k);
  return sum;
}

} // namespace recon
