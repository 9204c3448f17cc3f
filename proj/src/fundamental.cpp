#include "recon/fundamental.hpp"

#include "recon/averaging.hpp"
#include "recon/errors.hpp"
#include "recon/vandermonde.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace recon {

namespace {

void require_node(const Stencil& s, int ell, const char* who) {
  if (!s.contains(ell))
    throw std::invalid_argument(std::string(who) + ": sample index " + std::to_string(ell) +
                                " outside stencil");
}

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::mutex alpha_mutex;
std::map<std::tuple<int, int, int>, Poly> alpha_cache;

} // namespace

Poly alpha_interp(const Stencil& s, int ell) {
  require_node(s, ell, "alpha_interp");
  Poly num = Poly::constant(Rational(1));
  Rational den(1);
  for (int k = s.left(); k <= s.right(); ++k) {
    if (k == ell) continue;
    num = num * Poly{Rational(static_cast<long>(-k)), Rational(1)};
    den *= Rational(static_cast<long>(ell - k));
  }
  return num / den;
}

Poly alpha_interp_vandermonde(const Stencil& s, int ell) {
  require_node(s, ell, "alpha_interp_vandermonde");
  auto v = inverse_vandermonde(s);
  std::vector<Rational> c(s.points());
  for (int m = 0; m <= s.intervals(); ++m) c[m] = v->entry(m, ell);
  return Poly{std::move(c)};
}

Poly alpha_recon(const Stencil& s, int ell) {
  require_node(s, ell, "alpha_recon");
  {
    std::lock_guard<std::mutex> lock(alpha_mutex);
    auto it = alpha_cache.find({s.m_minus, s.m_plus, ell});
    if (it != alpha_cache.end()) return it->second;
  }
  const int M = s.intervals();
  auto v = inverse_vandermonde(s);
  std::vector<Rational> c(M + 1, Rational(0));
  for (int m = 0; m <= M; ++m) {
    Rational sum(0);
    for (int k = 0; 2 * k <= M - m; ++k)
      sum += tau(2 * k) * Rational(factorial(m + 2 * k)) / Rational(factorial(m)) *
             v->entry(m + 2 * k, ell);
    c[m] = sum;
  }
  Poly p{std::move(c)};
  std::lock_guard<std::mutex> lock(alpha_mutex);
  alpha_cache.emplace(std::make_tuple(s.m_minus, s.m_plus, ell), p);
  return p;
}

Poly alpha_recon_via_pair(const Stencil& s, int ell) {
  return deconvolve(alpha_interp(s, ell));
}

Poly alpha_recon_primitive_sum(const Stencil& s, int ell) {
  require_node(s, ell, "alpha_recon_primitive_sum");
  const int M = s.intervals();
  // Interface-indexed sum over primitive-function differences; interfaces are
  // numbered 0..M+1 across the stencil, offset so that q maps to the
  // half-point -m_minus + q - 1/2.
  Poly total;
  for (int m = ell + s.m_minus + 1; m <= M + 1; ++m) {
    Poly num_sum;
    Rational den(1);
    for (int p = 0; p <= M + 1; ++p) {
      if (p == m) continue;
      Poly prod = Poly::constant(Rational(1));
      for (int q = 0; q <= M + 1; ++q) {
        if (q == m || q == p) continue;
        prod = prod * Poly{Rational(static_cast<long>(-q)) + Rational(1, 2) +
                               Rational(static_cast<long>(s.m_minus)),
                           Rational(1)};
      }
      num_sum += prod;
      den *= Rational(static_cast<long>(m - p));
    }
    total += num_sum / den;
  }
  return total;
}

Poly mu_recon(const Stencil& s, int n) {
  const int M = s.intervals();
  if (n <= M) throw std::invalid_argument("mu_recon: requires n >= M+1");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; 2 * k <= n; ++k)
    c[n - 2 * k] += -tau(2 * k) / Rational(factorial(n - 2 * k));
  const Rational n_fact{factorial(n)};
  for (int m = 0; m <= M; ++m) {
    Rational sum(0);
    for (int k = 0; 2 * k <= M - m; ++k)
      sum += tau(2 * k) * nu(s, m + 2 * k, n) * Rational(factorial(m + 2 * k)) /
             (n_fact * Rational(factorial(m)));
    c[m] += sum;
  }
  return Poly{std::move(c)};
}

Poly mu_interp(const Stencil& s, int n) {
  const int M = s.intervals();
  if (n <= M) throw std::invalid_argument("mu_interp: requires n >= M+1");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[n] = Rational(-1);
  for (int m = 0; m <= M; ++m) c[m] += nu(s, m, n);
  return Poly{std::move(c)} / Rational(factorial(n));
}

Poly lambda_recon(const Stencil& s, int n) {
  const int M = s.intervals();
  if (n <= M) throw std::invalid_argument("lambda_recon: requires n >= M+1");
  Poly sum;
  for (int l = 0; l <= n - M - 1; ++l) {
    Poly mono = Poly::monomial(l + 1);
    Poly window = mono.shifted(Rational(-1, 2)) - mono.shifted(Rational(1, 2));
    Rational f = Rational((l % 2 == 0) ? -1 : 1) / Rational(factorial(l + 1));
    sum += mu_recon(s, n - l) * window * f;
  }
  return sum;
}

Poly lambda_interp(const Stencil& s, int n) {
  const int M = s.intervals();
  if (n <= M) throw std::invalid_argument("lambda_interp: requires n >= M+1");
  Poly sum;
  for (int l = 0; l <= n - M - 1; ++l) {
    Poly mono = Poly::monomial(l, Rational((l % 2 == 0) ? 1 : -1) / Rational(factorial(l)));
    sum += mono * mu_interp(s, n - l);
  }
  return sum;
}

Poly reconstructing_polynomial(const Stencil& s, const std::vector<Rational>& cell_averages) {
  if (static_cast<int>(cell_averages.size()) != s.points())
    throw std::invalid_argument("reconstructing_polynomial: expected " +
                                std::to_string(s.points()) + " samples, got " +
                                std::to_string(cell_averages.size()));
  Poly sum;
  for (int l = s.left(); l <= s.right(); ++l)
    sum += alpha_recon(s, l) * cell_averages[l + s.m_minus];
  return sum;
}

RootCertificate certify_roots(const Stencil& s, int ell, const Rational& width) {
  require_node(s, ell, "certify_roots");
  const int M = s.intervals();
  if (M < 1) throw std::invalid_argument("certify_roots: requires M >= 1");
  const Poly p = alpha_recon(s, ell);

  RootCertificate cert;
  cert.stencil = s;
  cert.ell = ell;

  if (count_distinct_real_roots(p) != M)
    throw CertificationError("certify_roots: expected " + std::to_string(M) +
                             " distinct real roots");
  const Poly sf = squarefree_part(p);
  for (int n = s.left(); n <= s.right(); ++n) {
    if (n == ell) continue;
    const Rational half(1, 2);
    const Rational wlo = Rational(static_cast<long>(n)) - half;
    const Rational whi = Rational(static_cast<long>(n)) + half;
    IsolatingInterval root;
    if (p(Rational(static_cast<long>(n))) == 0) {
      const Rational r(static_cast<long>(n));
      root = IsolatingInterval{r, r, sf, 1};
      cert.integer_roots.push_back(n);
      if (count_roots_in_open(p, wlo, whi) != 1)
        throw CertificationError("certify_roots: window of node " + std::to_string(n) +
                                 " does not hold exactly one root");
    } else {
      auto found = sturm_isolate_in(p, wlo, whi);
      if (found.size() != 1)
        throw CertificationError("certify_roots: window of node " + std::to_string(n) +
                                 " holds " + std::to_string(found.size()) + " roots");
      root = found.front();
      if (width > 0) root = refine_root(root, width);
    }
    cert.roots.push_back(root);
    cert.windows.push_back(n);
  }
  return cert;
}

} // namespace recon
