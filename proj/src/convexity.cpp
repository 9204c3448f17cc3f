#include "recon/convexity.hpp"

#include "recon/errors.hpp"
#include "recon/fundamental.hpp"
#include "recon/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace recon {

namespace {

// The certified root of alpha_recon(s, ell) inside (n-1/2, n+1/2).
AlgebraicEndpoint alpha_root(const Stencil& s, int ell, int n) {
  const Poly p = alpha_recon(s, ell);
  const Poly sf = squarefree_part(p);
  const Rational nr(static_cast<long>(n));
  AlgebraicEndpoint e;
  e.source = s;
  e.ell = ell;
  e.window = n;
  if (p(nr) == 0) {
    e.root = IsolatingInterval{nr, nr, sf, 1};
    return e;
  }
  auto found = sturm_isolate_in(p, nr - Rational(1, 2), nr + Rational(1, 2));
  if (found.size() != 1)
    throw CertificationError("alpha_root: window " + std::to_string(n) +
                             " does not isolate one root");
  e.root = found.front();
  return e;
}

AlgebraicEndpoint max_endpoint(std::vector<AlgebraicEndpoint> cands) {
  AlgebraicEndpoint best = cands.front();
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (compare_algebraic(cands[i].root, best.root) > 0) best = cands[i];
  return best;
}

AlgebraicEndpoint min_endpoint(std::vector<AlgebraicEndpoint> cands) {
  AlgebraicEndpoint best = cands.front();
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (compare_algebraic(cands[i].root, best.root) < 0) best = cands[i];
  return best;
}

// Rational point strictly between the isolated root and 1/2; requires
// root < 1/2.
Rational just_right_of(IsolatingInterval iv) {
  const Rational half(1, 2);
  for (int guard = 0; guard < 2048; ++guard) {
    if (iv.is_exact()) return (iv.lo + half) / 2;
    if (iv.hi < half) return iv.hi;
    iv = refine_root(iv, iv.width() / 2);
  }
  throw CertificationError("inner_bracket: left endpoint refinement stalled");
}

// Rational point strictly between 1/2 and the isolated root; requires
// root > 1/2.
Rational just_left_of(IsolatingInterval iv) {
  const Rational half(1, 2);
  for (int guard = 0; guard < 2048; ++guard) {
    if (iv.is_exact()) return (iv.lo + half) / 2;
    if (iv.lo > half) return iv.lo;
    iv = refine_root(iv, iv.width() / 2);
  }
  throw CertificationError("inner_bracket: right endpoint refinement stalled");
}

// Rational bracket (a, b) with root(lo) < a < 1/2 < b < root(hi).
std::pair<Rational, Rational> inner_bracket(const AlgebraicEndpoint& lo,
                                            const AlgebraicEndpoint& hi) {
  return {just_right_of(lo.root), just_left_of(hi.root)};
}

// Exact certificate that P has no root strictly inside (root(lo), root(hi)).
// Roots equal to an endpoint are allowed (the interval is open); a and b are
// the inner_bracket points.
void certify_root_free(const Poly& P, const AlgebraicEndpoint& lo, const AlgebraicEndpoint& hi,
                       const Rational& a, const Rational& b, const std::string& what) {
  if (P.is_zero()) throw CertificationError(what + ": zero polynomial");
  if (P.degree() < 1) return;
  if (P(a) == 0 || P(b) == 0)
    throw CertificationError(what + ": root at an interior bracket point");
  if (count_roots_in_open(P, a, b) != 0)
    throw CertificationError(what + ": root strictly inside the interval");
  // Left sliver (root(lo), a): any root of P there would have to exceed
  // root(lo); scan the rational cover (lo.root.lo, a).
  if (lo.root.is_exact()) {
    if (count_roots_in_open(P, lo.root.lo, a) != 0)
      throw CertificationError(what + ": root in the left sliver");
  } else {
    for (const auto& r : sturm_isolate_in(P, lo.root.lo, a))
      if (compare_algebraic(r, lo.root) > 0)
        throw CertificationError(what + ": root in the left sliver");
  }
  if (hi.root.is_exact()) {
    if (count_roots_in_open(P, b, hi.root.lo) != 0)
      throw CertificationError(what + ": root in the right sliver");
  } else {
    for (const auto& r : sturm_isolate_in(P, b, hi.root.hi))
      if (compare_algebraic(r, hi.root) < 0)
        throw CertificationError(what + ": root in the right sliver");
  }
}

} // namespace

ConvexityInterval convexity_interval_ks1(const Stencil& s) {
  const int mm = s.m_minus, mp = s.m_plus;
  if (s.intervals() < 2 || !(-mm <= 0 && 1 <= mp))
    throw std::invalid_argument(
        "convexity_interval_ks1: stencil fails the positivity precondition");

  std::vector<AlgebraicEndpoint> lo_cands;
  lo_cands.push_back(alpha_root(s, mp, 0));
  if (mm > 0) {
    lo_cands.push_back(alpha_root(s, -mm, 0));
    lo_cands.push_back(alpha_root(Stencil(mm, mp - 1), -mm, 0));
  }
  std::vector<AlgebraicEndpoint> hi_cands;
  hi_cands.push_back(alpha_root(s, -mm, 1));
  if (mp > 1) {
    hi_cands.push_back(alpha_root(s, mp, 1));
    hi_cands.push_back(alpha_root(Stencil(mm - 1, mp), mp, 1));
  }

  ConvexityInterval out;
  out.sd = Subdivision(s, 1);
  out.lo = max_endpoint(std::move(lo_cands));
  out.hi = min_endpoint(std::move(hi_cands));
  certify_weights_positive(out.sd, out.lo, out.hi);
  return out;
}

ConvexityInterval convexity_interval(const Subdivision& sd) {
  if (!is_positive_subdivision(sd))
    throw std::invalid_argument("convexity_interval: not a positive subdivision");
  std::vector<AlgebraicEndpoint> lo_cands, hi_cands;
  for (int L = 0; L <= sd.ks - 1; ++L)
    for (int ls = 0; ls <= L; ++ls) {
      Stencil sub(sd.stencil.m_minus - ls, sd.stencil.m_plus - L + ls);
      ConvexityInterval level1 = convexity_interval_ks1(sub);
      lo_cands.push_back(level1.lo);
      hi_cands.push_back(level1.hi);
    }
  ConvexityInterval out;
  out.sd = sd;
  out.lo = max_endpoint(std::move(lo_cands));
  out.hi = min_endpoint(std::move(hi_cands));
  certify_weights_positive(sd, out.lo, out.hi);
  return out;
}

void certify_weights_positive(const Subdivision& sd, const AlgebraicEndpoint& lo,
                              const AlgebraicEndpoint& hi) {
  if (compare_algebraic_to_rational(lo.root, Rational(1, 2)) >= 0 ||
      compare_algebraic_to_rational(hi.root, Rational(1, 2)) <= 0)
    throw CertificationError("certify_weights_positive: interval does not contain 1/2");
  auto [a, b] = inner_bracket(lo, hi);
  const Rational sample = (a + b) / 2;
  for (int k = 0; k <= sd.ks; ++k) {
    RationalFunction f = sigma(sd, k);
    const std::string what = "sigma_" + std::to_string(k);
    certify_root_free(f.num() * f.den(), lo, hi, a, b, what);
    Rational v = f(sample);
    if (!(v > 0 && v < 1))
      throw CertificationError(what + ": sample value " + to_string(v) + " outside (0,1)");
  }
}

AlgebraicEndpoint reflect_endpoint(const AlgebraicEndpoint& e) {
  AlgebraicEndpoint r = e;
  std::vector<Rational> c = e.root.poly.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  r.root.poly = Poly{std::move(c)};
  r.root.lo = -e.root.hi;
  r.root.hi = -e.root.lo;
  r.window = -e.window;
  return r;
}

std::vector<IntervalTableRow> interval_table(int max_m, const Rational& width) {
  if (max_m < 2) throw std::invalid_argument("interval_table: max_m must be >= 2");
  return parallel_map<IntervalTableRow>(
      static_cast<std::size_t>(max_m - 1), [&width](std::size_t i) {
        const int m = static_cast<int>(i) + 2;
        const int mm = m / 2;
        Stencil s(mm, m - mm);
        Subdivision sd(s, (m + 1) / 2);
        ConvexityInterval ci = convexity_interval(sd);
        IntervalTableRow row;
        row.m = m;
        row.stencil = s;
        row.ks = sd.ks;
        row.lo = refine_root(ci.lo.root, width);
        row.hi = refine_root(ci.hi.root, width);
        row.length_midpoint = row.hi.midpoint() - row.lo.midpoint();
        return row;
      });
}

} // namespace recon
