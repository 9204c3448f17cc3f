#include "recon/isolation.hpp"

#include "recon/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace recon {

namespace {

// Sturm chain over primitive integer coefficient vectors.  Remainders are
// computed over the rationals and rescaled by a positive factor, which keeps
// coefficients small without disturbing signs.
class SturmChain {
public:
  explicit SturmChain(const Poly& squarefree) {
    std::vector<Integer> s0 = primitive_integer_coeffs(squarefree);
    std::vector<Integer> s1 = primitive_integer_coeffs(squarefree.derivative());
    if (!s0.empty()) chain_.push_back(std::move(s0));
    if (!s1.empty()) chain_.push_back(std::move(s1));
    while (chain_.size() >= 2) {
      const auto& a = chain_[chain_.size() - 2];
      const auto& b = chain_.back();
      std::vector<Integer> r = negated_remainder(a, b);
      if (r.empty()) break;
      chain_.push_back(std::move(r));
    }
  }

  // Sign variations at a rational point, zeros skipped.  Right-continuous in
  // x for squarefree chains, so var(a) - var(b) counts roots in (a, b].
  int variations_at(const Rational& x) const {
    int last = 0, var = 0;
    for (const auto& p : chain_) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++var;
      last = s;
    }
    return var;
  }

  int variations_at_neg_inf() const {
    int last = 0, var = 0;
    for (const auto& p : chain_) {
      int s = sgn(p.back());
      if ((p.size() - 1) % 2 == 1) s = -s;
      if (last != 0 && s != last) ++var;
      last = s;
    }
    return var;
  }

  int variations_at_pos_inf() const {
    int last = 0, var = 0;
    for (const auto& p : chain_) {
      int s = sgn(p.back());
      if (last != 0 && s != last) ++var;
      last = s;
    }
    return var;
  }

  static int sign_at(const std::vector<Integer>& c, const Rational& x) {
    // sign of sum c_i p^i q^{n-i} for x = p/q in lowest terms, q > 0
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    Integer acc = c.back();
    Integer qq(1);
    for (long i = static_cast<long>(c.size()) - 2; i >= 0; --i) {
      qq *= q;
      acc = acc * p + c[static_cast<std::size_t>(i)] * qq;
    }
    return sgn(acc);
  }

private:
  static std::vector<Integer> negated_remainder(const std::vector<Integer>& a,
                                                const std::vector<Integer>& b) {
    // -(a mod b) over Q, rescaled to a primitive integer vector (positive
    // scale only).
    std::vector<Rational> rem(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rem[i] = Rational(a[i]);
    const long db = static_cast<long>(b.size()) - 1;
    const Rational lead{Rational(b.back())};
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
      if (rem[static_cast<std::size_t>(i)] == 0) continue;
      Rational f = rem[static_cast<std::size_t>(i)] / lead;
      for (long j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(i - db + j)] -= f * Rational(b[static_cast<std::size_t>(j)]);
      rem[static_cast<std::size_t>(i)] = 0;
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    Poly r{std::move(rem)};
    auto out = primitive_integer_coeffs(-r);
    return out;
  }

  std::vector<std::vector<Integer>> chain_;
};

// Cauchy bound: every real root lies strictly inside (-B, B).
Rational root_bound(const std::vector<Integer>& c) {
  Integer maxabs(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Integer a = abs(c[i]);
    if (a > maxabs) maxabs = a;
  }
  Integer lead = abs(c.back());
  Rational b = Rational(maxabs) / Rational(lead) + 2;
  return b;
}

struct Isolator {
  const Poly& sf;
  SturmChain chain;
  int multiplicity;
  std::vector<IsolatingInterval>* out;

  void emit_exact(const Rational& r) {
    out->push_back(IsolatingInterval{r, r, sf, multiplicity});
  }

  int sign_at(const Rational& x) const {
    return SturmChain::sign_at(primitive_integer_coeffs(sf), x);
  }

  // roots strictly inside (a, b), endpoints known non-roots, va = var(a),
  // vb = var(b)
  void isolate(const Rational& a, const Rational& b, int va, int vb) {
    const int n = va - vb;
    if (n <= 0) return;
    if (n == 1) {
      out->push_back(IsolatingInterval{a, b, sf, multiplicity});
      return;
    }
    Rational m = (a + b) / 2;
    int vm = chain.variations_at(m);
    if (sf(m) == 0) {
      emit_exact(m);
      isolate(a, m, va, vm + 1); // var is right-continuous: var(m-) = var(m) + 1
      isolate(m, b, vm, vb);
    } else {
      isolate(a, m, va, vm);
      isolate(m, b, vm, vb);
    }
  }
};

void isolate_factor(const Poly& sf, int multiplicity, const Rational& a, const Rational& b,
                    std::vector<IsolatingInterval>& out) {
  if (sf.degree() < 1) return;
  Isolator iso{sf, SturmChain(sf), multiplicity, &out};
  Rational bound = root_bound(primitive_integer_coeffs(sf));
  Rational lo = a, hi = b;
  if (lo < -bound) lo = -bound;
  if (hi > bound) hi = bound;
  if (!(lo < hi)) return;
  // var counts roots in (lo, hi] (var is right-continuous, so a root at lo is
  // never counted); drop hi itself if it is a root.
  int va = iso.chain.variations_at(lo);
  int vb = iso.chain.variations_at(hi);
  int drop = (sf(hi) == 0) ? 1 : 0;
  iso.isolate(lo, hi, va, vb + drop);
}

// Refines iv in place until it no longer contains x (requires root != x).
void refine_away_from(IsolatingInterval& iv, const Rational& x) {
  if (iv.is_exact()) return;
  SturmChain c(iv.poly);
  while (!iv.is_exact() && iv.lo < x && x < iv.hi) {
    Rational m = iv.midpoint();
    if (iv.poly(m) == 0) {
      iv.lo = iv.hi = m;
      break;
    }
    if (c.variations_at(iv.lo) - c.variations_at(m) == 1)
      iv.hi = m;
    else
      iv.lo = m;
  }
}

} // namespace

int count_distinct_real_roots(const Poly& p) {
  if (p.degree() < 1) return 0;
  Poly sf = squarefree_part(p);
  SturmChain c(sf);
  return c.variations_at_neg_inf() - c.variations_at_pos_inf();
}

int count_roots_in_open(const Poly& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  if (!(a <= b)) throw std::invalid_argument("count_roots_in_open: a > b");
  if (a == b) return 0;
  Poly sf = squarefree_part(p);
  SturmChain c(sf);
  int n = c.variations_at(a) - c.variations_at(b);
  if (sf(b) == 0) --n;
  return n;
}

std::vector<IsolatingInterval> sturm_isolate(const Poly& p) {
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1) return out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    Rational b = root_bound(primitive_integer_coeffs(factor));
    isolate_factor(factor, mult, -b, b, out);
  }
  for (auto& iv : out)
    if (!iv.is_exact() && iv.width() > Rational(1, 4)) iv = refine_root(iv, Rational(1, 4));
  // Disjointness across coprime factors: refine overlapping pairs apart.
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
  bool changed = true;
  int guard = 0;
  while (changed && ++guard < 512) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        IsolatingInterval &x = out[i], &y = out[j];
        if (x.hi <= y.lo || y.hi <= x.lo) continue;
        if (x.poly == y.poly) continue; // same factor: already disjoint
        Rational w = x.width() / 2;
        IsolatingInterval rx = refine_root(x, w);
        IsolatingInterval ry = refine_root(y, y.width() / 2);
        x = rx;
        y = ry;
        changed = true;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) {
              return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
            });
  return out;
}

std::vector<IsolatingInterval> sturm_isolate_in(const Poly& p, const Rational& a,
                                                const Rational& b) {
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1 || !(a < b)) return out;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    isolate_factor(factor, mult, a, b, out);
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
  return out;
}

IsolatingInterval refine_root(const IsolatingInterval& iv, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine_root: width must be > 0");
  if (iv.is_exact() || iv.width() <= width) return iv;
  IsolatingInterval r = iv;
  const auto ic = primitive_integer_coeffs(r.poly);
  int sign_lo = SturmChain::sign_at(ic, r.lo);
  if (sign_lo == 0) {
    // Endpoint roots never arise from sturm_isolate; fall back to Sturm
    // bisection if a caller builds such an interval by hand.
    SturmChain c(r.poly);
    while (r.width() > width) {
      Rational m = r.midpoint();
      if (r.poly(m) == 0) return IsolatingInterval{m, m, r.poly, r.multiplicity};
      if (c.variations_at(r.lo) - c.variations_at(m) >= 1)
        r.hi = m;
      else
        r.lo = m;
    }
    return r;
  }
  while (r.width() > width) {
    Rational m = r.midpoint();
    int sm = SturmChain::sign_at(ic, m);
    if (sm == 0) return IsolatingInterval{m, m, r.poly, r.multiplicity};
    if (sm == sign_lo)
      r.lo = m;
    else
      r.hi = m;
  }
  return r;
}

int compare_algebraic(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.is_exact() && b.is_exact()) return cmp(a.lo, b.lo) < 0 ? -1 : (a.lo == b.lo ? 0 : 1);
  if (a.is_exact()) return -compare_algebraic_to_rational(b, a.lo);
  if (b.is_exact()) return compare_algebraic_to_rational(a, b.lo);

  // Equality certificate first: a common root inside the overlap must be
  // both isolated roots at once.
  Rational olo = std::max(a.lo, b.lo), ohi = std::min(a.hi, b.hi);
  if (olo < ohi) {
    Poly g = poly_gcd(a.poly, b.poly);
    if (g.degree() >= 1 && count_roots_in_open(g, olo, ohi) >= 1) return 0;
  }
  IsolatingInterval x = a, y = b;
  for (int iter = 0; iter < 4096; ++iter) {
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    x = refine_root(x, x.width() / 2);
    y = refine_root(y, y.width() / 2);
    if (x.is_exact() && y.is_exact()) return cmp(x.lo, y.lo) < 0 ? -1 : (x.lo == y.lo ? 0 : 1);
    if (x.is_exact()) return -compare_algebraic_to_rational(y, x.lo);
    if (y.is_exact()) return compare_algebraic_to_rational(x, y.lo);
  }
  throw CertificationError("compare_algebraic: failed to separate roots");
}

int compare_algebraic_to_rational(const IsolatingInterval& a, const Rational& x) {
  if (a.is_exact()) return cmp(a.lo, x) < 0 ? -1 : (a.lo == x ? 0 : 1);
  if (a.poly(x) == 0 && a.lo < x && x < a.hi) return 0;
  IsolatingInterval r = a;
  refine_away_from(r, x);
  if (r.is_exact()) return cmp(r.lo, x) < 0 ? -1 : (r.lo == x ? 0 : 1);
  return r.hi <= x ? -1 : 1;
}

} // namespace recon
