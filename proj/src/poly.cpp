#include "recon/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace recon {

namespace {
const Rational kZero(0);
} // namespace

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly{std::vector<Rational>{c}}; }

Poly Poly::monomial(int power, const Rational& c) {
  if (power < 0) throw std::invalid_argument("Poly::monomial: negative power");
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return Poly{std::move(v)};
}

const Rational& Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return kZero;
  return c_[power];
}

Rational Poly::leading_coeff() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly{std::move(d)};
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return Poly{};
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return Poly{std::move(a)};
}

Poly Poly::shifted(const Rational& c) const {
  // Horner in (xi + c)
  Poly shift{c, Rational(1)};
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * shift + Poly::constant(*it);
  return r;
}

Poly Poly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Poly{std::move(v)};
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly{std::move(r)};
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c == 0) return Poly{};
  std::vector<Rational> r(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = c * p.c_[i];
  return Poly{std::move(r)};
}

Poly operator*(const Poly& p, const Rational& c) { return c * p; }

Poly operator/(const Poly& p, const Rational& c) {
  if (c == 0) throw std::invalid_argument("Poly: division by zero scalar");
  return Rational(Rational(1) / c) * p;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lead = b.leading_coeff();
  if (static_cast<int>(rem.size()) - 1 < db) return {Poly{}, a};
  std::vector<Rational> quo(rem.size() - db, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    rem[i] = 0;
  }
  return {Poly{std::move(quo)}, Poly{std::move(rem)}};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::invalid_argument("poly_exact_div: nonzero remainder");
  return q;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
  std::vector<Integer> out(p.coeffs().size());
  if (p.is_zero()) return out;
  Integer den_lcm(1);
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    out[i] = c.get_num() * (den_lcm / c.get_den());
  }
  Integer content(0);
  for (const auto& z : out) content = gcd(content, z);
  if (content > 1)
    for (auto& z : out) z /= content;
  return out;
}

namespace {

Integer int_content(const std::vector<Integer>& v) {
  Integer g(0);
  for (const auto& z : v) g = gcd(g, z);
  return g;
}

void make_primitive(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  Integer g = int_content(v);
  if (g > 1)
    for (auto& z : v) z /= g;
}

// gcd of primitive integer polynomials via a primitive pseudo-remainder
// sequence; result primitive with positive leading coefficient.
std::vector<Integer> int_poly_gcd(std::vector<Integer> a, std::vector<Integer> b) {
  make_primitive(a);
  make_primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
    Integer lead = b.back();
    std::vector<Integer> r = a;
    Integer lead_pow(1);
    for (long i = 0; i <= delta; ++i) lead_pow *= lead;
    for (auto& z : r) z *= lead_pow;
    for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
      if (r[i] == 0) continue;
      Integer f = r[i] / lead; // exact by construction
      long off = i - (static_cast<long>(b.size()) - 1);
      for (std::size_t j = 0; j < b.size(); ++j) r[off + j] -= f * b[j];
    }
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& z : a) z = -z;
  return a;
}

Poly from_integer_coeffs(const std::vector<Integer>& v) {
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return Poly{std::move(c)};
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.leading_coeff();
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly{};
  auto g = int_poly_gcd(primitive_integer_coeffs(a), primitive_integer_coeffs(b));
  return make_monic(from_integer_coeffs(g));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm on the monic normalization.
  Poly f = make_monic(p);
  Poly fp = f.derivative();
  Poly a = poly_gcd(f, fp);
  Poly b = poly_exact_div(f, a);
  Poly c = poly_exact_div(fp, a);
  Poly d = c - b.derivative();
  int mult = 1;
  while (b.degree() >= 1) {
    Poly g = poly_gcd(b, d); // monic, never zero here
    if (g.degree() >= 1) out.emplace_back(g, mult);
    b = poly_exact_div(b, g);
    c = poly_exact_div(d, g);
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() < 1) return p.is_zero() ? p : Poly::constant(Rational(1));
  Poly f = make_monic(p);
  Poly g = poly_gcd(f, f.derivative());
  if (g.degree() < 1) return f;
  return poly_exact_div(f, g);
}

} // namespace recon
