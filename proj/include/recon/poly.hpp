#pragma once

#include "recon/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace recon {

/// Dense univariate polynomial over Rational in the normalized coordinate
/// xi = (x - x_i)/dx.  Coefficient index = power of xi, trailing zeros
/// trimmed; the zero polynomial has an empty coefficient vector and
/// degree() == -1.  Values are immutable in spirit: every operation returns
/// a new polynomial.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(int power, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int power) const;
  Rational leading_coeff() const;

  Rational operator()(const Rational& x) const;

  Poly derivative() const;
  Poly antiderivative() const; // constant of integration 0
  Poly shifted(const Rational& c) const; // p(xi + c)

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& c);
  friend Poly operator/(const Poly& p, const Rational& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
  void trim();
  std::vector<Rational> c_;
};

inline Rational poly_eval(const Poly& p, const Rational& x) { return p(x); }

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division, divisor must be nonzero.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

/// Division known to be exact; throws std::invalid_argument on nonzero
/// remainder.
Poly poly_exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Yun decomposition: pairwise-coprime monic factors with multiplicities,
/// ordered by increasing multiplicity; the product of factor^multiplicity
/// reproduces p up to a constant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Monic product of the distinct irreducible factors of p.
Poly squarefree_part(const Poly& p);

/// p scaled to integer coefficients with content 1 and the sign of the
/// leading coefficient preserved (the scale factor is positive).
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

} // namespace recon
