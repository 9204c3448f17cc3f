#pragma once

#include "recon/errors.hpp"
#include "recon/poly.hpp"

namespace recon {

/// Reduced quotient of two polynomials: gcd(num, den) constant and den monic,
/// so equality of values implies coefficient-wise equality of the
/// representation.  The zero function is 0/1.
class RationalFunction {
public:
  RationalFunction(); // zero
  RationalFunction(Poly num, Poly den); // reduces; throws on zero denominator
  /* implicit */ RationalFunction(const Poly& p);
  /* implicit */ RationalFunction(const Rational& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value; throws PoleError when the reduced denominator vanishes.
  Rational operator()(const Rational& x) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

private:
  void reduce();
  Poly num_;
  Poly den_;
};

inline RationalFunction ratfun_reduce(Poly num, Poly den) {
  return RationalFunction(std::move(num), std::move(den));
}

} // namespace recon
