#include "recon/rational_function.hpp"

#include "recon/rational.hpp"

#include <utility>

namespace recon {

RationalFunction::RationalFunction() : num_{}, den_{Poly::constant(Rational(1))} {}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("RationalFunction: zero denominator");
  reduce();
}

RationalFunction::RationalFunction(const Poly& p)
    : num_(p), den_(Poly::constant(Rational(1))) {}

RationalFunction::RationalFunction(const Rational& c)
    : num_(c == 0 ? Poly{} : Poly::constant(c)), den_(Poly::constant(Rational(1))) {}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = poly_exact_div(num_, g);
    den_ = poly_exact_div(den_, g);
  }
  Rational lead = den_.leading_coeff();
  if (lead != 1) {
    den_ = den_ / lead;
    num_ = num_ / lead;
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0)
    throw PoleError("RationalFunction: evaluation at pole xi = " + to_string(x));
  return num_(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw PoleError("RationalFunction: division by zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

} // namespace recon
