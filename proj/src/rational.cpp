#include "recon/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace recon {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string num_part, den_part = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num_part = std::string(text);
  } else {
    num_part = std::string(text.substr(0, slash));
    den_part = std::string(text.substr(slash + 1));
  }
  if (!valid_int(num_part) || !valid_int(den_part))
    throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
  if (num_part.front() == '+') num_part.erase(0, 1); // mpz rejects the explicit sign
  if (den_part.front() == '+') den_part.erase(0, 1);
  Integer num(num_part), den(den_part);
  if (den == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
  Rational q(num);
  q /= Rational(den);
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_int(const Rational& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow_int: negative exponent");
  Rational r(1), b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string to_decimal(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("to_decimal: need >= 1 digit");
  if (q == 0) return "0";
  const bool negative = q < 0;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();

  // Decimal exponent e with 10^e <= |q| < 10^{e+1}.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto pow10 = [](long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
  };
  // adjust e by direct comparison
  while (true) {
    // compare |q| with 10^e
    int c;
    if (e >= 0)
      c = cmp(num, den * pow10(e));
    else
      c = cmp(num * pow10(-e), den);
    if (c < 0) {
      --e;
      continue;
    }
    // compare |q| with 10^{e+1}
    int c2;
    if (e + 1 >= 0)
      c2 = cmp(num, den * pow10(e + 1));
    else
      c2 = cmp(num * pow10(-(e + 1)), den);
    if (c2 >= 0) {
      ++e;
      continue;
    }
    break;
  }

  // round(|q| * 10^{sig-1-e}) half away from zero
  long shift = significant_digits - 1 - e;
  Integer scaled_num = num, scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow10(shift);
  else
    scaled_den *= pow10(-shift);
  Integer digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > significant_digits) { // rounding carried over
    ds.pop_back();
    ++e;
  }

  std::string out;
  if (e >= significant_digits || e < -4) {
    out = ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e);
  } else if (e >= 0) {
    out = ds.substr(0, e + 1);
    if (static_cast<int>(ds.size()) > e + 1) out += "." + ds.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + ds;
  }
  return negative ? "-" + out : out;
}

} // namespace recon
