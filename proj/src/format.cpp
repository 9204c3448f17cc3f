#include "recon/format.hpp"

#include <sstream>
#include <stdexcept>

namespace recon {

namespace {

std::string term_to_text(const Rational& c, int power, bool latex, int decimal_digits) {
  std::ostringstream os;
  Rational a = abs(c);
  const std::string xi = latex ? "\\xi" : "xi";
  auto coeff_str = [&](const Rational& v) {
    if (decimal_digits > 0) return to_decimal(v, decimal_digits);
    if (latex && v.get_den() != 1)
      return "\\tfrac{" + v.get_num().get_str() + "}{" + v.get_den().get_str() + "}";
    return to_string(v);
  };
  if (power == 0) {
    os << coeff_str(a);
  } else {
    if (a != 1 || decimal_digits > 0) os << coeff_str(a) << (latex ? " " : "*");
    os << xi;
    if (power != 1) os << "^" << (latex ? "{" + std::to_string(power) + "}" : std::to_string(power));
  }
  return os.str();
}

std::string poly_to_string_impl(const Poly& p, bool latex, int decimal_digits) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m <= p.degree(); ++m) {
    const Rational& c = p.coeff(m);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_to_text(c, m, latex, decimal_digits);
  }
  return os.str();
}

} // namespace

std::string poly_to_text(const Poly& p, int decimal_digits) {
  return poly_to_string_impl(p, false, decimal_digits);
}
std::string poly_to_latex(const Poly& p) { return poly_to_string_impl(p, true, 0); }

std::string ratfun_to_text(const RationalFunction& f) {
  if (f.is_polynomial()) return poly_to_text(f.num());
  return "(" + poly_to_text(f.num()) + ") / (" + poly_to_text(f.den()) + ")";
}

std::string ratfun_to_latex(const RationalFunction& f) {
  if (f.is_polynomial()) return poly_to_latex(f.num());
  return "\\frac{" + poly_to_latex(f.num()) + "}{" + poly_to_latex(f.den()) + "}";
}

nlohmann::json rational_to_json(const Rational& q) { return to_string(q); }

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int m = 0; m <= p.degree(); ++m) arr.push_back(to_string(p.coeff(m)));
  return arr;
}

nlohmann::json ratfun_to_json(const RationalFunction& f) {
  return nlohmann::json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

nlohmann::json interval_to_json(const IsolatingInterval& iv, int decimal_digits) {
  nlohmann::json j{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)},
                   {"exact", iv.is_exact()}};
  if (iv.multiplicity != 1) j["multiplicity"] = iv.multiplicity;
  if (decimal_digits > 0) {
    j["lo_decimal"] = to_decimal(iv.lo, decimal_digits);
    j["hi_decimal"] = to_decimal(iv.hi, decimal_digits);
  }
  return j;
}

nlohmann::json certificate_to_json(const RootCertificate& cert, int decimal_digits) {
  nlohmann::json roots = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.roots.size(); ++i) {
    nlohmann::json r = interval_to_json(cert.roots[i], decimal_digits);
    r["window"] = cert.windows[i];
    roots.push_back(std::move(r));
  }
  return nlohmann::json{{"m_minus", cert.stencil.m_minus},
                        {"m_plus", cert.stencil.m_plus},
                        {"ell", cert.ell},
                        {"roots", std::move(roots)},
                        {"integer_roots", cert.integer_roots}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected string");
  return parse_rational(j.get<std::string>());
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly{std::move(c)};
}

RationalFunction ratfun_from_json(const nlohmann::json& j) {
  return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace recon
