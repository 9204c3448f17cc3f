#pragma once

#include "recon/convexity.hpp"
#include "recon/fundamental.hpp"
#include "recon/poly.hpp"
#include "recon/rational_function.hpp"

#include <json.hpp>

#include <string>

namespace recon {

/// Human-readable polynomial in xi, e.g. "13/12 - xi^2".  A positive
/// decimal_digits renders each coefficient with that many significant digits
/// instead of exactly.
std::string poly_to_text(const Poly& p, int decimal_digits = 0);
std::string poly_to_latex(const Poly& p);
std::string ratfun_to_text(const RationalFunction& f);
std::string ratfun_to_latex(const RationalFunction& f);

/// JSON schema: a Rational is the string "p/q" (or "p"); a Poly is the array
/// of coefficient strings, index = power.
nlohmann::json rational_to_json(const Rational& q);
nlohmann::json poly_to_json(const Poly& p);
nlohmann::json ratfun_to_json(const RationalFunction& f);
nlohmann::json interval_to_json(const IsolatingInterval& iv, int decimal_digits = 0);
nlohmann::json certificate_to_json(const RootCertificate& cert, int decimal_digits = 0);

Rational rational_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
RationalFunction ratfun_from_json(const nlohmann::json& j);

} // namespace recon
