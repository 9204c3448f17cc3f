#include "recon/cli.hpp"

#include "recon/convexity.hpp"
#include "recon/errors.hpp"
#include "recon/format.hpp"
#include "recon/fundamental.hpp"
#include "recon/parallel.hpp"
#include "recon/verify.hpp"
#include "recon/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

namespace recon::cli {

namespace {

using nlohmann::json;

struct WeightsOptions {
  int mm = 0, mp = 0, ks = 0;
  std::string xi;
  std::string format = "text";
  int decimal = 0;
};

struct TableOptions {
  std::string kind;
  int max_m = 8;
  int mm = 0, mp = 0;
  int max_order = 0;
  std::string alpha_kind = "recon";
  std::string format = "text";
  int decimal = 0;
};

std::string render(const Rational& q, int decimal) {
  return decimal > 0 ? to_decimal(q, decimal) : to_string(q);
}

std::string interval_text(const IsolatingInterval& iv, int decimal) {
  if (iv.is_exact()) return render(iv.lo, decimal) + " (exact)";
  return "(" + render(iv.lo, decimal) + ", " + render(iv.hi, decimal) + ")";
}

void print_weights(std::ostream& out, std::ostream& err, const WeightsOptions& opt) {
  Subdivision sd(Stencil(opt.mm, opt.mp), opt.ks);
  const bool have_xi = !opt.xi.empty();
  Rational xi;
  std::vector<Rational> values;
  if (have_xi) {
    xi = parse_rational(opt.xi);
    values = weights_at(sd, xi);
  }

  if (opt.format == "text") {
    if (have_xi) {
      for (int k = 0; k <= sd.ks; ++k) out << (k ? " " : "") << render(values[k], opt.decimal);
      out << "\n";
    } else {
      for (int k = 0; k <= sd.ks; ++k)
        out << "sigma_" << k << " = " << ratfun_to_text(sigma(sd, k)) << "\n";
    }
  } else if (opt.format == "csv") {
    out << "m_minus,m_plus,ks,k,num,den" << (have_xi ? ",value" : "") << "\n";
    for (int k = 0; k <= sd.ks; ++k) {
      RationalFunction f = sigma(sd, k);
      out << opt.mm << "," << opt.mp << "," << opt.ks << "," << k << ",\"";
      for (int i = 0; i <= f.num().degree(); ++i)
        out << (i ? " " : "") << to_string(f.num().coeff(i));
      out << "\",\"";
      for (int i = 0; i <= f.den().degree(); ++i)
        out << (i ? " " : "") << to_string(f.den().coeff(i));
      out << "\"";
      if (have_xi) out << "," << render(values[k], opt.decimal);
      out << "\n";
    }
  } else if (opt.format == "json") {
    json rows = json::array();
    for (int k = 0; k <= sd.ks; ++k) {
      json row = ratfun_to_json(sigma(sd, k));
      row["m_minus"] = opt.mm;
      row["m_plus"] = opt.mp;
      row["ks"] = opt.ks;
      row["k"] = k;
      if (have_xi) {
        row["xi"] = to_string(xi);
        row["value"] = to_string(values[k]);
        if (opt.decimal > 0) row["value_decimal"] = to_decimal(values[k], opt.decimal);
      }
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << "\n";
  } else if (opt.format == "latex") {
    for (int k = 0; k <= sd.ks; ++k) {
      out << "$S_{i," << opt.mm << "," << opt.mp << "}$ & $" << k << "$ & $";
      if (have_xi)
        out << to_string(values[k]);
      else
        out << ratfun_to_latex(sigma(sd, k));
      out << "$ \\\\\n";
    }
  } else {
    throw CLI::ValidationError("--format", "unknown format '" + opt.format + "'");
  }

  if (have_xi) {
    bool all_positive = true;
    for (const auto& v : values)
      if (!(v > 0)) all_positive = false;
    if (!all_positive)
      err << "note: weights are not all positive at xi = " << to_string(xi)
          << "; the combination is not convex there\n";
  }
}

void print_weno_table(std::ostream& out, const TableOptions& opt) {
  const Rational half(1, 2);
  json rows = json::array();
  if (opt.format == "csv") out << "m,m_minus,m_plus,ks,weights\n";
  if (opt.max_m < 2) return;
  auto all = parallel_map<std::vector<Rational>>(
      static_cast<std::size_t>(opt.max_m - 1), [&half](std::size_t i) {
        const int m = static_cast<int>(i) + 2;
        return weights_at(Subdivision(Stencil(m / 2, m - m / 2), (m + 1) / 2), half);
      });
  for (int m = 2; m <= opt.max_m; ++m) {
    const int mm = m / 2;
    Subdivision sd(Stencil(mm, m - mm), (m + 1) / 2);
    const std::vector<Rational>& w = all[static_cast<std::size_t>(m - 2)];
    if (opt.format == "text") {
      out << "M=" << m << " stencil=(" << mm << "," << m - mm << ") ks=" << sd.ks << ":";
      for (const auto& v : w) out << " " << render(v, opt.decimal);
      out << "\n";
    } else if (opt.format == "csv") {
      out << m << "," << mm << "," << m - mm << "," << sd.ks << ",\"";
      for (std::size_t i = 0; i < w.size(); ++i)
        out << (i ? " " : "") << render(w[i], opt.decimal);
      out << "\"\n";
    } else if (opt.format == "json") {
      json row{{"m", m}, {"m_minus", mm}, {"m_plus", m - mm}, {"ks", sd.ks}};
      json values = json::array();
      for (const auto& v : w) values.push_back(to_string(v));
      row["weights"] = std::move(values);
      rows.push_back(std::move(row));
    } else if (opt.format == "latex") {
      // row structure of the published weight tables: stencil id, k_s, weight
      for (std::size_t k = 0; k < w.size(); ++k)
        out << "$S_{i," << mm << "," << m - mm << "}$ & $" << k << "$ & $" << to_string(w[k])
            << "$ \\\\\n";
    } else {
      throw CLI::ValidationError("--format", "unknown format '" + opt.format + "'");
    }
  }
  if (opt.format == "json") out << rows.dump(2) << "\n";
}

void print_alpha_table(std::ostream& out, const TableOptions& opt) {
  Stencil s(opt.mm, opt.mp);
  json rows = json::array();
  if (opt.format == "csv") out << "m_minus,m_plus,ell,kind,coeffs\n";
  for (int l = s.left(); l <= s.right(); ++l) {
    Poly a = opt.alpha_kind == "interp" ? alpha_interp(s, l) : alpha_recon(s, l);
    if (opt.format == "text") {
      out << "ell=" << l << ": " << poly_to_text(a, opt.decimal) << "\n";
    } else if (opt.format == "csv") {
      out << opt.mm << "," << opt.mp << "," << l << "," << opt.alpha_kind << ",\"";
      for (int i = 0; i <= a.degree(); ++i) out << (i ? " " : "") << to_string(a.coeff(i));
      out << "\"\n";
    } else if (opt.format == "json") {
      rows.push_back(json{{"m_minus", opt.mm},
                          {"m_plus", opt.mp},
                          {"ell", l},
                          {"kind", opt.alpha_kind},
                          {"coeffs", poly_to_json(a)}});
    } else if (opt.format == "latex") {
      out << "$\\ell=" << l << "$ & $" << poly_to_latex(a) << "$ \\\\\n";
    } else {
      throw CLI::ValidationError("--format", "unknown format '" + opt.format + "'");
    }
  }
  if (opt.format == "json") out << rows.dump(2) << "\n";
}

void print_error_table(std::ostream& out, const TableOptions& opt) {
  Stencil s(opt.mm, opt.mp);
  const int M = s.intervals();
  const int max_order = opt.max_order > 0 ? opt.max_order : M + 3;
  if (max_order <= M)
    throw CLI::ValidationError("--max-order", "needs at least M+1 = " + std::to_string(M + 1));
  json rows = json::array();
  if (opt.format == "csv") out << "m_minus,m_plus,n,mu_recon,lambda_recon\n";
  for (int n = M + 1; n <= max_order; ++n) {
    Poly mu = mu_recon(s, n), lambda = lambda_recon(s, n);
    if (opt.format == "text") {
      out << "n=" << n << ": mu = " << poly_to_text(mu, opt.decimal)
          << "; lambda = " << poly_to_text(lambda, opt.decimal) << "\n";
    } else if (opt.format == "csv") {
      auto emit = [&](const Poly& p) {
        out << "\"";
        for (int i = 0; i <= p.degree(); ++i) out << (i ? " " : "") << to_string(p.coeff(i));
        out << "\"";
      };
      out << opt.mm << "," << opt.mp << "," << n << ",";
      emit(mu);
      out << ",";
      emit(lambda);
      out << "\n";
    } else if (opt.format == "json") {
      rows.push_back(json{{"m_minus", opt.mm},
                          {"m_plus", opt.mp},
                          {"n", n},
                          {"mu_recon", poly_to_json(mu)},
                          {"lambda_recon", poly_to_json(lambda)}});
    } else if (opt.format == "latex") {
      out << "$n=" << n << "$ & $" << poly_to_latex(mu) << "$ & $" << poly_to_latex(lambda)
          << "$ \\\\\n";
    } else {
      throw CLI::ValidationError("--format", "unknown format '" + opt.format + "'");
    }
  }
  if (opt.format == "json") out << rows.dump(2) << "\n";
}

void print_convexity_table(std::ostream& out, const TableOptions& opt) {
  const int dec = opt.decimal > 0 ? opt.decimal : 12;
  auto rows = interval_table(opt.max_m, pow_int(make_rational(1, 10), dec + 4));
  json jrows = json::array();
  if (opt.format == "csv") out << "m,m_minus,m_plus,ks,lo,hi,length\n";
  for (const auto& r : rows) {
    std::string lo = to_decimal(r.lo.midpoint(), dec);
    std::string hi = to_decimal(r.hi.midpoint(), dec);
    std::string len = to_decimal(r.length_midpoint, dec);
    if (opt.format == "text") {
      out << "M=" << r.m << " stencil=(" << r.stencil.m_minus << "," << r.stencil.m_plus
          << ") ks=" << r.ks << " interval=(" << lo << ", " << hi << ") length=" << len << "\n";
    } else if (opt.format == "csv") {
      out << r.m << "," << r.stencil.m_minus << "," << r.stencil.m_plus << "," << r.ks << ","
          << lo << "," << hi << "," << len << "\n";
    } else if (opt.format == "json") {
      jrows.push_back(json{{"m", r.m},
                           {"m_minus", r.stencil.m_minus},
                           {"m_plus", r.stencil.m_plus},
                           {"ks", r.ks},
                           {"lo", interval_to_json(r.lo, dec)},
                           {"hi", interval_to_json(r.hi, dec)},
                           {"length_decimal", len}});
    } else if (opt.format == "latex") {
      out << "$" << r.m << "$ & $(" << r.stencil.m_minus << "," << r.stencil.m_plus << ")$ & $"
          << r.ks << "$ & $(" << lo << ", " << hi << ")$ & $" << len << "$ \\\\\n";
    } else {
      throw CLI::ValidationError("--format", "unknown format '" + opt.format + "'");
    }
  }
  if (opt.format == "json") out << jrows.dump(2) << "\n";
}

int print_verify(std::ostream& out, const std::string& suite, int max_m) {
  auto reports = verify::run_suites(suite, max_m);
  int failures = 0;
  for (const auto& rep : reports) {
    for (const auto& c : rep.cases) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.pass) out << "  " << c.detail;
      out << "\n";
    }
    failures += rep.failures();
    out << "suite " << rep.suite << ": " << rep.cases.size() - rep.failures() << "/"
        << rep.cases.size() << " cases pass\n";
  }
  return failures == 0 ? 0 : 1;
}

void load_sigma_cache(const std::string& dir, std::ostream& err) {
  std::ifstream in(dir + "/sigma_cache.json");
  if (!in) return;
  try {
    json j;
    in >> j;
    std::vector<WeightFunction> entries;
    for (const auto& row : j.at("sigma")) {
      WeightFunction w{Subdivision(Stencil(row.at("m_minus").get<int>(), row.at("m_plus").get<int>()),
                                   row.at("ks").get<int>()),
                       row.at("k").get<int>(),
                       RationalFunction(poly_from_json(row.at("num")), poly_from_json(row.at("den")))};
      entries.push_back(std::move(w));
    }
    sigma_cache_restore(entries);
  } catch (const std::exception& e) {
    err << "note: ignoring unreadable sigma cache: " << e.what() << "\n";
  }
}

void save_sigma_cache(const std::string& dir, std::ostream& err) {
  try {
    json rows = json::array();
    for (const auto& w : sigma_cache_snapshot()) {
      json row = ratfun_to_json(w.value);
      row["m_minus"] = w.sd.stencil.m_minus;
      row["m_plus"] = w.sd.stencil.m_plus;
      row["ks"] = w.sd.ks;
      row["k"] = w.k;
      rows.push_back(std::move(row));
    }
    std::ofstream out(dir + "/sigma_cache.json");
    out << json{{"sigma", std::move(rows)}}.dump() << "\n";
  } catch (const std::exception& e) {
    err << "note: failed to persist sigma cache: " << e.what() << "\n";
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lagrange reconstruction polynomials, substencil weight-functions, "
               "root certificates, and convexity intervals on uniform grids"};
  app.require_subcommand(1);

  // alpha
  int a_mm = 0, a_mp = 0, a_ell = 0, a_decimal = 0;
  std::string a_kind = "recon", a_format = "text";
  auto* alpha_cmd = app.add_subcommand("alpha", "Print a fundamental polynomial");
  alpha_cmd->add_option("--mm", a_mm, "left extent M-")->required();
  alpha_cmd->add_option("--mp", a_mp, "right extent M+")->required();
  alpha_cmd->add_option("--ell", a_ell, "sample index")->required();
  alpha_cmd->add_option("--kind", a_kind, "interp|recon")->check(CLI::IsMember({"interp", "recon"}));
  alpha_cmd->add_option("--format", a_format, "text|json|latex");
  alpha_cmd->add_option("--decimal", a_decimal, "render coefficients with this many digits");

  // weights
  WeightsOptions wopt;
  auto* weights_cmd = app.add_subcommand("weights", "Print substencil weight-functions");
  weights_cmd->add_option("--mm", wopt.mm, "left extent M-")->required();
  weights_cmd->add_option("--mp", wopt.mp, "right extent M+")->required();
  weights_cmd->add_option("--ks", wopt.ks, "subdivision level")->required();
  weights_cmd->add_option("--xi", wopt.xi, "evaluation point, exact rational p/q");
  weights_cmd->add_option("--format", wopt.format, "text|csv|json|latex");
  weights_cmd->add_option("--decimal", wopt.decimal, "render values with this many digits");

  // table
  TableOptions topt;
  auto* table_cmd = app.add_subcommand("table", "Batch tables");
  table_cmd->add_option("kind", topt.kind, "weno|convexity|alpha|errors")->required()
      ->check(CLI::IsMember({"weno", "convexity", "alpha", "errors"}));
  table_cmd->add_option("--max-m", topt.max_m, "largest stencil width M (weno, convexity)");
  table_cmd->add_option("--mm", topt.mm, "left extent M- (alpha, errors)");
  table_cmd->add_option("--mp", topt.mp, "right extent M+ (alpha, errors)");
  table_cmd->add_option("--alpha-kind", topt.alpha_kind, "interp|recon (alpha)")
      ->check(CLI::IsMember({"interp", "recon"}));
  table_cmd->add_option("--max-order", topt.max_order, "largest error order n (errors)");
  table_cmd->add_option("--format", topt.format, "text|csv|json|latex");
  table_cmd->add_option("--decimal", topt.decimal, "render values with this many digits");

  // roots
  int r_mm = 0, r_mp = 0, r_ell = 0, r_decimal = 0;
  std::string r_width, r_format = "text";
  auto* roots_cmd = app.add_subcommand("roots", "Certified root brackets of alpha_recon");
  roots_cmd->add_option("--mm", r_mm, "left extent M-")->required();
  roots_cmd->add_option("--mp", r_mp, "right extent M+")->required();
  roots_cmd->add_option("--ell", r_ell, "sample index")->required();
  roots_cmd->add_option("--width", r_width, "refine brackets to this rational width");
  roots_cmd->add_option("--format", r_format, "text|json");
  roots_cmd->add_option("--decimal", r_decimal, "render endpoints with this many digits");

  // convexity
  int c_mm = 0, c_mp = 0, c_ks = 0, c_decimal = 12;
  std::string c_width = "1/1000000000000", c_format = "text";
  auto* conv_cmd = app.add_subcommand("convexity", "Certified convexity interval around 1/2");
  conv_cmd->add_option("--mm", c_mm, "left extent M-")->required();
  conv_cmd->add_option("--mp", c_mp, "right extent M+")->required();
  conv_cmd->add_option("--ks", c_ks, "subdivision level")->required();
  conv_cmd->add_option("--width", c_width, "endpoint refinement width (rational)");
  conv_cmd->add_option("--format", c_format, "text|json");
  conv_cmd->add_option("--decimal", c_decimal, "significant digits for decimals");

  // verify
  std::string v_suite = "all";
  int v_max_m = 8;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", v_suite, "identities|roots|consistency|uniqueness|convexity|all")
      ->check(CLI::IsMember({"identities", "roots", "consistency", "uniqueness", "convexity", "all"}));
  verify_cmd->add_option("--max-m", v_max_m, "largest stencil width M");

  std::vector<const char*> argv;
  argv.push_back("recon");
  for (const auto& s : args) argv.push_back(s.c_str());

  const char* cache_dir = std::getenv("RECON_CACHE_DIR");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (cache_dir) load_sigma_cache(cache_dir, err);
    int rc = 0;

    if (*alpha_cmd) {
      Stencil s(a_mm, a_mp);
      Poly p = a_kind == "interp" ? alpha_interp(s, a_ell) : alpha_recon(s, a_ell);
      if (a_format == "text")
        out << poly_to_text(p, a_decimal) << "\n";
      else if (a_format == "json")
        out << poly_to_json(p).dump() << "\n";
      else if (a_format == "latex")
        out << poly_to_latex(p) << "\n";
      else
        throw CLI::ValidationError("--format", "unknown format '" + a_format + "'");
    } else if (*weights_cmd) {
      print_weights(out, err, wopt);
    } else if (*table_cmd) {
      if (topt.kind == "weno")
        print_weno_table(out, topt);
      else if (topt.kind == "convexity")
        print_convexity_table(out, topt);
      else if (topt.kind == "alpha")
        print_alpha_table(out, topt);
      else
        print_error_table(out, topt);
    } else if (*roots_cmd) {
      Rational width(0);
      if (!r_width.empty()) width = parse_rational(r_width);
      RootCertificate cert = certify_roots(Stencil(r_mm, r_mp), r_ell, width);
      if (r_format == "json") {
        out << certificate_to_json(cert, r_decimal).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < cert.roots.size(); ++i)
          out << "window n=" << cert.windows[i] << ": "
              << interval_text(cert.roots[i], r_decimal) << "\n";
        out << "integer roots:";
        if (cert.integer_roots.empty()) out << " none";
        for (int n : cert.integer_roots) out << " " << n;
        out << "\n";
      }
    } else if (*conv_cmd) {
      Subdivision sd(Stencil(c_mm, c_mp), c_ks);
      ConvexityInterval ci = convexity_interval(sd);
      // refine beyond the display precision so the rendered digits are stable
      Rational display_width = pow_int(make_rational(1, 10), c_decimal + 4);
      Rational width = parse_rational(c_width);
      if (display_width < width) width = display_width;
      IsolatingInterval lo = refine_root(ci.lo.root, width);
      IsolatingInterval hi = refine_root(ci.hi.root, width);
      if (c_format == "json") {
        json j{{"m_minus", c_mm}, {"m_plus", c_mp}, {"ks", c_ks},
               {"lo", interval_to_json(lo, c_decimal)},
               {"hi", interval_to_json(hi, c_decimal)},
               {"lo_defining",
                json{{"m_minus", ci.lo.source.m_minus}, {"m_plus", ci.lo.source.m_plus},
                     {"ell", ci.lo.ell}, {"window", ci.lo.window}}},
               {"hi_defining",
                json{{"m_minus", ci.hi.source.m_minus}, {"m_plus", ci.hi.source.m_plus},
                     {"ell", ci.hi.ell}, {"window", ci.hi.window}}}};
        out << j.dump(2) << "\n";
      } else {
        out << "certified interval around xi=1/2: (" << to_decimal(lo.midpoint(), c_decimal)
            << ", " << to_decimal(hi.midpoint(), c_decimal) << ")\n";
        out << "lo: root n=" << ci.lo.window << " of alpha_recon(" << ci.lo.source.m_minus << ","
            << ci.lo.source.m_plus << "; ell=" << ci.lo.ell << "), bracket "
            << interval_text(lo, 0) << "\n";
        out << "hi: root n=" << ci.hi.window << " of alpha_recon(" << ci.hi.source.m_minus << ","
            << ci.hi.source.m_plus << "; ell=" << ci.hi.ell << "), bracket "
            << interval_text(hi, 0) << "\n";
      }
    } else if (*verify_cmd) {
      rc = print_verify(out, v_suite, v_max_m);
    }

    if (cache_dir) save_sigma_cache(cache_dir, err);
    return rc;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    err << "pole error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace recon::cli
