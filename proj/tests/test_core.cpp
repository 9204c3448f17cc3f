#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recon/averaging.hpp"
#include "recon/errors.hpp"
#include "recon/isolation.hpp"
#include "recon/poly.hpp"
#include "recon/rational.hpp"
#include "recon/rational_function.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace recon;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// Test-only inverse of sliding_average, independent of the tau series: solve
// the unit-triangular coefficient system by back-substitution on monomial
// images.
Poly deconvolve_oracle(const Poly& p) {
  if (p.is_zero()) return p;
  const int n = p.degree();
  std::vector<Poly> avg_of_monomial(n + 1);
  for (int m = 0; m <= n; ++m) avg_of_monomial[m] = sliding_average(Poly::monomial(m));
  std::vector<Rational> out(n + 1, Rational(0));
  std::vector<Rational> rhs(p.coeffs());
  for (int m = n; m >= 0; --m) {
    out[m] = rhs[m]; // images are unit upper triangular in the power basis
    const Poly& img = avg_of_monomial[m];
    for (int j = 0; j <= img.degree(); ++j) rhs[j] -= out[m] * img.coeff(j);
  }
  return Poly{std::move(out)};
}

} // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(q("3/6")) == "1/2");
  CHECK(to_string(q("-4/2")) == "-2");
  CHECK(to_string(q("7")) == "7");
  CHECK(to_string(q("+5/10")) == "1/2");
  CHECK(make_rational(2, 4) == q("1/2"));
  CHECK(make_rational(1, -2) == q("-1/2"));
  CHECK(to_string(make_rational(1, -2)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(q("1/3"), 5) == "0.33333");
  CHECK(to_decimal(q("2/3"), 5) == "0.66667");
  CHECK(to_decimal(q("-13/12"), 6) == "-1.08333");
  CHECK(to_decimal(q("1"), 3) == "1.00");
  CHECK(to_decimal(q("0"), 7) == "0");
  CHECK(to_decimal(q("1000"), 2) == "1.0e3");
  CHECK(to_decimal(q("1/100000"), 3) == "1.00e-5");
  CHECK(to_decimal(q("999/1000"), 2) == "1.0"); // carry across the point
}

TEST_CASE("poly evaluation (known values)") {
  const Poly one_minus_sq{q("1"), q("0"), q("-1")};
  CHECK(one_minus_sq(q("0")) == 1);
  const Poly alpha{q("13/12"), q("0"), q("-1")};
  CHECK(alpha(q("0")) == q("13/12"));
  const Poly xi{q("0"), q("1")};
  CHECK(xi(q("1/2")) == q("1/2"));
}

TEST_CASE("poly basics") {
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly{q("0"), q("0")}.is_zero());
  const Poly p{q("1"), q("-2"), q("3")};
  CHECK(p.derivative() == Poly{q("-2"), q("6")});
  CHECK(p.antiderivative().derivative() == p);
  CHECK(p.shifted(q("0")) == p);
  CHECK(p.shifted(q("1"))(q("0")) == p(q("1")));
  CHECK((p * Poly{q("0"), q("1")}).degree() == 3);
}

TEST_CASE("poly division and gcd") {
  const Poly a{q("-1"), q("0"), q("1")};          // (xi-1)(xi+1)
  const Poly b{q("-1"), q("1")};                  // xi-1
  CHECK(poly_exact_div(a, b) == Poly{q("1"), q("1")});
  CHECK(poly_gcd(a, b) == b);
  auto [quo, rem] = poly_divmod(Poly{q("1"), q("1"), q("1")}, Poly{q("1"), q("1")});
  CHECK(quo == Poly{q("0"), q("1")});
  CHECK(rem == Poly{q("1")});
  CHECK(poly_gcd(Poly{}, b) == b);
}

TEST_CASE("squarefree decomposition") {
  const Poly lin1{q("-1"), q("1")};  // xi - 1
  const Poly lin2{q("2"), q("1")};   // xi + 2
  const Poly p = lin1 * lin1 * lin2;
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == lin2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == lin1);
  CHECK(dec[1].second == 2);
  CHECK(squarefree_part(p) == lin1 * lin2);
}

TEST_CASE("sliding average (known values)") {
  CHECK(sliding_average(Poly{q("1")}) == Poly{q("1")});
  CHECK(sliding_average(Poly{q("-1/12"), q("0"), q("1")}) == Poly{q("0"), q("0"), q("1")});
  CHECK(sliding_average(Poly::monomial(3)) == Poly{q("0"), q("1/4"), q("0"), q("1")});
}

TEST_CASE("deconvolve (known values)") {
  CHECK(deconvolve(Poly{q("0"), q("1")}) == Poly{q("0"), q("1")});
  CHECK(deconvolve(Poly::monomial(2)) == Poly{q("-1/12"), q("0"), q("1")});
  CHECK(deconvolve(Poly{q("1")}) == Poly{q("1")});
}

TEST_CASE("tau values") {
  CHECK(tau(0) == 1);
  CHECK(tau(3) == 0);
  CHECK(tau(1) == 0);
  CHECK(tau(2) == q("-1/24"));
  CHECK(tau(4) == q("7/5760"));
  CHECK_THROWS_AS(tau(-1), std::invalid_argument);
}

TEST_CASE("deconvolution round trips and the independent oracle") {
  testutil::Rng rng{42};
  for (int iter = 0; iter < 40; ++iter) {
    Poly p = rng.next_poly(12);
    CHECK(deconvolve(sliding_average(p)) == p);
    CHECK(sliding_average(deconvolve(p)) == p);
    CHECK(deconvolve(p) == deconvolve_oracle(p));
    CHECK(deconvolve(p).degree() == p.degree());
    CHECK(deconvolve(p).leading_coeff() == p.leading_coeff());
    CHECK(deconvolve(p.derivative()) == deconvolve(p).derivative());
  }
}

TEST_CASE("sturm isolation (known values)") {
  auto roots_of_xi = sturm_isolate(Poly{q("0"), q("1")});
  REQUIRE(roots_of_xi.size() == 1);
  CHECK(roots_of_xi[0].lo <= 0);
  CHECK(roots_of_xi[0].hi >= 0);

  auto two = sturm_isolate(Poly{q("13/12"), q("0"), q("-1")});
  REQUIRE(two.size() == 2);
  CHECK(two[0].lo >= q("-3/2"));
  CHECK(two[0].hi <= q("-1/2"));
  CHECK(two[1].lo >= q("1/2"));
  CHECK(two[1].hi <= q("3/2"));

  CHECK(sturm_isolate(Poly{q("1"), q("0"), q("1")}).empty());
}

TEST_CASE("sturm count of distinct linear factor products") {
  testutil::Rng rng{7};
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<Rational> roots;
    Poly p = Poly::constant(q("1"));
    const int k = static_cast<int>(rng.next_long(1, 6));
    for (int i = 0; i < k; ++i) {
      Rational r = rng.next_rational(8, 6);
      bool dup = false;
      for (const auto& prev : roots) dup = dup || prev == r;
      if (dup) continue;
      roots.push_back(r);
      p = p * Poly{-r, q("1")};
    }
    CHECK(count_distinct_real_roots(p) == static_cast<int>(roots.size()));
    auto iso = sturm_isolate(p);
    REQUIRE(iso.size() == roots.size());
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(iso[i].lo <= roots[i]);
      CHECK(iso[i].hi >= roots[i]);
    }
  }
}

TEST_CASE("isolation reports multiplicities") {
  const Poly lin1{q("-1"), q("1")};
  const Poly lin2{q("2"), q("1")};
  auto iso = sturm_isolate(lin1 * lin1 * lin2);
  REQUIRE(iso.size() == 2);
  CHECK(iso[0].multiplicity == 1); // root -2
  CHECK(iso[1].multiplicity == 2); // root 1
}

TEST_CASE("refine_root") {
  const Poly p{q("-4/3"), q("0"), q("1")}; // roots +-2/sqrt(3)
  auto iso = sturm_isolate_in(p, q("0"), q("2"));
  REQUIRE(iso.size() == 1);
  auto fine = refine_root(iso[0], q("1/1000000"));
  CHECK(fine.width() <= q("1/1000000"));
  CHECK(fine.lo >= iso[0].lo);
  CHECK(fine.hi <= iso[0].hi);
  // 2/sqrt(3) = 1.15470053837925...
  CHECK(fine.lo < q("1154701/1000000"));
  CHECK(fine.hi > q("1154700/1000000"));
  if (!fine.is_exact()) CHECK(p(fine.lo) * p(fine.hi) < 0);

  // width larger than the interval: unchanged
  auto same = refine_root(fine, q("1"));
  CHECK(same.lo == fine.lo);
  CHECK(same.hi == fine.hi);

  // exact rational root detected via a midpoint hit
  const Poly r{q("-1/4"), q("0"), q("1")}; // roots +-1/2
  IsolatingInterval iv{q("0"), q("1"), r, 1};
  auto exact = refine_root(iv, q("1/1024"));
  CHECK(exact.is_exact());
  CHECK(exact.lo == q("1/2"));
}

TEST_CASE("algebraic comparison") {
  const Poly p2{q("-2"), q("0"), q("1")}; // sqrt(2)
  const Poly p3{q("-3"), q("0"), q("1")}; // sqrt(3)
  auto r2 = sturm_isolate_in(p2, q("0"), q("2")).at(0);
  auto r3 = sturm_isolate_in(p3, q("0"), q("2")).at(0);
  CHECK(compare_algebraic(r2, r3) == -1);
  CHECK(compare_algebraic(r3, r2) == 1);
  // same number defined by different polynomials
  const Poly p2b = p2 * Poly{q("-7"), q("1")};
  auto r2b = sturm_isolate_in(p2b, q("1"), q("2")).at(0);
  CHECK(compare_algebraic(r2, r2b) == 0);
  CHECK(compare_algebraic_to_rational(r2, q("1")) == 1);
  CHECK(compare_algebraic_to_rational(r2, q("3/2")) == -1);
  IsolatingInterval half{q("1/2"), q("1/2"), Poly{q("-1/2"), q("1")}, 1};
  CHECK(compare_algebraic_to_rational(half, q("1/2")) == 0);
  CHECK(compare_algebraic(half, r2) == -1);
}

TEST_CASE("algebraic comparison agrees with known rational ordering") {
  testutil::Rng rng{314159};
  for (int iter = 0; iter < 60; ++iter) {
    Rational r1 = rng.next_rational(6, 10);
    Rational r2 = rng.next_rational(6, 10);
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    // embed the two targets among unrelated factors on each side
    Poly p1 = Poly{-r1, q("1")} * rng.next_poly(2, 3);
    Poly p2 = Poly{-r2, q("1")} * rng.next_poly(2, 3);
    if (p1.degree() < 1 || p2.degree() < 1) continue;
    if (p1(r2) == 0 || p2(r1) == 0) continue;
    auto find = [](const Poly& p, const Rational& r) {
      for (const auto& iv : sturm_isolate(p))
        if ((iv.is_exact() && iv.lo == r) || (iv.lo <= r && r <= iv.hi && iv.poly(r) == 0))
          return iv;
      REQUIRE(false);
      return IsolatingInterval{};
    };
    IsolatingInterval i1 = find(p1, r1), i2 = find(p2, r2);
    CHECK(compare_algebraic(i1, i2) == -1);
    CHECK(compare_algebraic(i2, i1) == 1);
    CHECK(compare_algebraic(i1, i1) == 0);
    // same number isolated against two different polynomials compares equal
    IsolatingInterval j1 = find(p1 * Poly{q("1"), q("0"), q("1")}, r1);
    CHECK(compare_algebraic(i1, j1) == 0);
  }
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(q("1/8"), 2) == "0.13");
  CHECK(to_decimal(q("-1/8"), 2) == "-0.13");
  CHECK(to_decimal(q("1/8"), 3) == "0.125");
  CHECK(to_decimal(q("5/1000"), 1) == "0.005");
  CHECK(to_decimal(q("15/1000"), 1) == "0.02");
}

TEST_CASE("rational function reduction (known values)") {
  const RationalFunction f(Poly{q("0"), q("-1"), q("1")}, Poly{q("0"), q("1")});
  CHECK(f.num() == Poly{q("-1"), q("1")});
  CHECK(f.den() == Poly{q("1")});

  const Poly num{q("-1/24"), q("1/2"), q("1/2")};
  const RationalFunction g(num, Poly{q("0"), q("1")});
  CHECK(g.num() == num);
  CHECK(g.den() == Poly{q("0"), q("1")});

  const RationalFunction zero(Poly{}, Poly{q("3"), q("5"), q("7")});
  CHECK(zero.is_zero());
  CHECK(zero.den() == Poly{q("1")});

  CHECK_THROWS_AS(RationalFunction(Poly{q("1")}, Poly{}), PoleError);

  // monic denominator normalization
  const RationalFunction h(Poly{q("1")}, Poly{q("2"), q("2")});
  CHECK(h.den() == Poly{q("1"), q("1")});
  CHECK(h.num() == Poly{q("1/2")});
}

TEST_CASE("rational function arithmetic and evaluation") {
  testutil::Rng rng{11};
  for (int iter = 0; iter < 15; ++iter) {
    Poly num = rng.next_poly(5);
    Poly den = rng.next_poly(4);
    if (den.is_zero()) continue;
    RationalFunction f(num, den);
    for (int s = 0; s < 6; ++s) {
      Rational x = rng.next_rational();
      if (den(x) == 0) continue;
      CHECK(f(x) == num(x) / den(x));
    }
  }
  const RationalFunction a(Poly{q("1")}, Poly{q("0"), q("1")});       // 1/xi
  const RationalFunction b(Poly{q("0"), q("1")}, Poly{q("1"), q("1")}); // xi/(xi+1)
  CHECK(a + b == RationalFunction(Poly{q("1"), q("1"), q("1")},
                                  Poly{q("0"), q("1"), q("1")}));
  CHECK(a * b == RationalFunction(Poly{q("1")}, Poly{q("1"), q("1")}));
  CHECK(a - a == RationalFunction());
  CHECK_THROWS_AS(a(q("0")), PoleError);
}
