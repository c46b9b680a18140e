#include <random>

#include "doctest.h"
#include "ndyn/catalog.hpp"

using namespace ndyn;

namespace {

bool near(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace

TEST_CASE("standard Mobius map") {
  const Mobius t = standard_tau(4.0);
  CHECK(t(2.0).is_infinity());
  CHECK(near(t(-2.0).value(), 0.0));
  CHECK(near(t(ExtComplex::infinity()).value(), 1.0));
  CHECK_THROWS_AS(standard_tau(0.0), Error);
}

TEST_CASE("Newton conjugates to z^2") {
  const OperatorForm f = catalog_form(catalog("newton"), {}, Complex(0.3, 1.7));
  CHECK(f.n == 2);
  CHECK(f.k == 0);
  CHECK(f.sign == 1);
}

TEST_CASE("Chebyshev-Halley normal form") {
  for (double alpha : {0.0, 0.25, -1.25, 3.0}) {
    const OperatorForm f = catalog_form(catalog("chebyshev-halley"), {{"alpha", alpha}});
    REQUIRE(f.n == 3);
    REQUIRE(f.k == 1);
    CHECK(near(f.a[0], 2.0 - 2.0 * alpha));
  }
  const OperatorForm halley = catalog_form(catalog("chebyshev-halley"), {{"alpha", 0.5}});
  CHECK(halley.n == 3);
  CHECK(halley.k == 0);
}

TEST_CASE("King normal form and the Amat shift") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    const Complex beta(u(rng), u(rng));
    const OperatorForm king = catalog_form(catalog("king"), {{"beta", beta}}, Complex(u(rng), u(rng)));
    REQUIRE(king.k == 2);
    CHECK(near(king.a[0], 4.0 + beta));
    CHECK(near(king.a[1], 5.0 + 2.0 * beta));
    const OperatorForm amat = catalog_form(catalog("amat"), {{"beta", beta}});
    REQUIRE(amat.k == 2);
    CHECK(near(amat.a[0], 2.0 - 4.0 * beta / 3.0));
    CHECK(near(amat.a[1], 1.0 - 8.0 * beta / 3.0));
  }
}

TEST_CASE("trailing zero coefficients fold into n") {
  const OperatorForm f = OperatorForm::from_coefficients(2, {3.0, 0.0});
  CHECK(f.n == 3);
  CHECK(f.k == 1);
}

TEST_CASE("coefficient sum vanishing is flagged") {
  const OperatorForm f = catalog_form(catalog("os5"), {{"a", 0.7}});
  CHECK(f.coefficient_sum_vanishes);
  CHECK(f.degenerate);
}

TEST_CASE("extraction round trip and rejection") {
  const OperatorForm f = OperatorForm::from_coefficients(3, {Complex(1.5, -0.5), 2.0}, -1);
  const OperatorForm g = extract_normal_form(f.to_map());
  CHECK(g.n == 3);
  CHECK(g.k == 2);
  CHECK(g.sign == -1);
  CHECK(near(g.a[0], f.a[0]));
  CHECK(near(g.a[1], f.a[1]));
  CHECK(check_iota_symmetry(f.to_map(), 50));

  const RationalMap not_mirrored = RationalMap::make(Polynomial{0.0, 0.0, 1.0, 1.0}, Polynomial{1.0, 3.0});
  CHECK_THROWS_AS(extract_normal_form(not_mirrored), Error);
  CHECK_FALSE(check_iota_symmetry(not_mirrored, 50));
  const RationalMap zero_not_fixed = RationalMap::make(Polynomial{1.0, 0.0, 1.0}, Polynomial{1.0});
  CHECK_THROWS_AS(extract_normal_form(zero_not_fixed), Error);
}

TEST_CASE("conjugating by iota preserves symmetric maps") {
  const RationalMap r = catalog_form(catalog("king"), {{"beta", Complex(0.4, 0.2)}}).to_map();
  CHECK(same_map(mobius_conjugate(r, Mobius::iota()), r, 1e-9));
}
