#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "ndyn/analysis.hpp"
#include "ndyn/catalog.hpp"

using namespace ndyn;

namespace {

bool near(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

const FixedPointRecord* find(const std::vector<FixedPointRecord>& fps, Complex z) {
  for (const auto& f : fps)
    if (f.point.is_finite() && near(f.point.value(), z)) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("multiplier classes") {
  CHECK(classify_multiplier(0.0) == FixedClass::Superattracting);
  CHECK(classify_multiplier(0.5) == FixedClass::Attracting);
  CHECK(classify_multiplier(2.0) == FixedClass::Repelling);
  CHECK(classify_multiplier(-1.0) == FixedClass::ParabolicCandidate);
  CHECK(classify_multiplier(std::polar(1.0, 2.0 * std::acos(-1.0) / 5.0)) == FixedClass::ParabolicCandidate);
  CHECK(classify_multiplier(std::polar(1.0, 1.0)) == FixedClass::Indifferent);
}

TEST_CASE("fixed points of z^3 (z + 2) / (1 + 2 z)") {
  const RationalMap r = OperatorForm::from_coefficients(3, {2.0}).to_map();
  const auto fps = fixed_points(r);
  CHECK(fps.size() == 5);
  const double s5 = std::sqrt(5.0);
  for (Complex z : {Complex(0.0), Complex(1.0), Complex((-3 + s5) / 2), Complex((-3 - s5) / 2)})
    CHECK_MESSAGE(find(fps, z) != nullptr, z);
  const auto* zero = find(fps, 0.0);
  REQUIRE(zero);
  CHECK(zero->cls == FixedClass::Superattracting);
  CHECK_FALSE(zero->strange);
  const auto* one = find(fps, 1.0);
  REQUIRE(one);
  CHECK(one->strange);
  CHECK(near(one->multiplier, 8.0 / 3.0));
  CHECK(one->cls == FixedClass::Repelling);
  CHECK(std::any_of(fps.begin(), fps.end(), [](const auto& f) { return f.point.is_infinity(); }));
}

TEST_CASE("King has one free critical pair") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 5; ++i) {
    const Complex beta(u(rng), u(rng));
    const RationalMap r = catalog_form(catalog("king"), {{"beta", beta}}).to_map();
    std::vector<Complex> free;
    for (const auto& c : critical_points(r))
      if (c.free && c.point.is_finite() && std::abs(c.point.value() + 1.0) > 1e-6) free.push_back(c.point.value());
    REQUIRE(free.size() == 2);
    CHECK(near(free[0] * free[1], 1.0, 1e-7));
  }
}

TEST_CASE("King at beta = 0: the free pair collapses into -1") {
  const RationalMap r = catalog_form(catalog("king"), {{"beta", 0.0}}).to_map();
  int at_minus_one = 0;
  for (const auto& c : critical_points(r))
    if (c.point.is_finite() && near(c.point.value(), -1.0, 1e-8)) at_minus_one += c.multiplicity;
  CHECK(at_minus_one == 4);
}

TEST_CASE("closed-form root sums") {
  CHECK(near(moebius_sum(Polynomial{6.0, -5.0, 1.0}, SumSign::Plus), -5.0, 1e-12));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    std::vector<Complex> roots;
    Polynomial p{1.0};
    for (int j = 0; j < 4; ++j) {
      Complex r(u(rng), u(rng));
      if (std::abs(r - 1.0) < 0.1 || std::abs(r + 1.0) < 0.1) r += 0.5;
      roots.push_back(r);
      p = p * Polynomial{-r, 1.0};
    }
    for (SumSign s : {SumSign::Plus, SumSign::Minus})
      CHECK(near(moebius_sum(p, s), moebius_sum_from_roots(roots, s), 1e-8));
  }
  CHECK_THROWS_AS(moebius_sum(Polynomial{-1.0, 1.0}, SumSign::Plus), Error);
  CHECK_THROWS_AS(moebius_sum(Polynomial{1.0, 1.0}, SumSign::Minus), Error);
}

TEST_CASE("cycles") {
  const RationalMap sq = RationalMap::make(Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0});
  const Complex w = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  CHECK(near(multiplier_of_cycle(sq, {w, w * w}), 4.0));
  try {
    multiplier_of_cycle(sq, {2.0, 3.0});
    FAIL("expected NotACycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACycle);
  }
}

TEST_CASE("S5 reduces to a superattracting 2-cycle at a = 0") {
  const OperatorReport rep = classify_operator(catalog_form(catalog("os5"), {{"a", 0.0}}));
  CHECK(rep.degenerate);
  CHECK(rep.sign == -1);
  CHECK(rep.n == 4);
  CHECK(rep.k == 3);
  CHECK(near(rep.value_at_one, -1.0, 1e-12));
  CHECK(near(rep.value_at_minus_one, 1.0, 1e-12));
  CHECK(rep.minus_one_status == "2-cycle-with-1");
  REQUIRE(rep.two_cycle_multiplier);
  CHECK(std::abs(*rep.two_cycle_multiplier) < 1e-9);
}

TEST_CASE("odd n + k fixes -1") {
  const OperatorReport rep = classify_operator(OperatorForm::from_coefficients(2, {Complex(3.0, 1.0)}));
  CHECK(rep.n_plus_k_odd);
  CHECK(rep.minus_one_status == "fixed");
  CHECK(rep.parity_consistent);
  CHECK(near(rep.value_at_minus_one, -1.0, 1e-12));
}

TEST_CASE("even n + k sends -1 to 1") {
  const OperatorReport rep = classify_operator(catalog_form(catalog("chebyshev-halley"), {{"alpha", 0.25}}));
  CHECK_FALSE(rep.n_plus_k_odd);
  CHECK(rep.minus_one_status == "preimage-of-1");
  CHECK(near(rep.value_at_minus_one, 1.0, 1e-12));
}

TEST_CASE("a shared (z + 1) factor flips parity") {
  const OperatorForm f = OperatorForm::from_coefficients(2, {2.0, 1.0});  // P = (z + 1)^2
  const OperatorForm core = cancel_unit_factors(f);
  CHECK(core.k == 0);
  CHECK(core.sign == 1);
  CHECK(core.degenerate);
}
