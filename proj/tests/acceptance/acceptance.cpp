// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "ndyn/analysis.hpp"
#include "ndyn/catalog.hpp"
#include "ndyn/planes.hpp"
#include "ndyn/stability.hpp"
#include "ndyn/verify.hpp"

using namespace ndyn;

namespace {

struct Check {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, double budget_s, const std::function<Check()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Check o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += " [over time budget " + std::to_string(budget_s) + " s]";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s  (%s; %.3f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::mt19937_64 rng(20240611);

Complex rand_c(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double re = u(rng);
  return {re, u(rng)};
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Check suite_outcome(const SuiteResult& s) {
  Check o{s.ok(), s.name + " " + std::to_string(s.passed) + "/" + std::to_string(s.passed + s.failed)};
  if (!s.failures.empty()) o.detail += ", first failure: " + s.failures.front();
  return o;
}

}  // namespace

int main() {
  report(1, "operator reconstruction", 1.0, [] {
    struct Case {
      const char* name;
      const char* param;
      int n;
      std::function<std::vector<Complex>(Complex)> expected;
    };
    const Case cases[] = {
        {"chebyshev-halley", "alpha", 3, [](Complex a) { return std::vector<Complex>{2.0 - 2.0 * a}; }},
        {"king", "beta", 4, [](Complex b) { return std::vector<Complex>{4.0 + b, 5.0 + 2.0 * b}; }},
        {"amat", "beta", 4,
         [](Complex b) { return std::vector<Complex>{2.0 - 4.0 * b / 3.0, 1.0 - 8.0 * b / 3.0}; }},
    };
    double worst = 0.0;
    bool shape = true;
    for (const auto& cs : cases) {
      for (int ci = 0; ci < 5; ++ci) {
        const Complex c = std::polar(std::uniform_real_distribution<double>(0.2, 3.0)(rng),
                                     std::uniform_real_distribution<double>(-3.1, 3.1)(rng));
        for (int pi = 0; pi < 5; ++pi) {
          const Complex p = rand_c(-3.0, 3.0);
          const OperatorForm f = catalog_form(catalog(cs.name), {{cs.param, p}}, c);
          const auto want = cs.expected(p);
          if (f.n != cs.n || f.k != static_cast<int>(want.size()) || f.sign != 1) {
            shape = false;
            continue;
          }
          for (std::size_t j = 0; j < want.size(); ++j) worst = std::max(worst, rel(f.a[j], want[j]));
        }
      }
    }
    return Check{shape && worst <= 1e-9, "75 operators, max relative error " + fmt(worst)};
  });

  report(2, "King-Amat equivalence", 1.0, [] {
    double worst = 0.0;
    bool shape = true;
    for (int i = 0; i < 20; ++i) {
      const Complex beta = rand_c(-3.0, 3.0);
      const OperatorForm amat = catalog_form(catalog("amat"), {{"beta", beta}});
      const OperatorForm king = catalog_form(catalog("king"), {{"beta", -4.0 * beta / 3.0 - 2.0}});
      if (amat.n != king.n || amat.k != king.k || amat.sign != king.sign) {
        shape = false;
        continue;
      }
      for (int j = 0; j < amat.k; ++j) worst = std::max(worst, rel(amat.a[j], king.a[j]));
    }
    return Check{shape && worst <= 1e-9, "20 parameters, max relative difference " + fmt(worst)};
  });

  report(3, "Chebyshev-Halley stability circle", 0.0, [] {
    const FormFamily family = catalog_family(catalog("chebyshev-halley"));
    const StabilityRegion r = stability_region_z1(linearize(family));
    const double dc = std::abs(r.center - 13.0 / 6.0), dr = std::abs(r.radius - 1.0 / 3.0);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
      const Complex a = r.center + std::polar(r.radius, 2.0 * std::numbers::pi * i / 64.0);
      worst = std::max(worst, std::abs(std::abs(strange_multiplier(family(a), 1)) - 1.0));
    }
    const double super = std::abs(strange_multiplier(family(2.0), 1));
    const bool ok = r.kind == RegionKind::Circle && r.side == AttractingSide::Inside && dc <= 1e-12 &&
                    dr <= 1e-12 && worst <= 1e-8 && super <= 1e-9;
    return Check{ok, "center error " + fmt(dc) + ", radius error " + fmt(dr) + ", boundary ||O'(1)|-1| max " +
                           fmt(worst) + ", |O'(1)| at alpha=2 " + fmt(super)};
  });

  report(4, "King stability", 0.0, [] {
    const FormFamily family = catalog_family(catalog("king"));
    const StabilityRegion r = stability_region_z1(linearize(family));
    if (!r.superattracting_parameter) return Check{false, "no superattracting parameter"};
    const Complex sa = *r.superattracting_parameter;
    const double at_sa = std::abs(strange_multiplier(family(sa), 1));
    const double at_m4 = std::abs(strange_multiplier(family(-4.0), 1));
    int mismatches = 0, compared = 0;
    for (int i = 0; i < 500; ++i) {
      const Complex b = rand_c(-8.0, 8.0);
      const Verdict v = region_verdict(r, b);
      if (v == Verdict::Boundary) continue;
      const bool oracle = std::abs(strange_multiplier(family(b), 1)) < 1.0;
      ++compared;
      if (oracle != (v == Verdict::Attracting)) ++mismatches;
    }
    const bool ok = std::abs(sa + 4.0) <= 1e-9 && at_sa <= 1e-9 && at_m4 <= 1e-9 && mismatches == 0;
    return Check{ok, "superattracting beta " + fmt(sa.real()) + ", |O'(1)| there " + fmt(at_m4) + ", " +
                           std::to_string(mismatches) + " mismatches in " + std::to_string(compared) + " samples"};
  });

  report(5, "c-family threshold and OS4", 0.0, [] {
    const CatalogEntry& e = catalog("c-family");
    const FormFamily family = catalog_family(e);
    const StabilityRegion r = stability_region_z1(linearize(family));
    int bad = 0, compared = 0;
    for (int i = 0; i < 100; ++i) {
      const Complex c = 3.0 + rand_c(-16.0, 16.0);
      if (std::abs(std::abs(c - 3.0) - 8.0) <= 1e-6) continue;
      const bool expected = std::abs(c - 3.0) > 8.0;
      const bool region = region_verdict(r, c) == Verdict::Attracting;
      const bool oracle = std::abs(strange_multiplier(family(c), 1)) < 1.0;
      ++compared;
      if (region != expected || oracle != expected) ++bad;
    }
    const FormFamily os4 = catalog_family(catalog("os4"));
    const StabilityRegion r4 = stability_region_z1(linearize(os4));
    int os4_bad = r4.side == AttractingSide::EverywhereSuperattracting ? 0 : 1;
    for (int i = 0; i < 20; ++i)
      if (classify_strange_at(os4(rand_c(-5.0, 5.0)), 1) != FixedClass::Superattracting) ++os4_bad;
    return Check{bad == 0 && os4_bad == 0, std::to_string(bad) + " c-family mismatches in " +
                                                 std::to_string(compared) + ", OS4 region " + to_string(r4.side) +
                                                 ", " + std::to_string(os4_bad) + " OS4 failures"};
  });

  report(6, "fixed-point structure", 0.0, [] { return suite_outcome(suite_fixed_structure(601, 200)); });

  report(7, "root-sum identities", 0.0, [] { return suite_outcome(suite_root_sums(701, 200)); });

  report(8, "symmetry suites", 0.0, [] {
    // lambda^d-oddness of every catalog scheme at generic parameters.
    std::string broken;
    std::string broken_derivative_based;
    for (const auto& e : catalog_entries()) {
      if (e.kind != EntryKind::Scheme) continue;
      Bindings b;
      for (const auto& p : e.parameters) b[p] = rand_c(-1.0, 1.0);
      for (const int d : {2, 3, 4}) {
        const Complex c = std::polar(1.2, 0.4);
        if (check_lambda_odd(catalog_map(e, b, d, c), d, 50)) continue;
        const std::string tag = e.name + "(d=" + std::to_string(d) + ") ";
        broken += tag;
        if (e.scheme_text.find("p'") != std::string::npos) broken_derivative_based += tag;
      }
    }
    const SuiteResult iota = suite_iota_symmetry(801, 50);
    const SuiteResult pairs = suite_critical_pairing(802, 20);
    std::printf("  info: lambda-odd failures among derivative-based schemes: %s\n",
                broken_derivative_based.empty() ? "none" : broken_derivative_based.c_str());
    Check o{broken.empty() && iota.ok() && pairs.ok(), ""};
    o.detail = "lambda-odd failures: " + (broken.empty() ? std::string("none") : broken) + "; " +
               suite_outcome(iota).detail + "; " + suite_outcome(pairs).detail;
    return o;
  });

  report(9, "S5 degenerate case", 0.0, [] { return suite_outcome(suite_degenerate_s5(901, 20)); });

  report(10, "renderer sanity", 5.0, [] {
    RenderConfig cfg;
    cfg.width = cfg.height = 400;
    const RationalMap sq = RationalMap::polynomial(Polynomial::monomial(2));
    std::string bytes[3];
    int bad = 0;
    const int workers[3] = {1, 4, 8};
    for (int w = 0; w < 3; ++w) {
      cfg.threads = workers[w];
      const PlaneImage img = dynamical_plane(sq, cfg);
      bytes[w] = ppm_bytes(img);
      if (w > 0) continue;
      for (int row = 0; row < cfg.height; ++row)
        for (int col = 0; col < cfg.width; ++col) {
          const double m = std::abs(cfg.pixel_center(col, row));
          const auto o = img.at(col, row).outcome;
          if (m < 0.9 && o != ndyn::Outcome::Root0) ++bad;
          if (m > 1.1 && o != ndyn::Outcome::RootInfinity) ++bad;
        }
    }
    const bool same = bytes[0] == bytes[1] && bytes[0] == bytes[2];
    return Check{bad == 0 && same, std::to_string(bad) + " misclassified pixels, outputs for 1/4/8 workers " +
                                         (same ? "identical" : "differ")};
  });

  report(11, "parameter-plane capture", 30.0, [] {
    const FormFamily family = catalog_family(catalog("chebyshev-halley"));
    RenderConfig cfg;
    cfg.x_min = -1;
    cfg.x_max = 5;
    cfg.y_min = -3;
    cfg.y_max = 3;
    cfg.width = cfg.height = 300;
    cfg.max_iter = 150;
    const PlaneImage img = parameter_plane(linear_map_family(linearize(family)), {}, cfg);
    int inside = 0, captured = 0;
    double nearest = 1e300;
    PixelRecord halley;
    for (int row = 0; row < cfg.height; ++row)
      for (int col = 0; col < cfg.width; ++col) {
        const Complex a = cfg.pixel_center(col, row);
        const PixelRecord& p = img.at(col, row);
        if (std::abs(a - 13.0 / 6.0) < (1.0 / 3.0) * (1.0 - 0.02)) {
          ++inside;
          if (p.outcome != ndyn::Outcome::Root0 && p.outcome != ndyn::Outcome::RootInfinity) ++captured;
        }
        if (std::abs(a - 0.5) < nearest) {
          nearest = std::abs(a - 0.5);
          halley = p;
        }
      }
    const double share = inside ? static_cast<double>(captured) / inside : 0.0;
    const bool root = halley.outcome == ndyn::Outcome::Root0 || halley.outcome == ndyn::Outcome::RootInfinity;
    return Check{inside > 0 && share >= 0.95 && root,
                   std::to_string(captured) + "/" + std::to_string(inside) + " interior pixels captured, pixel near 1/2: " +
                       to_string(halley.outcome)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
