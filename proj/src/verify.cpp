#include "ndyn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ndyn/analysis.hpp"

namespace ndyn {

void SuiteResult::check(bool cond, const std::string& what) {
  if (cond) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < 8) failures.push_back(what);
}

FormFamily catalog_family(const CatalogEntry& entry) {
  if (entry.parameters.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "'" + entry.name + "' is not a one-parameter family");
  const std::string param = entry.parameters.front();
  if (entry.linear) {
    const auto to_entry = entry.linear->to_entry;
    return [&entry, param, to_entry](Complex alpha) { return catalog_form(entry, {{param, to_entry(alpha)}}); };
  }
  return [&entry, param](Complex alpha) { return catalog_form(entry, {{param, alpha}}); };
}

std::vector<std::string> linearizable_families() {
  return {"chebyshev-halley", "king", "amat", "c-family", "m4", "os2", "os4"};
}

namespace {

using Rng = std::mt19937_64;

Complex random_complex(Rng& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  const double re = u(rng);
  return {re, u(rng)};
}

bool close(Complex a, Complex b, double rel) { return std::abs(a - b) <= rel * (1.0 + std::abs(b)); }

// Random monic polynomial with roots at least `gap` from 1 and -1.
std::vector<Complex> random_roots(Rng& rng, int k, double gap) {
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < k) {
    const Complex r = random_complex(rng, 2.5);
    if (std::abs(r - 1.0) < gap || std::abs(r + 1.0) < gap) continue;
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

SuiteResult suite_root_sums(std::uint64_t seed, int trials) {
  SuiteResult s{"root-sums"};
  Rng rng(seed);
  std::uniform_int_distribution<int> kd(1, 8);
  for (int t = 0; t < trials; ++t) {
    const std::vector<Complex> roots = random_roots(rng, kd(rng), 1e-2);
    const Polynomial P = Polynomial::from_roots(roots);
    const std::vector<Complex> found = poly_roots(P);
    for (const SumSign sign : {SumSign::Plus, SumSign::Minus}) {
      const Complex direct = moebius_sum_from_roots(found, sign);
      const Complex closed = moebius_sum(P, sign);
      s.check(std::abs(direct - closed) <= 1e-8 * std::max(1.0, std::abs(direct)),
              "trial " + std::to_string(t) + (sign == SumSign::Plus ? " (+)" : " (-)") + ": closed " +
                  format_complex(closed) + " vs roots " + format_complex(direct));
    }
  }
  return s;
}

SuiteResult suite_vieta(std::uint64_t seed, int trials) {
  SuiteResult s{"vieta"};
  Rng rng(seed);
  std::uniform_int_distribution<int> kd(1, 6);
  for (int t = 0; t < trials; ++t) {
    const int k = kd(rng);
    std::vector<Complex> a;
    for (int j = 0; j < k; ++j) a.push_back(random_complex(rng, 3.0));
    const OperatorForm f = OperatorForm::from_coefficients(2, a);
    // a_j = (-1)^j e_j(roots)
    std::vector<Complex> e{1.0};
    for (const Complex r : f.roots) {
      std::vector<Complex> next(e.size() + 1, 0.0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        next[i] += e[i];
        next[i + 1] += e[i] * r;
      }
      e = next;
    }
    bool ok = static_cast<int>(f.roots.size()) == f.k;
    for (int j = 1; ok && j <= f.k; ++j) {
      const Complex predicted = (j % 2 == 0 ? 1.0 : -1.0) * e[static_cast<std::size_t>(j)];
      ok = close(predicted, f.a[static_cast<std::size_t>(j - 1)], 1e-9);
    }
    s.check(ok, "trial " + std::to_string(t) + ": coefficients disagree with the elementary symmetric sums");
  }
  return s;
}

SuiteResult suite_fixed_structure(std::uint64_t seed, int trials) {
  SuiteResult s{"fixed-structure"};
  Rng rng(seed);
  std::uniform_int_distribution<int> nd(2, 6), kd(0, 5);
  std::uniform_real_distribution<double> mag(0.0, 3.0), ang(0.0, 2.0 * std::numbers::pi);
  int t = 0;
  while (t < trials) {
    const int n = nd(rng), k = kd(rng);
    std::vector<Complex> a;
    for (int j = 0; j < k; ++j) a.push_back(std::polar(mag(rng), ang(rng)));
    const OperatorForm f = OperatorForm::from_coefficients(n, a);
    if (f.n != n || f.k != k) continue;
    if (k > 0 && (std::abs(f.P()(1.0)) < 1e-3 || std::abs(f.P()(-1.0)) < 1e-3)) continue;
    const std::string tag = "form n=" + std::to_string(n) + " k=" + std::to_string(k) + " #" + std::to_string(t);
    const RationalMap r = f.to_map();
    s.check(std::abs(f(0.0)) <= 1e-12, tag + ": O(0) != 0");
    s.check(close(f(1.0), 1.0, 1e-9), tag + ": O(1) != 1");
    s.check(r.num().degree() - r.den().degree() == n, tag + ": infinity does not have local degree n");
    s.check(r.eval(ExtComplex::infinity()).is_infinity(), tag + ": infinity not fixed");
    const Complex expected = (n + k) % 2 == 1 ? -1.0 : 1.0;
    s.check(close(f(-1.0), expected, 1e-9), tag + ": O(-1) = " + format_complex(f(-1.0)));
    ++t;
  }
  return s;
}

SuiteResult suite_lambda_odd(std::uint64_t seed, int trials) {
  SuiteResult s{"lambda-odd"};
  Rng rng(seed);
  for (const auto& e : catalog_entries()) {
    if (e.kind != EntryKind::Scheme) continue;
    Bindings b;
    for (const auto& p : e.parameters) b[p] = random_complex(rng, 1.0);
    for (const int d : {2, 3, 4}) {
      const Complex c = std::polar(0.5 + std::uniform_real_distribution<double>(0.0, 1.5)(rng),
                                   std::uniform_real_distribution<double>(0.0, 6.28)(rng));
      const bool expected = std::find(e.lambda_odd_degrees.begin(), e.lambda_odd_degrees.end(), d) !=
                            e.lambda_odd_degrees.end();
      const bool got = check_lambda_odd(catalog_map(e, b, d, c), d, trials, seed + static_cast<std::uint64_t>(d));
      s.check(got == expected, e.name + " d=" + std::to_string(d) + ": lambda-odd " + (got ? "holds" : "fails") +
                                   ", expected " + (expected ? "to hold" : "to fail"));
    }
  }
  return s;
}

SuiteResult suite_iota_symmetry(std::uint64_t seed, int trials) {
  SuiteResult s{"iota-symmetry"};
  Rng rng(seed);
  for (const auto& e : catalog_entries()) {
    if (!e.expected_nk) continue;
    // Off its defaults a scheme keeps the symmetry only when it is lambda^2-odd.
    const bool generic = e.kind == EntryKind::PostConjugation ||
                         std::find(e.lambda_odd_degrees.begin(), e.lambda_odd_degrees.end(), 2) !=
                             e.lambda_odd_degrees.end();
    Bindings b = e.defaults;
    for (const auto& p : e.parameters) {
      const Complex shift = random_complex(rng, 0.5);
      if (generic) b[p] += shift;
    }
    RationalMap r;
    if (e.kind == EntryKind::Scheme) {
      const Complex c = std::polar(1.3, 0.7);
      r = mobius_conjugate(catalog_map(e, b, 2, c), standard_tau(c));
    } else {
      r = catalog_form(e, b).to_map();
    }
    s.check(check_iota_symmetry(r, trials, seed), e.name + ": R(1/z) != 1/R(z)");
  }
  return s;
}

SuiteResult suite_critical_pairing(std::uint64_t seed, int trials) {
  SuiteResult s{"critical-pairing"};
  Rng rng(seed);
  for (const std::string name : {"king", "os2"}) {
    const CatalogEntry& e = catalog(name);
    for (int t = 0; t < trials; ++t) {
      const Complex param = random_complex(rng, 4.0);
      const RationalMap r = catalog_form(e, {{e.parameters.front(), param}}).to_map();
      const auto crit = critical_points(r);
      bool ok = true;
      int free = 0;
      for (const auto& c : crit) {
        if (!c.free) continue;
        ++free;
        bool matched = false;
        for (const auto& other : crit)
          matched = matched || chordal_distance(other.point, *c.partner) <= 1e-6;
        ok = ok && matched;
      }
      s.check(ok && free > 0, name + " at " + format_complex(param) + ": free critical points are not paired");
    }
  }
  return s;
}

SuiteResult suite_region_oracle(std::uint64_t seed, int trials) {
  SuiteResult s{"region-oracle"};
  Rng rng(seed);
  for (const auto& name : linearizable_families()) {
    const CatalogEntry& e = catalog(name);
    const FormFamily family = catalog_family(e);
    const LinearCoeffs lc = linearize(family);
    for (const StabilityRegion& region : {stability_region_z1(lc), stability_region_zm1(lc)}) {
      if (region.kind == RegionKind::NotApplicable) continue;
      int mismatches = 0;
      std::string first;
      for (int t = 0; t < trials; ++t) {
        Complex alpha = random_complex(rng, 8.0);
        if (t % 2 == 1 && region.kind == RegionKind::Circle)
          alpha = region.center + random_complex(rng, 2.0 * region.radius);
        const Verdict v = region_verdict(region, alpha);
        if (v == Verdict::Boundary) continue;
        Complex m;
        try {
          m = strange_multiplier(family(alpha), region.target);
        } catch (const Error&) {
          continue;
        }
        if (std::abs(std::abs(m) - 1.0) <= 1e-9) continue;
        const bool oracle = std::abs(m) < 1.0;
        if (oracle != (v == Verdict::Attracting)) {
          if (mismatches++ == 0) first = format_complex(alpha);
        }
      }
      s.check(mismatches == 0, name + " z=" + std::to_string(region.target) + ": " + std::to_string(mismatches) +
                                   " mismatches, first at " + first);
    }
  }
  return s;
}

SuiteResult suite_region_boundary(int samples) {
  SuiteResult s{"region-boundary"};
  for (const auto& name : linearizable_families()) {
    const FormFamily family = catalog_family(catalog(name));
    const LinearCoeffs lc = linearize(family);
    const StabilityRegion region = stability_region_z1(lc);
    if (region.kind == RegionKind::Circle) {
      double worst = 0.0;
      for (int i = 0; i < samples; ++i) {
        const Complex alpha = region.center + std::polar(region.radius, 2.0 * std::numbers::pi * i / samples);
        try {
          worst = std::max(worst, std::abs(std::abs(strange_multiplier(family(alpha), 1)) - 1.0));
        } catch (const Error&) {
        }
      }
      s.check(worst <= 1e-8, name + ": boundary multiplier deviates by " + std::to_string(worst));
    }
    if (region.superattracting_parameter) {
      const double m = std::abs(strange_multiplier(family(*region.superattracting_parameter), 1));
      s.check(m <= 1e-9, name + ": |O'(1)| = " + std::to_string(m) + " at the superattracting parameter");
    }
    if (region.side == AttractingSide::EverywhereSuperattracting) {
      const double m = std::abs(strange_multiplier(family(Complex(0.3, -0.7)), 1));
      s.check(m <= 1e-9, name + ": z=1 not superattracting");
    }
  }
  return s;
}

SuiteResult suite_degenerate_s5(std::uint64_t seed, int trials) {
  SuiteResult s{"degenerate-s5"};
  Rng rng(seed);
  const CatalogEntry& e = catalog("os5");
  for (int t = 0; t < trials; ++t) {
    const Complex a = random_complex(rng, 5.0);
    const std::string tag = "a=" + format_complex(a);
    const OperatorForm raw = catalog_form(e, {{"a", a}});
    s.check(raw.coefficient_sum_vanishes, tag + ": coefficient sum does not vanish");
    const RationalMap r = raw.to_map();
    const OperatorForm reduced = extract_normal_form(r);
    s.check(reduced.sign == -1 && reduced.n == 4 && reduced.k == 3, tag + ": reduced form is not -z^4 Q/Q^ with deg Q = 3");
    if (reduced.k == 3) {
      s.check(close(reduced.a[0], 7.0 + a, 1e-9) && close(reduced.a[1], 21.0 + 5.0 * a, 1e-9) &&
                  close(reduced.a[2], 5.0 * (7.0 + 2.0 * a), 1e-9),
              tag + ": reduced coefficients");
    }
    s.check(close(r(1.0), -1.0, 1e-12) && close(r(-1.0), 1.0, 1e-12), tag + ": {1, -1} is not a 2-cycle");
  }
  return s;
}

std::vector<SuiteResult> run_all_suites() {
  return {suite_root_sums(),     suite_vieta(),         suite_fixed_structure(),
          suite_lambda_odd(),     suite_iota_symmetry(), suite_critical_pairing(),
          suite_region_oracle(),  suite_region_boundary(), suite_degenerate_s5()};
}

}  // namespace ndyn
