#include "ndyn/analysis.hpp"

#include <cmath>
#include <numbers>

namespace ndyn {

const char* to_string(FixedClass c) {
  switch (c) {
    case FixedClass::Attracting: return "attracting";
    case FixedClass::Superattracting: return "superattracting";
    case FixedClass::Repelling: return "repelling";
    case FixedClass::Indifferent: return "indifferent";
    case FixedClass::ParabolicCandidate: return "parabolic-candidate";
  }
  return "unknown";
}

FixedClass classify_multiplier(Complex m) {
  const double a = std::abs(m);
  if (a <= tol::superattracting) return FixedClass::Superattracting;
  if (a < 1.0 - tol::indifference_band) return FixedClass::Attracting;
  if (a > 1.0 + tol::indifference_band) return FixedClass::Repelling;
  const double turns = std::arg(m) / (2.0 * std::numbers::pi);
  for (int q = 1; q <= 16; ++q) {
    const double p = std::round(turns * q);
    if (std::abs(m - std::polar(1.0, 2.0 * std::numbers::pi * p / q)) <= 2.0 * tol::indifference_band)
      return FixedClass::ParabolicCandidate;
  }
  return FixedClass::Indifferent;
}

namespace {

// Finite roots of p with multiplicities. Roots at 0 and +-1 are split off
// exactly first; they are structural for normal forms and often multiple.
std::vector<RootCluster> sphere_roots(const Polynomial& p) {
  std::vector<RootCluster> out;
  const int zeros = p.low_order_zeros();
  Polynomial rest = p;
  if (zeros > 0) {
    out.push_back({0.0, zeros});
    rest = p.shift_down(zeros);
  }
  for (const double x : {1.0, -1.0}) {
    int mult = 0;
    while (rest.degree() > 0) {
      double mag = 0.0;
      for (const Complex c : rest.coeffs()) mag += std::abs(c);
      if (std::abs(rest(x)) > 1e-11 * mag) break;
      Polynomial q, rem;
      divmod(rest, Polynomial{-x, 1.0}, q, rem);
      rest = q;
      ++mult;
    }
    if (mult > 0) out.push_back({x, mult});
  }
  if (rest.degree() > 0)
    for (const auto& c : distinct_roots(rest)) out.push_back(c);
  return out;
}

bool near_any(const ExtComplex& z, const std::vector<ExtComplex>& pts) {
  for (const auto& p : pts)
    if (chordal_distance(z, p) <= tol::fixed_point) return true;
  return false;
}

}  // namespace

std::vector<FixedPointRecord> fixed_points(const RationalMap& r, const std::vector<ExtComplex>& roots) {
  const Polynomial f = r.num() - r.den() * Polynomial::monomial(1);
  std::vector<FixedPointRecord> out;
  auto push = [&](const ExtComplex& z, int mult) {
    const Complex m = chart_derivative(r, z);
    out.push_back({z, m, classify_multiplier(m), !near_any(z, roots), mult});
  };
  for (const auto& c : sphere_roots(f)) push(c.point, c.multiplicity);
  const int at_infinity = r.degree() + 1 - f.degree();
  if (at_infinity > 0) push(ExtComplex::infinity(), at_infinity);
  return out;
}

std::vector<CriticalPointRecord> critical_points(const RationalMap& r) {
  std::vector<CriticalPointRecord> out;
  if (r.degree() < 2) return out;
  const Polynomial w = r.num().derivative() * r.den() - r.num() * r.den().derivative();
  auto push = [&](const ExtComplex& z, int mult) {
    const bool free = !near_any(z, {0.0, ExtComplex::infinity()});
    std::optional<ExtComplex> partner;
    if (free) partner = ExtComplex(1.0 / z.value());
    out.push_back({z, mult, free, partner});
  };
  for (const auto& c : sphere_roots(w)) push(c.point, c.multiplicity);
  const int at_infinity = 2 * r.degree() - 2 - w.degree();
  if (at_infinity > 0) push(ExtComplex::infinity(), at_infinity);
  return out;
}

Complex multiplier_of_cycle(const RationalMap& r, const std::vector<ExtComplex>& cycle) {
  if (cycle.empty()) throw Error(ErrorKind::NotACycle, "empty cycle");
  Complex m = 1.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const ExtComplex image = r.eval(cycle[i]);
    const ExtComplex& next = cycle[(i + 1) % cycle.size()];
    if (chordal_distance(image, next) > tol::fixed_point)
      throw Error(ErrorKind::NotACycle, "R(" + format_ext(cycle[i]) + ") = " + format_ext(image) + ", expected " +
                                            format_ext(next));
    m *= chart_derivative(r, cycle[i]);
  }
  return m;
}

Complex moebius_sum(const Polynomial& P, SumSign sign) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "moebius_sum of the zero polynomial");
  const int k = P.degree();
  const Complex lead = P.leading();
  Complex weighted = 0.0, total = 1.0;
  double mag = 1.0;
  for (int j = 1; j <= k; ++j) {
    const Complex a = P[k - j] / lead;
    const double s = (sign == SumSign::Minus && j % 2 == 1) ? -1.0 : 1.0;
    weighted += s * static_cast<double>(j) * a;
    total += s * a;
    mag += std::abs(a);
  }
  if (std::abs(total) <= 1e-12 * mag) {
    if (sign == SumSign::Plus) throw Error(ErrorKind::PoleAtOne, "P(1) = 0");
    throw Error(ErrorKind::PoleAtMinusOne, "P(-1) = 0");
  }
  return static_cast<double>(k) - 2.0 * weighted / total;
}

Complex moebius_sum_from_roots(const std::vector<Complex>& roots, SumSign sign) {
  Complex s = 0.0;
  for (const Complex r : roots) s += sign == SumSign::Plus ? (1.0 + r) / (1.0 - r) : (1.0 - r) / (1.0 + r);
  return s;
}

OperatorForm cancel_unit_factors(const OperatorForm& form) {
  int sign = form.sign;
  Polynomial p = form.P();
  auto divides = [&](double x) {
    double mag = 0.0;
    for (const Complex c : p.coeffs()) mag += std::abs(c);
    return p.degree() > 0 && std::abs(p(x)) <= tol::palindrome * mag;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const double x : {1.0, -1.0}) {
      if (!divides(x)) continue;
      Polynomial q, rem;
      divmod(p, Polynomial{-x, 1.0}, q, rem);
      p = q;
      if (x == 1.0) sign = -sign;
      changed = true;
    }
  }
  if (p.degree() == form.k) return form;
  std::vector<Complex> a;
  const int k = p.degree();
  for (int j = 1; j <= k; ++j) a.push_back(p[k - j] / p.leading());
  OperatorForm out = OperatorForm::from_coefficients(form.n, std::move(a), sign);
  out.degenerate = true;
  return out;
}

OperatorReport classify_operator(const OperatorForm& form) {
  OperatorReport rep;
  rep.raw_n_plus_k = form.n + form.k;
  const OperatorForm core = cancel_unit_factors(form);
  rep.n = core.n;
  rep.k = core.k;
  rep.sign = core.sign;
  rep.degenerate = form.degenerate || core.degenerate;
  rep.n_plus_k_odd = (core.n + core.k) % 2 != 0;
  rep.value_at_one = core(1.0);
  rep.value_at_minus_one = core(-1.0);

  const double s = static_cast<double>(core.sign);
  const double predicted_minus = rep.n_plus_k_odd ? -s : s;
  rep.parity_consistent = std::abs(rep.value_at_one - s) <= 1e-9 &&
                          std::abs(rep.value_at_minus_one - predicted_minus) <= 1e-9;

  const bool one_fixed = std::abs(rep.value_at_one - 1.0) <= 1e-9;
  const bool minus_fixed = std::abs(rep.value_at_minus_one + 1.0) <= 1e-9;
  const bool minus_to_one = std::abs(rep.value_at_minus_one - 1.0) <= 1e-9;
  const RationalMap map = core.to_map();
  if (minus_fixed && one_fixed) {
    rep.minus_one_status = "fixed";
  } else if (minus_to_one && one_fixed) {
    rep.minus_one_status = "preimage-of-1";
  } else if (minus_to_one && !one_fixed) {
    rep.minus_one_status = "2-cycle-with-1";
    rep.two_cycle_multiplier = multiplier_of_cycle(map, {1.0, -1.0});
  } else if (minus_fixed) {
    rep.minus_one_status = "1-is-preimage";
  } else {
    rep.minus_one_status = "other";
  }
  rep.fixed = fixed_points(map);
  return rep;
}

}  // namespace ndyn
