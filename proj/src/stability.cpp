#include "ndyn/stability.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ndyn {

LinearCoeffs LinearCoeffs::from_parts(int n, std::vector<double> A, std::vector<double> B) {
  LinearCoeffs lc;
  lc.n = n;
  lc.k = static_cast<int>(A.size());
  lc.A = std::move(A);
  lc.B = std::move(B);
  const double total = n + lc.k;
  lc.agg_A = lc.agg_C = total;
  lc.agg_Ap = lc.agg_Cp = 1.0;
  for (int j = 1; j <= lc.k; ++j) {
    const double w = total - 2.0 * j;
    const double s = j % 2 == 0 ? 1.0 : -1.0;
    const double a = lc.A[static_cast<std::size_t>(j - 1)];
    const double b = lc.B[static_cast<std::size_t>(j - 1)];
    lc.agg_A += w * a;
    lc.agg_B += w * b;
    lc.agg_Ap += a;
    lc.agg_Bp += b;
    lc.agg_C += s * w * a;
    lc.agg_D += s * w * b;
    lc.agg_Cp += s * a;
    lc.agg_Dp += s * b;
  }
  return lc;
}

namespace {

struct Probe {
  OperatorForm form;
  bool ok = false;
};

Probe probe(const FormFamily& family, Complex alpha) {
  try {
    return {family(alpha), true};
  } catch (const Error&) {
    return {};
  }
}

Complex coeff(const OperatorForm& f, int j) {
  return j <= f.k ? f.a[static_cast<std::size_t>(j - 1)] : Complex(0.0);
}

// Attempts the fit on the base points p0, p1 with certificate point p2.
// Returns nullopt when the family changes shape between the points.
std::optional<LinearCoeffs> fit(const FormFamily& family, Complex p0, Complex p1, Complex p2) {
  const Probe f0 = probe(family, p0), f1 = probe(family, p1), f2 = probe(family, p2);
  if (!f0.ok || !f1.ok || !f2.ok) return std::nullopt;
  const int total = f0.form.n + f0.form.k;
  for (const auto* f : {&f1.form, &f2.form}) {
    if (f->n + f->k != total || f->sign != f0.form.sign) return std::nullopt;
  }
  const int k = std::max({f0.form.k, f1.form.k, f2.form.k});
  std::vector<double> A, B;
  for (int j = 1; j <= k; ++j) {
    const Complex slope = (coeff(f1.form, j) - coeff(f0.form, j)) / (p1 - p0);
    const Complex base = coeff(f0.form, j) - slope * p0;
    const Complex predicted = base + slope * p2;
    const Complex actual = coeff(f2.form, j);
    if (std::abs(predicted - actual) > 1e-8 * (1.0 + std::abs(actual)))
      throw Error(ErrorKind::NonlinearDependence,
                  "coefficient a_" + std::to_string(j) + " is not affine in the parameter");
    const double scale = 1e-9 * (1.0 + std::abs(base) + std::abs(slope));
    if (std::abs(base.imag()) > scale || std::abs(slope.imag()) > scale)
      throw Error(ErrorKind::NonRealCoefficients, "coefficient a_" + std::to_string(j) + " is not real-affine");
    A.push_back(base.real());
    B.push_back(slope.real());
  }
  return LinearCoeffs::from_parts(total - k, std::move(A), std::move(B));
}

bool negligible(double x, double scale) { return std::abs(x) <= 1e-9 * scale; }

StabilityRegion region(int target, double A, double B, double Ap, double Bp) {
  StabilityRegion r;
  r.target = target;
  const double scale = 1.0 + std::abs(A) + std::abs(B) + std::abs(Ap) + std::abs(Bp);
  if (negligible(Ap, scale) && negligible(Bp, scale))
    throw Error(ErrorKind::DegenerateFamily, "the multiplier denominator vanishes for every parameter");
  if (!negligible(B, scale)) r.superattracting_parameter = Complex(-A / B);
  if (negligible(A, scale) && negligible(B, scale)) {
    r.kind = RegionKind::Constant;
    r.side = AttractingSide::EverywhereSuperattracting;
    return r;
  }
  const double disc = B * B - Bp * Bp;
  const double cross = Ap * B - A * Bp;
  auto constant = [&](double num, double den) {
    r.kind = RegionKind::Constant;
    const double diff = std::abs(num) - std::abs(den);
    if (std::abs(diff) <= 1e-9 * scale) r.side = AttractingSide::EverywhereIndifferent;
    else r.side = diff < 0 ? AttractingSide::Everywhere : AttractingSide::Nowhere;
    return r;
  };
  if (!negligible(disc, scale * scale)) {
    // Multiplier constant B/B' (or A/A') when numerator and denominator are proportional.
    if (negligible(cross, scale * scale)) return negligible(Bp, scale) ? constant(A, Ap) : constant(B, Bp);
    r.kind = RegionKind::Circle;
    r.center = Complex(-(A * B - Ap * Bp) / disc);
    r.radius = std::abs(cross / disc);
    r.side = disc > 0 ? AttractingSide::Inside : AttractingSide::Outside;
    return r;
  }
  if (negligible(B, scale)) return constant(A, Ap);
  // |A + aB|^2 - |A' + aB'|^2 = 2 Re(a) (A B - A' B') + A^2 - A'^2 with B = +-B'.
  const double lin = 2.0 * (A * B - Ap * Bp);
  const double con = A * A - Ap * Ap;
  if (negligible(lin, scale * scale)) return constant(A, Ap);
  r.kind = RegionKind::HalfPlane;
  r.center = Complex(-con / lin);
  r.side = lin > 0 ? AttractingSide::Left : AttractingSide::Right;
  return r;
}

}  // namespace

LinearCoeffs linearize(const FormFamily& family) {
  const Complex i(0.0, 1.0);
  for (const auto& pts : {std::array<Complex, 3>{0.0, 1.0, i}, std::array<Complex, 3>{2.0, 3.0, 2.0 + i},
                          std::array<Complex, 3>{-1.5, 0.5, Complex(-0.75, 1.25)}}) {
    if (auto lc = fit(family, pts[0], pts[1], pts[2])) return *lc;
  }
  throw Error(ErrorKind::InconsistentForm, "the family does not keep n + k constant at the probe parameters");
}

const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Circle: return "circle";
    case RegionKind::HalfPlane: return "half-plane";
    case RegionKind::Constant: return "constant";
    case RegionKind::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

const char* to_string(AttractingSide s) {
  switch (s) {
    case AttractingSide::Inside: return "inside";
    case AttractingSide::Outside: return "outside";
    case AttractingSide::Left: return "left";
    case AttractingSide::Right: return "right";
    case AttractingSide::Everywhere: return "everywhere";
    case AttractingSide::Nowhere: return "nowhere";
    case AttractingSide::EverywhereSuperattracting: return "everywhere-superattracting";
    case AttractingSide::EverywhereIndifferent: return "everywhere-indifferent";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Attracting: return "attracting";
    case Verdict::Repelling: return "repelling";
    case Verdict::Boundary: return "boundary";
  }
  return "unknown";
}

StabilityRegion stability_region_z1(const LinearCoeffs& lc) {
  return region(1, lc.agg_A, lc.agg_B, lc.agg_Ap, lc.agg_Bp);
}

StabilityRegion stability_region_zm1(const LinearCoeffs& lc) {
  if ((lc.n + lc.k) % 2 == 0) {
    StabilityRegion r;
    r.target = -1;
    return r;
  }
  return region(-1, lc.agg_C, lc.agg_D, lc.agg_Cp, lc.agg_Dp);
}

Verdict region_verdict(const StabilityRegion& region, Complex alpha) {
  switch (region.kind) {
    case RegionKind::Circle: {
      const double gap = std::abs(alpha - region.center) - region.radius;
      if (std::abs(gap) <= tol::region_band) return Verdict::Boundary;
      const bool inside = gap < 0;
      return inside == (region.side == AttractingSide::Inside) ? Verdict::Attracting : Verdict::Repelling;
    }
    case RegionKind::HalfPlane: {
      const double gap = alpha.real() - region.center.real();
      if (std::abs(gap) <= tol::region_band) return Verdict::Boundary;
      return (gap < 0) == (region.side == AttractingSide::Left) ? Verdict::Attracting : Verdict::Repelling;
    }
    case RegionKind::Constant:
      if (region.side == AttractingSide::EverywhereIndifferent) return Verdict::Boundary;
      return region.side == AttractingSide::Nowhere ? Verdict::Repelling : Verdict::Attracting;
    case RegionKind::NotApplicable:
      break;
  }
  throw Error(ErrorKind::NotApplicable, "the point is not fixed for this family");
}

Complex strange_multiplier(const OperatorForm& form, int target) {
  if (target != 1 && target != -1) throw Error(ErrorKind::InvalidArgument, "target must be 1 or -1");
  const OperatorForm core = cancel_unit_factors(form);
  const double t = target;
  const Complex value = core(t);
  if (std::abs(value - t) > 1e-9)
    throw Error(ErrorKind::NotAFixedPoint, std::to_string(target) + " maps to " + format_complex(value));
  const Polynomial P = core.P(), Ph = core.P_hat();
  const Complex log_derivative =
      static_cast<double>(core.n) / t + P.derivative()(t) / P(t) - Ph.derivative()(t) / Ph(t);
  return value * log_derivative;
}

FixedClass classify_strange_at(const OperatorForm& form, int target) {
  return classify_multiplier(strange_multiplier(form, target));
}

}  // namespace ndyn
