#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ndyn/analysis.hpp"

namespace ndyn {

/// A one-parameter family of normal forms.
using FormFamily = std::function<OperatorForm(Complex)>;

/// a_j(alpha) = A_j + B_j alpha with the aggregate sums for z = 1 and z = -1.
struct LinearCoeffs {
  int n = 0;
  int k = 0;
  std::vector<double> A;  // A_1 .. A_k
  std::vector<double> B;  // B_1 .. B_k
  // z = 1: O'(1) = (A + alpha B) / (A' + alpha B')
  double agg_A = 0, agg_B = 0, agg_Ap = 0, agg_Bp = 0;
  // z = -1: O'(-1) = (C + alpha D) / (C' + alpha D')
  double agg_C = 0, agg_D = 0, agg_Cp = 0, agg_Dp = 0;

  /// Builds the aggregates from n, k, A and B.
  static LinearCoeffs from_parts(int n, std::vector<double> A, std::vector<double> B);
};

/// Recovers A_j, B_j from evaluations at alpha = 0 and 1 and certifies the fit
/// at alpha = i. When the family changes shape at one of these points (a
/// coefficient collapse that cancels factors), the probe is shifted to 2, 3, 2 + i.
/// Throws NonlinearDependence, NonRealCoefficients, InconsistentForm.
LinearCoeffs linearize(const FormFamily& family);

enum class RegionKind { Circle, HalfPlane, Constant, NotApplicable };
enum class AttractingSide { Inside, Outside, Left, Right, Everywhere, Nowhere, EverywhereSuperattracting,
                            EverywhereIndifferent };
enum class Verdict { Attracting, Repelling, Boundary };

const char* to_string(RegionKind k);
const char* to_string(AttractingSide s);
const char* to_string(Verdict v);

/// Circle: |alpha - center| = radius. Half-plane: Re(alpha) = center.real().
struct StabilityRegion {
  int target = 1;
  RegionKind kind = RegionKind::NotApplicable;
  Complex center;
  double radius = 0.0;
  AttractingSide side = AttractingSide::Nowhere;
  std::optional<Complex> superattracting_parameter;
};

/// Throws DegenerateFamily when A' + alpha B' vanishes identically.
StabilityRegion stability_region_z1(const LinearCoeffs& lc);
/// NotApplicable region when n + k is even.
StabilityRegion stability_region_zm1(const LinearCoeffs& lc);

/// Side of the region containing alpha; Boundary within tol::region_band.
Verdict region_verdict(const StabilityRegion& region, Complex alpha);

/// O'(target) from the logarithmic derivative of the form. Throws NotAFixedPoint.
Complex strange_multiplier(const OperatorForm& form, int target);
FixedClass classify_strange_at(const OperatorForm& form, int target);

}  // namespace ndyn
