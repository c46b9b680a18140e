#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace ndyn {

using Complex = std::complex<double>;

// Numerical thresholds shared across modules.
namespace tol {
inline constexpr double trim = 1e-12;           // trailing coefficient trim, relative to max |coeff|
inline constexpr double root_residual = 1e-12;  // Aberth stopping residual
inline constexpr int root_max_sweeps = 200;
inline constexpr double cancel_residual = 1e-10; // common-root match: backward residual
inline constexpr double cancel_bound = 1e-4;      // common-root match: distance bound, relative to 1+|r|
inline constexpr double palindrome = 1e-9;
inline constexpr double symmetry = 1e-9;
inline constexpr double fixed_point = 1e-8;
inline constexpr double indifference_band = 1e-8;
inline constexpr double superattracting = 1e-10;
inline constexpr double region_band = 1e-6;
}  // namespace tol

enum class ErrorKind {
  ZeroPolynomial,
  NoConvergence,
  ZeroDenominator,
  SyntaxError,
  UnboundIdentifier,
  DivisionByZeroMap,
  UnknownMethod,
  ZeroC,
  NotPalindromic,
  NotFixingOneZeroInfinity,
  NotACycle,
  PoleAtOne,
  PoleAtMinusOne,
  NonlinearDependence,
  NonRealCoefficients,
  InconsistentForm,
  DegenerateFamily,
  NotApplicable,
  NotAFixedPoint,
  NoFreeCritical,
  MultipleFreePairs,
  IOError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A point of the Riemann sphere: a finite complex number or infinity.
class ExtComplex {
 public:
  ExtComplex(Complex value) : value_(value) {}  // NOLINT: implicit by intent
  ExtComplex(double re) : value_(Complex(re, 0.0)) {}  // NOLINT

  static ExtComplex infinity() { return ExtComplex(); }

  bool is_infinity() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws InvalidArgument at infinity.
  Complex value() const;

  friend bool operator==(const ExtComplex& a, const ExtComplex& b) { return a.value_ == b.value_; }

 private:
  ExtComplex() = default;
  std::optional<Complex> value_;
};

/// Chordal distance on the Riemann sphere (0 .. 1).
double chordal_distance(const ExtComplex& a, const ExtComplex& b);

std::string format_complex(Complex z);
std::string format_ext(const ExtComplex& z);

}  // namespace ndyn
