#include "ndyn/core.hpp"

#include <cmath>
#include <cstdio>

namespace ndyn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorKind::DivisionByZeroMap: return "DivisionByZeroMap";
    case ErrorKind::UnknownMethod: return "UnknownMethod";
    case ErrorKind::ZeroC: return "ZeroC";
    case ErrorKind::NotPalindromic: return "NotPalindromic";
    case ErrorKind::NotFixingOneZeroInfinity: return "NotFixingOneZeroInfinity";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::NonlinearDependence: return "NonlinearDependence";
    case ErrorKind::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorKind::InconsistentForm: return "InconsistentForm";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorKind::NoFreeCritical: return "NoFreeCritical";
    case ErrorKind::MultipleFreePairs: return "MultipleFreePairs";
    case ErrorKind::IOError: return "IOError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Complex ExtComplex::value() const {
  if (!value_) throw Error(ErrorKind::InvalidArgument, "point at infinity has no finite value");
  return *value_;
}

double chordal_distance(const ExtComplex& a, const ExtComplex& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity()) return 1.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinity()) return 1.0 / std::sqrt(1.0 + std::norm(a.value()));
  const Complex x = a.value(), y = b.value();
  return std::abs(x - y) / (std::sqrt(1.0 + std::norm(x)) * std::sqrt(1.0 + std::norm(y)));
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string format_ext(const ExtComplex& z) {
  return z.is_infinity() ? std::string("inf") : format_complex(z.value());
}

}  // namespace ndyn
