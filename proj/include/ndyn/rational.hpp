#pragma once

#include "ndyn/polynomial.hpp"

namespace ndyn {

/// Reduced quotient num/den of two polynomials.
///
/// Invariants: den is nonzero and its lowest nonzero coefficient is 1; num and
/// den share no root within the cancellation tolerance. The zero map is 0/1.
class RationalMap {
 public:
  RationalMap() : RationalMap(identity()) {}

  /// Cancels common roots and normalizes the denominator. Throws ZeroDenominator.
  static RationalMap make(Polynomial num, Polynomial den);
  static RationalMap identity();
  static RationalMap constant(Complex c);
  static RationalMap polynomial(Polynomial p);
  /// Caller guarantees num and den are coprime; only normalizes.
  static RationalMap reduced(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }

  /// Fast finite evaluation; returns a non-finite value at poles.
  Complex operator()(Complex z) const { return num_(z) / den_(z); }
  ExtComplex eval(const ExtComplex& z) const;

 private:
  RationalMap(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

RationalMap rat_make(Polynomial num, Polynomial den);
ExtComplex rat_eval(const RationalMap& r, const ExtComplex& z);

enum class RatOp { Add, Sub, Mul, Div, Compose };

/// compose(R1, R2) is R1 o R2.
RationalMap rat_combine(RatOp op, const RationalMap& r1, const RationalMap& r2);
RationalMap rat_derivative(const RationalMap& r);

RationalMap operator+(const RationalMap& a, const RationalMap& b);
RationalMap operator-(const RationalMap& a, const RationalMap& b);
RationalMap operator*(const RationalMap& a, const RationalMap& b);
RationalMap operator/(const RationalMap& a, const RationalMap& b);
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

/// Same map up to a common scale of numerator and denominator, compared
/// coefficientwise after normalization. Tolerance is relative to max |coeff|.
bool same_map(const RationalMap& a, const RationalMap& b, double tolerance);

/// Derivative of R at a point of the sphere, computed in the charts w = 1/z
/// wherever the point or its image is infinity.
Complex chart_derivative(const RationalMap& r, const ExtComplex& z);

}  // namespace ndyn
