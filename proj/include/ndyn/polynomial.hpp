#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ndyn/core.hpp"

namespace ndyn {

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Trailing coefficients below tol::trim * max|coeff| are dropped at
/// construction, so the last stored coefficient is the leading one. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial monomial(int degree, Complex coeff = 1.0);
  /// lead * prod (z - r_i)
  static Polynomial from_roots(std::span<const Complex> roots, Complex lead = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  /// Coefficient of z^i; zero beyond the degree.
  Complex operator[](int i) const;
  Complex leading() const;
  double max_abs_coeff() const;

  Complex operator()(Complex z) const;
  /// Horner evaluation together with the first derivative.
  void eval_with_derivative(Complex z, Complex& value, Complex& deriv) const;
  /// sum |a_i| |z|^i, the scale against which residuals are measured.
  double abs_scale(Complex z) const;
  double relative_residual(Complex z) const;

  Polynomial derivative() const;
  Polynomial derivative(int order) const;
  /// z^n p(1/z); requires n >= degree().
  Polynomial reversed(int n) const;
  Polynomial reversed() const { return reversed(degree()); }
  /// Divides by z^m, dropping the m lowest coefficients.
  Polynomial shift_down(int m) const;
  Polynomial scaled(Complex s) const;

  /// Number of lowest coefficients that are zero relative to the trim threshold.
  int low_order_zeros() const;

  friend void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& a) { return a.scaled(s); }

  Polynomial pow(int e) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Quotient of p by (z - x), choosing the numerically stable direction of
/// synthetic division. The remainder is discarded.
Polynomial deflate(const Polynomial& p, Complex x);

/// Long division a = q b + r with deg r < deg b. Throws ZeroPolynomial if b = 0.
void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

/// Upper bound on the distance from x to the nearest root of p, from the
/// identity p^(j)(x) / (j! p(x)) = e_j(1/(x - r_i)).
double root_distance_bound(const Polynomial& p, Complex x);

/// p(num/den) * den^m where m = degree of p: the homogeneous numerator of a
/// composition. `m` may exceed p.degree() to pad with extra den factors.
Polynomial homogeneous_compose(const Polynomial& p, const Polynomial& num, const Polynomial& den, int m);

ExtComplex poly_eval(const Polynomial& p, const ExtComplex& z);

/// All roots with multiplicity (Aberth-Ehrlich). Deterministic.
std::vector<Complex> poly_roots(const Polynomial& p);

struct RootCluster {
  Complex point;
  int multiplicity = 1;
};

/// Distinct roots with multiplicities. Clusters produced by multiple roots are
/// merged and refined on the matching derivative.
std::vector<RootCluster> distinct_roots(const Polynomial& p);

}  // namespace ndyn
