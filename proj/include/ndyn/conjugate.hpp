#pragma once

#include <cstdint>
#include <vector>

#include "ndyn/rational.hpp"

namespace ndyn {

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
class Mobius {
 public:
  /// Throws InvalidArgument on a singular matrix.
  Mobius(Complex a, Complex b, Complex c, Complex d);

  static Mobius identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// z -> 1/z
  static Mobius iota() { return {0.0, 1.0, 1.0, 0.0}; }
  /// z -> -z
  static Mobius negation() { return {-1.0, 0.0, 0.0, 1.0}; }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Mobius inverse() const { return {d_, -b_, -c_, a_}; }
  ExtComplex operator()(const ExtComplex& z) const;
  RationalMap as_map() const;

 private:
  Complex a_, b_, c_, d_;
};

/// (z + sqrt c) / (z - sqrt c) with the principal root: sends sqrt c to
/// infinity, -sqrt c to 0 and infinity to 1. Throws ZeroC.
Mobius standard_tau(Complex c);

/// M o R o M^-1, reduced.
RationalMap mobius_conjugate(const RationalMap& r, const Mobius& m);

/// sign * z^n P(z) / P^(z) with P = a_k + a_{k-1} z + ... + a_1 z^{k-1} + z^k
/// and P^ its reversal 1 + a_1 z + ... + a_k z^k.
struct OperatorForm {
  int n = 1;
  int k = 0;
  std::vector<Complex> a;      // a_1 .. a_k
  std::vector<Complex> roots;  // roots of P
  int sign = 1;
  bool coefficient_sum_vanishes = false;  // 1 + a_1 + ... + a_k = 0, so P(1) = 0
  bool degenerate = false;                // either of the two signals above

  /// Builds a form from its coefficients. Trailing zero a_k are folded into n
  /// (z^n P/P^ with P(0) = 0 is z^{n+1} times the shorter form).
  static OperatorForm from_coefficients(int n, std::vector<Complex> a, int sign = 1);

  Polynomial P() const;
  Polynomial P_hat() const;
  /// Reduced rational map; a vanishing coefficient sum cancels (z - 1).
  RationalMap to_map() const;
  /// Direct evaluation of the unreduced quotient.
  Complex operator()(Complex z) const;
};

/// Reads the normal form off a map fixing 0 and infinity with R(1) = +-1.
/// Throws NotFixingOneZeroInfinity or NotPalindromic.
OperatorForm extract_normal_form(const RationalMap& r);

/// |R(1/z) - 1/R(z)| <= 1e-9 (1 + |1/R(z)|) at `trials` random points.
bool check_iota_symmetry(const RationalMap& r, int trials, std::uint64_t seed = 7);

}  // namespace ndyn
