#include "ndyn/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace ndyn {

Mobius::Mobius(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "singular Mobius transformation");
}

ExtComplex Mobius::operator()(const ExtComplex& z) const {
  if (z.is_infinity()) {
    if (c_ == Complex(0.0)) return ExtComplex::infinity();
    return a_ / c_;
  }
  const Complex den = c_ * z.value() + d_;
  if (den == Complex(0.0)) return ExtComplex::infinity();
  return (a_ * z.value() + b_) / den;
}

RationalMap Mobius::as_map() const { return RationalMap::make(Polynomial{b_, a_}, Polynomial{d_, c_}); }

Mobius standard_tau(Complex c) {
  if (c == Complex(0.0)) throw Error(ErrorKind::ZeroC, "c must be nonzero");
  const Complex s = std::sqrt(c);
  return {1.0, s, 1.0, -s};
}

RationalMap mobius_conjugate(const RationalMap& r, const Mobius& m) {
  return compose(m.as_map(), compose(r, m.inverse().as_map()));
}

OperatorForm OperatorForm::from_coefficients(int n, std::vector<Complex> a, int sign) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "normal form needs n >= 1");
  while (!a.empty() && a.back() == Complex(0.0)) {
    a.pop_back();
    ++n;
  }
  OperatorForm f;
  f.n = n;
  f.k = static_cast<int>(a.size());
  f.a = std::move(a);
  f.sign = sign;
  Complex sum = 1.0;
  double mag = 1.0;
  for (const Complex x : f.a) {
    sum += x;
    mag += std::abs(x);
  }
  f.coefficient_sum_vanishes = f.k > 0 && std::abs(sum) <= tol::palindrome * mag;
  f.degenerate = f.coefficient_sum_vanishes || sign == -1;
  if (f.k > 0) f.roots = poly_roots(f.P());
  return f;
}

Polynomial OperatorForm::P() const {
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(k)] = 1.0;
  for (int j = 1; j <= k; ++j) c[static_cast<std::size_t>(k - j)] = a[static_cast<std::size_t>(j - 1)];
  return Polynomial(std::move(c));
}

Polynomial OperatorForm::P_hat() const {
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1);
  c[0] = 1.0;
  for (int j = 1; j <= k; ++j) c[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)];
  return Polynomial(std::move(c));
}

RationalMap OperatorForm::to_map() const {
  return RationalMap::make(P().scaled(static_cast<double>(sign)) * Polynomial::monomial(n), P_hat());
}

Complex OperatorForm::operator()(Complex z) const {
  Complex num = 1.0, den = 0.0;
  // P(z) = z^k + a_1 z^{k-1} + ... + a_k ; P^(z) = a_k z^k + ... + a_1 z + 1
  for (int j = 1; j <= k; ++j) num = num * z + a[static_cast<std::size_t>(j - 1)];
  for (int j = k; j >= 1; --j) den = den * z + a[static_cast<std::size_t>(j - 1)];
  den = den * z + 1.0;
  return static_cast<double>(sign) * std::pow(z, n) * num / den;
}

OperatorForm extract_normal_form(const RationalMap& r) {
  const Polynomial& num = r.num();
  const Polynomial& den = r.den();
  // Leading denominator terms at the mirror tolerance are rounding residue of
  // exactly cancelling terms; their numerator mirrors are checked below.
  int k = den.degree();
  const double dmax = den.max_abs_coeff();
  while (k > 0 && std::abs(den[k]) <= tol::palindrome * dmax) --k;
  const int n = num.degree() - k;
  if (n < 1) throw Error(ErrorKind::NotFixingOneZeroInfinity, "infinity is not a superattracting fixed point");
  if (std::abs(den[0]) <= tol::trim * den.max_abs_coeff())
    throw Error(ErrorKind::NotFixingOneZeroInfinity, "0 is a pole");
  const double scale = std::max(num.max_abs_coeff(), den.max_abs_coeff());
  for (int i = 0; i < n; ++i) {
    if (std::abs(num[i]) > tol::palindrome * scale)
      throw Error(ErrorKind::NotFixingOneZeroInfinity, "0 is not a fixed point of local degree n");
  }
  const Complex s = num.leading() / den[0];
  int sign = 0;
  if (std::abs(s - 1.0) <= tol::palindrome) sign = 1;
  if (std::abs(s + 1.0) <= tol::palindrome) sign = -1;
  if (sign == 0) {
    throw Error(ErrorKind::NotFixingOneZeroInfinity,
                "R(1) is not +-1 (leading ratio " + format_complex(s) + ")");
  }
  // Mirror: num[n + j] / s must equal den[k - j].
  const double mscale = std::max(1.0, dmax);
  for (int j = 0; j <= k; ++j) {
    if (std::abs(num[n + j] / s - den[k - j]) > tol::palindrome * mscale)
      throw Error(ErrorKind::NotPalindromic, "numerator and denominator are not mirrored at index " + std::to_string(j));
  }
  std::vector<Complex> a;
  for (int j = 1; j <= k; ++j) a.push_back(den[j] / den[0]);
  return OperatorForm::from_coefficients(n, std::move(a), sign);
}

bool check_iota_symmetry(const RationalMap& r, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(std::log(0.2), std::log(5.0));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  int done = 0;
  int attempts = 0;
  while (done < trials) {
    if (++attempts > 1000 * trials) return false;
    const Complex z = std::polar(std::exp(radius(rng)), angle(rng));
    const Complex w = 1.0 / z;
    if (r.den().relative_residual(z) < 1e-6 || r.num().relative_residual(z) < 1e-6) continue;
    if (r.den().relative_residual(w) < 1e-6 || r.num().relative_residual(w) < 1e-6) continue;
    const Complex inv = 1.0 / r(z);
    if (std::abs(r(w) - inv) > 1e-9 * (1.0 + std::abs(inv))) return false;
    ++done;
  }
  return true;
}

}  // namespace ndyn
