#include "ndyn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ndyn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void trim_trailing(std::vector<Complex>& c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  if (m == 0.0) {
    c.clear();
    return;
  }
  const double cut = tol::trim * m;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim_trailing(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::monomial(int degree, Complex coeff) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (const Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& x : coeffs_) m = std::max(m, std::abs(x));
  return m;
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void Polynomial::eval_with_derivative(Complex z, Complex& value, Complex& deriv) const {
  value = 0.0;
  deriv = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

double Polynomial::abs_scale(Complex z) const {
  const double r = std::max(1.0, std::abs(z));
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double Polynomial::relative_residual(Complex z) const {
  const double s = abs_scale(z);
  return s == 0.0 ? 0.0 : std::abs((*this)(z)) / s;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative(int order) const {
  Polynomial p = *this;
  for (int i = 0; i < order && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

Polynomial Polynomial::reversed(int n) const {
  if (is_zero()) return {};
  if (n < degree()) throw Error(ErrorKind::InvalidArgument, "reversal length below degree");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(n) - i] = coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shift_down(int m) const {
  if (m <= 0) return *this;
  if (m >= static_cast<int>(coeffs_.size())) return {};
  return Polynomial(std::vector<Complex>(coeffs_.begin() + m, coeffs_.end()));
}

Polynomial Polynomial::scaled(Complex s) const {
  std::vector<Complex> c(coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

int Polynomial::low_order_zeros() const {
  const double cut = tol::trim * max_abs_coeff();
  int m = 0;
  while (m < static_cast<int>(coeffs_.size()) && std::abs(coeffs_[static_cast<std::size_t>(m)]) <= cut) ++m;
  return m;
}

// Sums and products snap coefficients that cancel down to rounding level to
// exact zeros, so that exact identities survive floating point arithmetic.
Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Complex> c(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex x = a[static_cast<int>(i)], y = b[static_cast<int>(i)];
    const Complex s = x + y;
    c[i] = std::abs(s) <= 4.0 * kEps * (std::abs(x) + std::abs(y)) ? Complex(0.0) : s;
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-1.0); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  std::vector<Complex> c(n, 0.0);
  std::vector<double> mag(n, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const Complex t = a.coeffs_[i] * b.coeffs_[j];
      c[i + j] += t;
      mag[i + j] += std::abs(t);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double terms = static_cast<double>(std::min(k + 1, n - k)) + 1.0;
    if (std::abs(c[k]) <= 4.0 * kEps * terms * mag[k]) c[k] = 0.0;
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result = Polynomial::constant(1.0);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial deflate(const Polynomial& p, Complex x) {
  const int n = p.degree();
  if (n <= 0) return {};
  std::vector<Complex> q(static_cast<std::size_t>(n), 0.0);
  if (std::abs(x) <= 1.0) {
    Complex acc = p[n];
    for (int i = n - 1; i >= 0; --i) {
      q[static_cast<std::size_t>(i)] = acc;
      acc = p[i] + x * acc;
    }
  } else {
    // Backward division from the constant term: a_0 = -x q_0, a_i = q_{i-1} - x q_i.
    Complex prev = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex qi = (prev - p[i]) / x;
      q[static_cast<std::size_t>(i)] = qi;
      prev = qi;
    }
  }
  return Polynomial(std::move(q));
}

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  const int na = a.degree(), nb = b.degree();
  if (na < nb) {
    q = Polynomial();
    r = a;
    return;
  }
  std::vector<Complex> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Complex> quot(static_cast<std::size_t>(na - nb) + 1, 0.0);
  const Complex lead = b.leading();
  for (int i = na - nb; i >= 0; --i) {
    const Complex t = rem[static_cast<std::size_t>(i + nb)] / lead;
    quot[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= nb; ++j) rem[static_cast<std::size_t>(i + j)] -= t * b[j];
    rem[static_cast<std::size_t>(i + nb)] = 0.0;
  }
  rem.resize(static_cast<std::size_t>(nb));
  q = Polynomial(std::move(quot));
  // The remainder is kept untrimmed relative to a: its size is what matters.
  r = Polynomial();
  for (std::size_t i = rem.size(); i-- > 0;) {
    if (rem[i] != Complex(0.0)) {
      rem.resize(i + 1);
      r.coeffs_ = std::move(rem);
      break;
    }
  }
}

double root_distance_bound(const Polynomial& p, Complex x) {
  const int n = p.degree();
  if (n < 1) return std::numeric_limits<double>::infinity();
  const double v = std::abs(p(x));
  if (v == 0.0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  Polynomial d = p;
  double binom = 1.0, fact = 1.0;
  for (int j = 1; j <= n; ++j) {
    d = d.derivative();
    binom = binom * (n - j + 1) / j;
    fact *= j;
    const double dj = std::abs(d(x));
    if (dj > 0.0) best = std::min(best, std::pow(binom * fact * v / dj, 1.0 / j));
  }
  return best;
}

Polynomial homogeneous_compose(const Polynomial& p, const Polynomial& num, const Polynomial& den, int m) {
  if (p.is_zero()) return {};
  const int deg = p.degree();
  if (m < deg) throw Error(ErrorKind::InvalidArgument, "homogeneous degree below polynomial degree");
  // den powers 0..deg
  std::vector<Polynomial> dpow{Polynomial::constant(1.0)};
  for (int i = 1; i <= deg; ++i) dpow.push_back(dpow.back() * den);
  Polynomial acc = Polynomial::constant(p[deg]);
  for (int i = deg - 1; i >= 0; --i) acc = acc * num + p[i] * dpow[static_cast<std::size_t>(deg - i)];
  if (m > deg) acc = acc * den.pow(m - deg);
  return acc;
}

ExtComplex poly_eval(const Polynomial& p, const ExtComplex& z) {
  if (z.is_finite()) return p(z.value());
  if (p.degree() >= 1) return ExtComplex::infinity();
  return p[0];
}

}  // namespace ndyn
