#include "ndyn/rational.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace ndyn {

namespace {

// x is taken as a root of p when p(x) is at rounding level relative to the
// evaluation scale and a rigorous bound puts a root of p near x. The bound
// stays meaningful at multiple roots, where a Newton step is pure noise.
bool shares_root(const Polynomial& p, Complex x) {
  if (p.degree() < 1) return false;
  if (p.relative_residual(x) > tol::cancel_residual) return false;
  return root_distance_bound(p, x) <= tol::cancel_bound * (1.0 + std::abs(x));
}

// Returns q with big = q * small when the division is exact to rounding.
std::optional<Polynomial> exact_quotient(const Polynomial& big, const Polynomial& small) {
  if (small.degree() < 1 || big.degree() < small.degree()) return std::nullopt;
  Polynomial q, r;
  divmod(big, small, q, r);
  if (r.max_abs_coeff() > tol::cancel_residual * big.max_abs_coeff()) return std::nullopt;
  return q;
}

// Splits off the common factor g of a and b: on return a and b hold a/g and
// b/g. Exact divisibility is tried first; otherwise roots of the lower-degree
// polynomial (clustered for multiple roots) are matched one factor at a time.
Polynomial split_common(Polynomial& a, Polynomial& b) {
  Polynomial g = Polynomial::constant(1.0);
  const int z_power = std::min(a.low_order_zeros(), b.low_order_zeros());
  if (z_power > 0) {
    a = a.shift_down(z_power);
    b = b.shift_down(z_power);
    g = Polynomial::monomial(z_power);
  }
  Polynomial& small = a.degree() <= b.degree() ? a : b;
  Polynomial& other = a.degree() <= b.degree() ? b : a;
  if (small.degree() < 1 || other.degree() < 1) return g;

  if (auto q = exact_quotient(other, small)) {
    g = g * small;
    other = std::move(*q);
    small = Polynomial::constant(1.0);
    return g;
  }

  std::vector<Complex> common;
  for (const RootCluster& root : distinct_roots(small)) {
    const Complex x = root.point;
    int count = 0;
    while (count < root.multiplicity && shares_root(other, x)) {
      other = deflate(other, x);
      ++count;
    }
    for (int i = 0; i < count; ++i) {
      small = deflate(small, x);
      common.push_back(x);
    }
  }
  return g * Polynomial::from_roots(common);
}

Polynomial iota_num() { return Polynomial{1.0}; }

}  // namespace

RationalMap RationalMap::make(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational map with zero denominator");
  if (num.is_zero()) return RationalMap(Polynomial(), Polynomial::constant(1.0));
  split_common(num, den);
  return reduced(std::move(num), std::move(den));
}

RationalMap RationalMap::reduced(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational map with zero denominator");
  if (num.is_zero()) return RationalMap(Polynomial(), Polynomial::constant(1.0));
  const int low = den.low_order_zeros();
  const Complex s = den[low];
  std::vector<Complex> dc(den.coeffs().begin(), den.coeffs().end());
  for (auto& c : dc) c /= s;
  for (int i = 0; i < low; ++i) dc[static_cast<std::size_t>(i)] = 0.0;
  dc[static_cast<std::size_t>(low)] = 1.0;
  return RationalMap(num.scaled(1.0 / s), Polynomial(std::move(dc)));
}

RationalMap RationalMap::identity() {
  return RationalMap(Polynomial{0.0, 1.0}, Polynomial::constant(1.0));
}

RationalMap RationalMap::constant(Complex c) {
  return RationalMap(Polynomial::constant(c), Polynomial::constant(1.0));
}

RationalMap RationalMap::polynomial(Polynomial p) {
  return RationalMap(std::move(p), Polynomial::constant(1.0));
}

ExtComplex RationalMap::eval(const ExtComplex& z) const {
  if (is_zero()) return 0.0;
  if (z.is_finite()) {
    const Complex d = den_(z.value());
    if (d == Complex(0.0)) return ExtComplex::infinity();
    const Complex v = num_(z.value()) / d;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return ExtComplex::infinity();
    return v;
  }
  if (num_.degree() > den_.degree()) return ExtComplex::infinity();
  if (num_.degree() == den_.degree()) return num_.leading() / den_.leading();
  return 0.0;
}

RationalMap rat_make(Polynomial num, Polynomial den) {
  return RationalMap::make(std::move(num), std::move(den));
}

ExtComplex rat_eval(const RationalMap& r, const ExtComplex& z) { return r.eval(z); }

RationalMap rat_combine(RatOp op, const RationalMap& r1, const RationalMap& r2) {
  const Polynomial &n1 = r1.num(), &d1 = r1.den(), &n2 = r2.num(), &d2 = r2.den();
  switch (op) {
    case RatOp::Add:
    case RatOp::Sub: {
      // n1/(g b) + n2/(g d) = (n1 d + n2 b) / (g b d); only g can still cancel.
      Polynomial b = d1, d = d2;
      Polynomial g = split_common(b, d);
      Polynomial num = op == RatOp::Add ? n1 * d + n2 * b : n1 * d - n2 * b;
      if (num.is_zero()) return RationalMap::constant(0.0);
      if (g.degree() >= 1) split_common(num, g);
      return RationalMap::reduced(std::move(num), g * b * d);
    }
    case RatOp::Mul:
    case RatOp::Div: {
      if (op == RatOp::Div && r2.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero map");
      // Cross-cancel; the product of the reduced pairs is reduced.
      Polynomial a = n1, bb = op == RatOp::Mul ? n2 : d2;
      Polynomial x = op == RatOp::Mul ? d2 : n2, y = d1;
      if (a.is_zero() || bb.is_zero()) return RationalMap::constant(0.0);
      split_common(a, x);
      split_common(bb, y);
      return RationalMap::reduced(a * bb, x * y);
    }
    case RatOp::Compose: {
      // For coprime A/B and N/D the homogenized A*(N, D) and B*(N, D) are
      // coprime, so only powers of D need balancing.
      if (r1.is_zero()) return RationalMap::constant(0.0);
      const int da = n1.degree(), db = d1.degree();
      Polynomial num = homogeneous_compose(n1, n2, d2, da);
      Polynomial den = homogeneous_compose(d1, n2, d2, db);
      if (db > da) num = num * d2.pow(db - da);
      if (da > db) den = den * d2.pow(da - db);
      return RationalMap::reduced(std::move(num), std::move(den));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown rational operation");
}

RationalMap rat_derivative(const RationalMap& r) {
  const Polynomial& n = r.num();
  const Polynomial& d = r.den();
  return RationalMap::make(n.derivative() * d - n * d.derivative(), d * d);
}

RationalMap operator+(const RationalMap& a, const RationalMap& b) { return rat_combine(RatOp::Add, a, b); }
RationalMap operator-(const RationalMap& a, const RationalMap& b) { return rat_combine(RatOp::Sub, a, b); }
RationalMap operator*(const RationalMap& a, const RationalMap& b) { return rat_combine(RatOp::Mul, a, b); }
RationalMap operator/(const RationalMap& a, const RationalMap& b) { return rat_combine(RatOp::Div, a, b); }
RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  return rat_combine(RatOp::Compose, outer, inner);
}

bool same_map(const RationalMap& a, const RationalMap& b, double tolerance) {
  const double scale = std::max({1.0, a.num().max_abs_coeff(), a.den().max_abs_coeff(),
                                 b.num().max_abs_coeff(), b.den().max_abs_coeff()});
  const int nd = std::max(a.num().degree(), b.num().degree());
  const int dd = std::max(a.den().degree(), b.den().degree());
  for (int i = 0; i <= nd; ++i)
    if (std::abs(a.num()[i] - b.num()[i]) > tolerance * scale) return false;
  for (int i = 0; i <= dd; ++i)
    if (std::abs(a.den()[i] - b.den()[i]) > tolerance * scale) return false;
  return true;
}

Complex chart_derivative(const RationalMap& r, const ExtComplex& z) {
  const RationalMap iota = RationalMap::make(iota_num(), Polynomial{0.0, 1.0});
  if (z.is_infinity()) {
    const RationalMap g = compose(r, iota);
    return chart_derivative(g, 0.0);
  }
  const Complex x = z.value();
  Complex n, dn, d, dd;
  r.num().eval_with_derivative(x, n, dn);
  r.den().eval_with_derivative(x, d, dd);
  if (d == Complex(0.0)) {
    // Image is infinity: differentiate 1/R = den/num.
    return (dd * n - d * dn) / (n * n);
  }
  return (dn * d - n * dd) / (d * d);
}

}  // namespace ndyn
