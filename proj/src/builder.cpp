#include "ndyn/builder.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ndyn {

Polynomial target_derivative(int d, Complex c, int k) {
  if (k > d) return {};
  double falling = 1.0;
  for (int i = 0; i < k; ++i) falling *= static_cast<double>(d - i);
  std::vector<Complex> coeffs(static_cast<std::size_t>(d - k) + 1, 0.0);
  coeffs.back() = falling;
  if (k == 0) coeffs[0] -= c;
  return Polynomial(std::move(coeffs));
}

namespace {

class Instantiator {
 public:
  explicit Instantiator(const SchemeContext& ctx) : ctx_(ctx) {}

  RationalMap run(const SchemeExpr& expr) {
    if (ctx_.d < 2) throw Error(ErrorKind::InvalidArgument, "degree d must be at least 2");
    if (ctx_.c == Complex(0.0)) throw Error(ErrorKind::ZeroC, "c must be nonzero");
    for (const auto& step : expr.steps) steps_[step.name] = eval(step.expr);
    return steps_.at("next");
  }

 private:
  RationalMap eval(const NodePtr& n) {
    switch (n->kind) {
      case NodeKind::Var:
        return RationalMap::identity();
      case NodeKind::Const:
        return RationalMap::constant(n->value);
      case NodeKind::Param: {
        const auto it = ctx_.bindings.find(n->name);
        if (it == ctx_.bindings.end())
          throw Error(ErrorKind::UnboundIdentifier, "no value bound for parameter '" + n->name + "'");
        return RationalMap::constant(it->second);
      }
      case NodeKind::StepRef:
        return steps_.at(n->name);
      case NodeKind::Deriv: {
        const Polynomial q = target_derivative(ctx_.d, ctx_.c, n->order);
        if (q.degree() <= 0) return RationalMap::constant(q[0]);
        return compose(RationalMap::polynomial(q), eval(n->lhs));
      }
      case NodeKind::Neg: {
        const RationalMap x = eval(n->lhs);
        return RationalMap::make(-x.num(), x.den());
      }
      case NodeKind::BinOp: {
        const RationalMap l = eval(n->lhs);
        const RationalMap r = eval(n->rhs);
        switch (n->op) {
          case '+': return l + r;
          case '-': return l - r;
          case '*': return l * r;
          default:
            if (r.is_zero())
              throw Error(ErrorKind::DivisionByZeroMap, "denominator '" + to_text(n->rhs) + "' reduces to the zero map");
            return l / r;
        }
      }
    }
    throw Error(ErrorKind::InvalidArgument, "malformed scheme node");
  }

  const SchemeContext& ctx_;
  std::map<std::string, RationalMap> steps_;
};

}  // namespace

RationalMap instantiate(const SchemeExpr& expr, const SchemeContext& ctx) { return Instantiator(ctx).run(expr); }

bool check_lambda_odd(const RationalMap& r, int d, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.1, 2.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> lambdas;
  for (int j = 0; j < d; ++j) lambdas.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / d));

  auto near_pole = [&](Complex z) { return r.den().relative_residual(z) < 1e-6; };
  int done = 0;
  int attempts = 0;
  while (done < trials) {
    if (++attempts > 1000 * trials) return false;
    const Complex z = std::polar(radius(rng), angle(rng));
    bool skip = near_pole(z);
    for (const Complex l : lambdas) skip = skip || near_pole(l * z);
    if (skip) continue;
    const Complex rz = r(z);
    for (const Complex l : lambdas) {
      if (std::abs(r(l * z) - l * rz) > 1e-9 * (1.0 + std::abs(rz))) return false;
    }
    ++done;
  }
  return true;
}

InfinityClass check_infinity_simple(const RationalMap& r) {
  const int gap = r.num().degree() - r.den().degree();
  if (gap == 1) return InfinityClass::Simple;
  if (gap >= 2) return InfinityClass::SuperattractingAtInfinity;
  return InfinityClass::NotFixed;
}

const char* to_string(InfinityClass c) {
  switch (c) {
    case InfinityClass::Simple: return "simple";
    case InfinityClass::SuperattractingAtInfinity: return "superattracting-at-infinity";
    case InfinityClass::NotFixed: return "not-fixed";
  }
  return "unknown";
}

}  // namespace ndyn
