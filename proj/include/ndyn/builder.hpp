#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ndyn/rational.hpp"
#include "ndyn/scheme.hpp"

namespace ndyn {

using Bindings = std::map<std::string, Complex>;

/// p(z) = z^d - c together with the parameter values of a scheme.
struct SchemeContext {
  int d = 2;
  Complex c = 1.0;
  Bindings bindings;
};

/// The polynomial p^(k) for p(z) = z^d - c; zero when k > d.
Polynomial target_derivative(int d, Complex c, int k);

/// Substitutes the target polynomial into every step and reduces. Throws
/// DivisionByZeroMap, UnboundIdentifier (missing binding), ZeroC, InvalidArgument.
RationalMap instantiate(const SchemeExpr& expr, const SchemeContext& ctx);

/// R(lambda z) = lambda R(z) for every d-th root of unity, sampled at `trials`
/// random points away from poles.
bool check_lambda_odd(const RationalMap& r, int d, int trials, std::uint64_t seed = 3);

enum class InfinityClass { Simple, SuperattractingAtInfinity, NotFixed };

InfinityClass check_infinity_simple(const RationalMap& r);
const char* to_string(InfinityClass c);

}  // namespace ndyn
