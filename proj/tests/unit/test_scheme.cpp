#include "doctest.h"
#include "ndyn/builder.hpp"
#include "ndyn/scheme.hpp"

using namespace ndyn;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse a two-step scheme") {
  const SchemeExpr e = parse_scheme("y = z - p(z)/p'(z);\nnext = y - p(y)/p'(z);\n");
  REQUIRE(e.steps.size() == 2);
  CHECK(e.steps[0].name == "y");
  CHECK(e.steps[1].name == "next");
  CHECK(e.parameters().empty());
  CHECK(to_text(parse_scheme(to_text(e))) == to_text(e));
}

TEST_CASE("parameters in order of appearance") {
  const SchemeExpr e = parse_scheme("next = z - gamma*p(z)/(p'(z) + beta*gamma);");
  CHECK(e.parameters() == std::vector<std::string>{"gamma", "beta"});
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_scheme("next = z - * p(z);");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.line() == 1);
    CHECK(e.column() > 1);
  }
  try {
    parse_scheme("y = z - w;\nw = z;\nnext = y - p(y);");
    FAIL("expected an unbound identifier");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::UnboundIdentifier);
    CHECK(e.line() == 1);
    CHECK(e.identifier() == "w");
  }
  CHECK(kind_of([] { parse_scheme("next = q(z);"); }) == ErrorKind::UnboundIdentifier);
  CHECK(kind_of([] { parse_scheme("y = z;"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("2") == Complex(2, 0));
  CHECK(parse_complex("-1.5") == Complex(-1.5, 0));
  CHECK(parse_complex("3i") == Complex(0, 3));
  CHECK(parse_complex("1.5+2i") == Complex(1.5, 2));
  CHECK(parse_complex("1-2i") == Complex(1, -2));
  CHECK(kind_of([] { parse_complex("1+"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("target derivatives") {
  const Polynomial p1 = target_derivative(3, 2.0, 1);
  CHECK(p1.degree() == 2);
  CHECK(p1[2] == Complex(3.0));
  CHECK(target_derivative(3, 2.0, 0)[0] == Complex(-2.0));
  CHECK(target_derivative(2, 1.0, 3).is_zero());
}

TEST_CASE("Newton on z^2 - 1") {
  const RationalMap r = instantiate(parse_scheme("next = z - p(z)/p'(z);"), SchemeContext{2, 1.0, {}});
  const RationalMap expected = RationalMap::make(Polynomial{1.0, 0.0, 1.0}, Polynomial{0.0, 2.0});
  CHECK(same_map(r, expected, 1e-12));
  CHECK(check_lambda_odd(r, 2, 50));
  CHECK(check_infinity_simple(r) == InfinityClass::Simple);
}

TEST_CASE("instantiation errors") {
  const SchemeExpr e = parse_scheme("next = z - gamma*p(z)/p'(z);");
  CHECK(kind_of([&] { instantiate(e, SchemeContext{2, 1.0, {}}); }) == ErrorKind::UnboundIdentifier);
  CHECK(kind_of([&] { instantiate(e, SchemeContext{2, 0.0, {{"gamma", 1.0}}}); }) == ErrorKind::ZeroC);
  CHECK(kind_of([] { instantiate(parse_scheme("next = z/(p(z) - p(z));"), SchemeContext{}); }) ==
        ErrorKind::DivisionByZeroMap);
}

TEST_CASE("a non-symmetric scheme is detected") {
  const RationalMap r = instantiate(parse_scheme("next = z - p(z)/p'(z) + 1;"), SchemeContext{2, 1.0, {}});
  CHECK_FALSE(check_lambda_odd(r, 2, 50));
}
