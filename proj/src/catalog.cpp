#include "ndyn/catalog.hpp"

namespace ndyn {

Bindings CatalogEntry::complete(const Bindings& given) const {
  Bindings out = defaults;
  for (const auto& [k, v] : given) out[k] = v;
  return out;
}

namespace {

CatalogEntry scheme_entry(std::string name, std::vector<std::string> params, Bindings defaults, std::string text,
                          std::optional<std::pair<int, int>> nk, std::vector<int> odd, std::string doc) {
  CatalogEntry e;
  e.name = std::move(name);
  e.parameters = std::move(params);
  e.defaults = std::move(defaults);
  e.kind = EntryKind::Scheme;
  e.scheme_text = std::move(text);
  e.scheme = parse_scheme(e.scheme_text);
  e.expected_nk = nk;
  e.lambda_odd_degrees = std::move(odd);
  e.doc = std::move(doc);
  return e;
}

CatalogEntry form_entry(std::string name, std::string param, Complex def, int n,
                        std::function<std::vector<Complex>(Complex)> coeffs, std::string doc) {
  CatalogEntry e;
  e.name = std::move(name);
  e.parameters = {param};
  e.defaults = {{param, def}};
  e.kind = EntryKind::PostConjugation;
  e.form = [param, n, coeffs](const Bindings& b) {
    return OperatorForm::from_coefficients(n, coeffs(b.at(param)));
  };
  const OperatorForm f = e.form(e.defaults);
  e.expected_nk = std::make_pair(f.n, f.k);
  e.doc = std::move(doc);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  const std::vector<int> all{2, 3, 4};
  std::vector<CatalogEntry> c;
  c.push_back(scheme_entry("newton", {}, {}, "next = z - p(z)/p'(z);\n", std::make_pair(2, 0), all,
                           "Newton's method, order 2"));
  c.push_back(scheme_entry("traub", {}, {},
                           "y = z - p(z)/p'(z);\n"
                           "next = y - p(y)/p'(z);\n",
                           std::make_pair(3, 1), all, "Traub's two-step scheme with frozen derivative, order 3"));
  c.push_back(scheme_entry("steffensen", {}, {}, "next = z - p(z)*p(z)/(p(z + p(z)) - p(z));\n", std::nullopt, {},
                           "Steffensen's derivative-free method"));
  c.push_back(scheme_entry("traub-steffensen", {"gamma"}, {{"gamma", 0.5}},
                           "next = z - gamma*p(z)*p(z)/(p(z + gamma*p(z)) - p(z));\n", std::nullopt, {},
                           "Traub-Steffensen derivative-free method"));
  c.push_back(scheme_entry("ostrowski", {}, {},
                           "y = z - p(z)/p'(z);\n"
                           "next = y - p(y)/p'(z)*p(z)/(p(z) - 2*p(y));\n",
                           std::make_pair(4, 0), all, "Ostrowski's method, order 4"));
  c.push_back(scheme_entry("king", {"beta"}, {{"beta", 0.0}},
                           "y = z - p(z)/p'(z);\n"
                           "next = y - p(y)/p'(z)*(p(z) + (beta + 2)*p(y))/(p(z) + beta*p(y));\n",
                           std::make_pair(4, 2), all,
                           "King's family, parameterized so that the normal form has a_1 = 4 + beta, a_2 = 5 + 2 beta"));
  c.push_back(scheme_entry("jarratt", {}, {},
                           "y = z - 2/3*p(z)/p'(z);\n"
                           "j = (3*p'(y) + p'(z))/(2*(3*p'(y) - p'(z)));\n"
                           "next = z - j*p(z)/p'(z);\n",
                           std::make_pair(4, 0), all, "Jarratt's method, order 4"));
  c.push_back(scheme_entry("wang", {}, {},
                           "y = z - 2/3*p(z)/p'(z);\n"
                           "j = (3*p'(y) + p'(z))/(6*p'(y) - 2*p'(z));\n"
                           "w = z - j*p(z)/p'(z);\n"
                           "next = w - p(w)/p'(w);\n",
                           std::make_pair(8, 0), all, "Jarratt step followed by a Newton step"));
  c.push_back(scheme_entry("amat", {"beta"}, {{"beta", 1.0}},
                           "u = p(z)/p'(z);\n"
                           "h = (p'(z - 2/3*u) - p'(z))/p'(z);\n"
                           "next = z - u + 3/4*u*h*(1 + beta*h)/(1 + (3/2 + beta)*h);\n",
                           std::make_pair(4, 2), all, "Amat's fourth-order family; beta = 0 collapses to z^4"));
  c.push_back(scheme_entry("chun", {"alpha"}, {{"alpha", 0.0}},
                           "y = z - 2/3*p(z)/p'(z);\n"
                           "j = (3*p'(y) + p'(z))/(6*p'(y) - 2*p'(z));\n"
                           "w = z - j*p(z)/p'(z);\n"
                           "next = w - p(w)/(alpha*(w - z)*(w - y) + 3/2*j*p'(y) + (1 - 3/2*j)*p'(z));\n",
                           std::make_pair(8, 0), {3},
                           "Chun's sixth-order family; the alpha term breaks the symmetry unless d = 3"));
  c.push_back(scheme_entry("chebyshev-halley", {"alpha"}, {{"alpha", 0.0}},
                           "y = z - p(z)/p'(z);\n"
                           "l = p(z)*p''(z)/(p'(z)*p'(z));\n"
                           "next = y - 1/2*l/(1 - alpha*l)*p(z)/p'(z);\n",
                           std::make_pair(3, 1), all, "Chebyshev-Halley family; alpha = 1/2 is Halley"));

  c.push_back(form_entry("c-family", "c", 1.0, 3,
                         [](Complex v) { return std::vector<Complex>{4.0, 5.0, 2.0 * (1.0 - 2.0 * v)}; },
                         "c-family of methods, n = k = 3"));
  {
    CatalogEntry m4 = form_entry(
        "m4", "beta", 1.0, 4,
        [](Complex beta) {
          if (beta == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "m4 requires beta != 0");
          return std::vector<Complex>{6.0, 14.0, 14.0, (-1.0 + 5.0 * beta) / beta};
        },
        "three-step method M4 with frozen derivative, n = k = 4");
    m4.linear = LinearCoordinate{"alpha",
                                 [](Complex alpha) { return 1.0 / (5.0 - alpha); },
                                 [](Complex beta) { return (-1.0 + 5.0 * beta) / beta; }};
    c.push_back(std::move(m4));
  }
  c.push_back(form_entry("os2", "a", 0.0, 5,
                         [](Complex a) { return std::vector<Complex>{6.0 + a, 2.0 * (7.0 + 2.0 * a), 14.0 + 5.0 * a}; },
                         "Ostrowski-Chun subfamily S2, n = 5, k = 3"));
  c.push_back(form_entry("os3", "a", 0.0, 4,
                         [](Complex a) {
                           const Complex q = 196.0 + 76.0 * a + 9.0 * a * a;
                           if (q == Complex(0.0)) throw Error(ErrorKind::InvalidArgument, "os3 pole in the parameter");
                           return std::vector<Complex>{6.0 + a, 2.0 * (7.0 + 2.0 * a), 14.0 + 5.0 * a,
                                                       5.0 * (14.0 + 5.0 * a) * (14.0 + 5.0 * a) / q};
                         },
                         "Ostrowski-Chun subfamily S3, n = k = 4, nonlinear in a"));
  c.push_back(form_entry("os4", "b", 1.0, 4,
                         [](Complex b) { return std::vector<Complex>{2.0, -2.0, -6.0, 4.0 * b - 3.0}; },
                         "Ostrowski-Chun subfamily S4, n = k = 4; z = 1 is superattracting"));
  c.push_back(form_entry("os5", "a", 0.0, 4,
                         [](Complex a) {
                           return std::vector<Complex>{6.0 + a, 14.0 + 4.0 * a, 14.0 + 5.0 * a, -5.0 * (7.0 + 2.0 * a)};
                         },
                         "Ostrowski-Chun subfamily S5, degenerate: P(1) = 0"));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw Error(ErrorKind::UnknownMethod, "no catalog method named '" + name + "'");
}

RationalMap catalog_map(const CatalogEntry& entry, const Bindings& bindings, int d, Complex c) {
  const Bindings b = entry.complete(bindings);
  if (entry.kind == EntryKind::PostConjugation) return entry.form(b).to_map();
  return instantiate(entry.scheme, SchemeContext{d, c, b});
}

OperatorForm catalog_form(const CatalogEntry& entry, const Bindings& bindings, Complex c) {
  const Bindings b = entry.complete(bindings);
  if (entry.kind == EntryKind::PostConjugation) return entry.form(b);
  const RationalMap r = instantiate(entry.scheme, SchemeContext{2, c, b});
  return extract_normal_form(mobius_conjugate(r, standard_tau(c)));
}

}  // namespace ndyn
