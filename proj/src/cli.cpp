#include "ndyn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "ndyn/analysis.hpp"
#include "ndyn/catalog.hpp"
#include "ndyn/planes.hpp"
#include "ndyn/stability.hpp"
#include "ndyn/verify.hpp"

namespace ndyn::cli {

namespace {

using Json = nlohmann::ordered_json;

// Adding 0.0 turns -0.0 into 0.0 so that output does not depend on signed zeros.
Json cjson(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json ext_json(const ExtComplex& z) { return z.is_infinity() ? Json("inf") : cjson(z.value()); }

Json poly_json(const Polynomial& p) {
  Json a = Json::array();
  for (const Complex c : p.coeffs()) a.push_back(cjson(c));
  return a;
}

Json cvec_json(const std::vector<Complex>& v) {
  Json a = Json::array();
  for (const Complex c : v) a.push_back(cjson(c));
  return a;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by the subcommands that act on one operator.
struct Options {
  std::string method;
  std::string scheme_file;
  std::vector<std::string> params;
  int d = 2;
  std::string c = "1";
  std::string vary;
  std::string window = "-2,2,-2,2";
  std::string res = "400x400";
  std::string out;
  std::string mode = "speed";
  int threads = 0;
  int max_iter = 150;
  std::optional<int> selector;
  std::vector<std::string> attractors;
  std::string cycle;
};

// The operator source: a catalog entry or a parsed scheme file.
struct Source {
  std::string label;
  const CatalogEntry* entry = nullptr;
  SchemeExpr scheme;
  std::vector<std::string> parameters;
  Bindings bindings;
  Complex c = 1.0;
  int d = 2;

  RationalMap operator_map() const {
    if (entry) return catalog_map(*entry, bindings, d, c);
    return instantiate(scheme, SchemeContext{d, c, bindings});
  }
  bool is_form_entry() const { return entry && entry->kind == EntryKind::PostConjugation; }
  OperatorForm normal_form(const Bindings& b) const {
    if (entry) return catalog_form(*entry, b, c);
    return extract_normal_form(mobius_conjugate(instantiate(scheme, SchemeContext{2, c, b}), standard_tau(c)));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IOError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Complex parse_value(const std::string& text, const std::string& what) {
  try {
    return parse_complex(text);
  } catch (const Error& e) {
    throw UsageError("invalid complex value for " + what + ": '" + text + "'");
  }
}

Source resolve(const Options& o) {
  if (o.method.empty() == o.scheme_file.empty()) throw UsageError("give exactly one of --method or --scheme-file");
  Source s;
  s.d = o.d;
  s.c = parse_value(o.c, "--c");
  if (o.d < 2) throw UsageError("--d must be at least 2");
  Bindings given;
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + p + "'");
    given[p.substr(0, eq)] = parse_value(p.substr(eq + 1), "parameter " + p.substr(0, eq));
  }
  if (!o.method.empty()) {
    try {
      s.entry = &catalog(o.method);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    s.label = o.method;
    s.parameters = s.entry->parameters;
    s.bindings = s.entry->complete(given);
  } else {
    s.label = o.scheme_file;
    s.scheme = parse_scheme(read_file(o.scheme_file));
    s.parameters = s.scheme.parameters();
    s.bindings = given;
  }
  for (const auto& [name, value] : given) {
    if (std::find(s.parameters.begin(), s.parameters.end(), name) == s.parameters.end())
      throw UsageError("'" + s.label + "' has no parameter '" + name + "'");
  }
  return s;
}

Json bindings_json(const Bindings& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b) j[k] = cjson(v);
  return j;
}

Json form_json(const OperatorForm& f) {
  Json j;
  j["n"] = f.n;
  j["k"] = f.k;
  j["sign"] = f.sign;
  j["a"] = cvec_json(f.a);
  j["roots"] = cvec_json(f.roots);
  j["coefficient_sum_vanishes"] = f.coefficient_sum_vanishes;
  j["degenerate"] = f.degenerate;
  return j;
}

struct Built {
  Json json;
  std::optional<OperatorForm> form;
  std::optional<RationalMap> raw;
};

Built build(const Source& s) {
  Built b;
  Json& j = b.json;
  j["method"] = s.label;
  j["bindings"] = bindings_json(s.bindings);
  if (!s.is_form_entry()) {
    j["d"] = s.d;
    j["c"] = cjson(s.c);
    b.raw = s.operator_map();
    j["operator"] = {{"num", poly_json(b.raw->num())},
                     {"den", poly_json(b.raw->den())},
                     {"degree", b.raw->degree()},
                     {"infinity", to_string(check_infinity_simple(*b.raw))}};
    j["lambda_odd"] = check_lambda_odd(*b.raw, s.d, 50);
  }
  if (s.d != 2 && !s.is_form_entry()) {
    j["normal_form"] = nullptr;
    j["normal_form_error"] = "the normal form is defined for d = 2";
    return b;
  }
  try {
    b.form = s.normal_form(s.bindings);
    j["normal_form"] = form_json(*b.form);
  } catch (const Error& e) {
    j["normal_form"] = nullptr;
    j["normal_form_error"] = e.what();
  }
  return b;
}

std::vector<Complex> parse_list(const std::string& text, const std::string& what) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_value(item, what));
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

Json fixed_json(const std::vector<FixedPointRecord>& fixed) {
  Json a = Json::array();
  for (const auto& f : fixed) {
    a.push_back({{"point", ext_json(f.point)},
                 {"multiplier", cjson(f.multiplier)},
                 {"abs_multiplier", std::abs(f.multiplier)},
                 {"class", to_string(f.cls)},
                 {"strange", f.strange},
                 {"multiplicity", f.multiplicity}});
  }
  return a;
}

Json critical_json(const std::vector<CriticalPointRecord>& crit) {
  Json a = Json::array();
  for (const auto& c : crit) {
    a.push_back({{"point", ext_json(c.point)},
                 {"multiplicity", c.multiplicity},
                 {"free", c.free},
                 {"partner", c.partner ? ext_json(*c.partner) : Json(nullptr)}});
  }
  return a;
}

int cmd_build(const Options& o, std::ostream& out) {
  out << build(resolve(o)).json.dump(2) << "\n";
  return Ok;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Source s = resolve(o);
  Built b = build(s);
  Json& j = b.json;
  RationalMap map;
  std::vector<ExtComplex> roots{0.0, ExtComplex::infinity()};
  if (b.form) {
    map = b.form->to_map();
    j["coordinates"] = "normal-form";
  } else if (!b.raw) {
    throw Error(ErrorKind::NotApplicable, j["normal_form_error"].get<std::string>());
  } else {
    map = *b.raw;
    j["coordinates"] = "operator";
    roots.clear();
    for (const Complex r : poly_roots(target_derivative(s.d, s.c, 0))) roots.emplace_back(r);
  }
  j["fixed_points"] = fixed_json(fixed_points(map, roots));
  j["critical_points"] = critical_json(critical_points(map));
  if (b.form) {
    j["iota_symmetric"] = check_iota_symmetry(map, 50);
    const OperatorReport rep = classify_operator(*b.form);
    j["report"] = {{"n", rep.n},
                   {"k", rep.k},
                   {"sign", rep.sign},
                   {"raw_n_plus_k", rep.raw_n_plus_k},
                   {"n_plus_k_odd", rep.n_plus_k_odd},
                   {"degenerate", rep.degenerate},
                   {"value_at_1", cjson(rep.value_at_one)},
                   {"value_at_minus_1", cjson(rep.value_at_minus_one)},
                   {"minus_one", rep.minus_one_status},
                   {"parity_consistent", rep.parity_consistent},
                   {"two_cycle_multiplier",
                    rep.two_cycle_multiplier ? cjson(*rep.two_cycle_multiplier) : Json(nullptr)}};
  }
  if (!o.cycle.empty()) {
    std::vector<ExtComplex> cycle;
    for (const Complex z : parse_list(o.cycle, "--cycle")) cycle.emplace_back(z);
    const Complex m = multiplier_of_cycle(map, cycle);
    j["cycle"] = {{"multiplier", cjson(m)}, {"abs_multiplier", std::abs(m)}, {"class", to_string(classify_multiplier(m))}};
  }
  out << j.dump(2) << "\n";
  return Ok;
}

std::string vary_parameter(const Options& o, const Source& s) {
  if (!o.vary.empty()) {
    if (std::find(s.parameters.begin(), s.parameters.end(), o.vary) == s.parameters.end())
      throw UsageError("'" + s.label + "' has no parameter '" + o.vary + "'");
    return o.vary;
  }
  if (s.parameters.size() != 1)
    throw UsageError("'" + s.label + "' has " + std::to_string(s.parameters.size()) +
                     " parameters; choose one with --vary");
  return s.parameters.front();
}

// The family in the entry's own parameter.
FormFamily entry_family(const Source& s, const std::string& name) {
  return [s, name](Complex v) {
    Bindings b = s.bindings;
    b[name] = v;
    return s.normal_form(b);
  };
}

Json region_json(const StabilityRegion& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  if (r.kind == RegionKind::Circle) {
    j["center"] = cjson(r.center);
    j["radius"] = r.radius;
  } else if (r.kind == RegionKind::HalfPlane) {
    j["threshold_re"] = r.center.real();
  }
  if (r.kind != RegionKind::NotApplicable) j["attracting"] = to_string(r.side);
  j["superattracting_parameter"] = r.superattracting_parameter ? cjson(*r.superattracting_parameter) : Json(nullptr);
  return j;
}

// Image of the circle |a - center| = radius under a Mobius-type coordinate change.
Json mapped_circle_json(const std::function<Complex(Complex)>& f, const StabilityRegion& r) {
  Complex p[3];
  for (int i = 0; i < 3; ++i) p[i] = f(r.center + std::polar(r.radius, 2.0 * std::numbers::pi * i / 3.0));
  const Complex u = p[1] - p[0], v = p[2] - p[0];
  const double det = 2.0 * (u.real() * v.imag() - u.imag() * v.real());
  Json j;
  if (!std::isfinite(det) || std::abs(det) <= 1e-12 * (std::norm(u) + std::norm(v))) {
    j["kind"] = "line";
    return j;
  }
  const Complex center = p[0] + Complex(v.imag() * std::norm(u) - u.imag() * std::norm(v),
                                        u.real() * std::norm(v) - v.real() * std::norm(u)) /
                                    det;
  const double radius = std::abs(p[0] - center);
  const Complex inner = f(r.center);
  const bool inside_maps_inside = std::isfinite(std::abs(inner)) && std::abs(inner - center) < radius;
  const bool attracting_inside = (r.side == AttractingSide::Inside) == inside_maps_inside;
  j["kind"] = "circle";
  j["center"] = cjson(center);
  j["radius"] = radius;
  j["attracting"] = attracting_inside ? "inside" : "outside";
  return j;
}

int cmd_stability(const Options& o, std::ostream& out) {
  const Source s = resolve(o);
  const std::string name = vary_parameter(o, s);
  const bool linear_coordinate = s.entry && s.entry->linear;
  const FormFamily family = linear_coordinate ? catalog_family(*s.entry) : entry_family(s, name);
  const LinearCoeffs lc = linearize(family);
  Json j;
  j["method"] = s.label;
  j["parameter"] = name;
  j["coordinate"] = linear_coordinate ? s.entry->linear->name : name;
  j["n"] = lc.n;
  j["k"] = lc.k;
  j["A"] = lc.A;
  j["B"] = lc.B;
  j["aggregates"] = {{"A", lc.agg_A}, {"B", lc.agg_B}, {"A'", lc.agg_Ap}, {"B'", lc.agg_Bp},
                     {"C", lc.agg_C}, {"D", lc.agg_D}, {"C'", lc.agg_Cp}, {"D'", lc.agg_Dp}};
  const StabilityRegion z1 = stability_region_z1(lc);
  j["z=1"] = region_json(z1);
  j["z=-1"] = region_json(stability_region_zm1(lc));
  if (linear_coordinate && z1.kind == RegionKind::Circle) {
    Json m = mapped_circle_json(s.entry->linear->to_entry, z1);
    if (z1.superattracting_parameter) m["superattracting_parameter"] = cjson(s.entry->linear->to_entry(*z1.superattracting_parameter));
    j["z=1 in " + name] = m;
  }
  out << j.dump(2) << "\n";
  return Ok;
}

RenderConfig render_config(const Options& o) {
  RenderConfig cfg;
  double w[4];
  {
    std::stringstream ss(o.window);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= 4) throw UsageError("--window expects xmin,xmax,ymin,ymax");
      char* end = nullptr;
      w[i] = std::strtod(item.c_str(), &end);
      if (end == item.c_str() || *end != '\0') throw UsageError("invalid --window value '" + item + "'");
      ++i;
    }
    if (i != 4) throw UsageError("--window expects xmin,xmax,ymin,ymax");
  }
  cfg.x_min = w[0];
  cfg.x_max = w[1];
  cfg.y_min = w[2];
  cfg.y_max = w[3];
  const auto x = o.res.find('x');
  if (x == std::string::npos) throw UsageError("--res expects WxH");
  try {
    std::size_t used = 0;
    cfg.width = std::stoi(o.res.substr(0, x), &used);
    if (used != x) throw UsageError("--res expects WxH");
    cfg.height = std::stoi(o.res.substr(x + 1), &used);
    if (used != o.res.size() - x - 1) throw UsageError("--res expects WxH");
  } catch (const std::logic_error&) {
    throw UsageError("--res expects WxH");
  }
  cfg.max_iter = o.max_iter;
  try {
    cfg.mode = parse_color_mode(o.mode);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  cfg.threads = o.threads;
  if (cfg.threads <= 0) {
    if (const char* env = std::getenv("NDYN_THREADS")) cfg.threads = std::atoi(env);
  }
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (o.out.empty()) throw UsageError("--out is required");
  return cfg;
}

std::vector<Attractor> attractors(const Options& o) {
  std::vector<Attractor> known;
  for (const auto& a : o.attractors) known.push_back(parse_list(a, "--attractor"));
  return known;
}

std::string attractor_text(const std::vector<Attractor>& known) {
  std::string s;
  for (const auto& a : known) {
    if (!s.empty()) s += ";";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + format_complex(a[i]);
  }
  return s;
}

Json render_summary(const PlaneImage& img, const std::string& out, const std::string& meta) {
  Json j;
  j["image"] = out;
  j["metadata"] = meta;
  j["width"] = img.width;
  j["height"] = img.height;
  Json counts = Json::object();
  for (const auto& [k, v] : img.outcome_counts()) counts[k] = v;
  j["counts"] = counts;
  Json diag = Json::object();
  for (const auto& [k, v] : img.diagnostics) diag[k] = v;
  j["diagnostics"] = diag;
  return j;
}

int cmd_dynplane(const Options& o, std::ostream& out) {
  const Source s = resolve(o);
  const RenderConfig cfg = render_config(o);
  if (s.d != 2 && !s.is_form_entry()) throw UsageError("dynamical planes are drawn in normal form; use --d 2");
  const OperatorForm form = s.normal_form(s.bindings);
  const std::vector<Attractor> known = attractors(o);
  const PlaneImage img = dynamical_plane(form.to_map(), cfg, known);
  write_ppm(img, o.out);
  std::vector<std::pair<std::string, std::string>> extra{{"command", "dynplane"}, {"method", s.label}};
  for (const auto& [k, v] : s.bindings) extra.emplace_back("param." + k, format_complex(v));
  extra.emplace_back("n", std::to_string(form.n));
  extra.emplace_back("k", std::to_string(form.k));
  extra.emplace_back("sign", std::to_string(form.sign));
  for (int i = 0; i < form.k; ++i)
    extra.emplace_back("a" + std::to_string(i + 1), format_complex(form.a[static_cast<std::size_t>(i)]));
  extra.emplace_back("attractors", attractor_text(known));
  const std::string meta = o.out + ".meta";
  write_metadata(img, meta, extra);
  out << render_summary(img, o.out, meta).dump(2) << "\n";
  return Ok;
}

int cmd_paramplane(const Options& o, std::ostream& out) {
  const Source s = resolve(o);
  const RenderConfig cfg = render_config(o);
  const std::string name = vary_parameter(o, s);
  const FormFamily family = entry_family(s, name);
  MapFamily maps;
  std::string path = "general";
  try {
    maps = linear_map_family(linearize(family));
    path = "linear";
  } catch (const Error&) {
    maps = [family](Complex v) { return family(v).to_map(); };
  }
  CriticalSelector sel;
  sel.index = o.selector;
  const std::vector<Attractor> known = attractors(o);
  const PlaneImage img = parameter_plane(maps, sel, cfg, known);
  write_ppm(img, o.out);
  std::vector<std::pair<std::string, std::string>> extra{
      {"command", "paramplane"}, {"method", s.label}, {"parameter", name}, {"family_evaluation", path}};
  for (const auto& [k, v] : s.bindings)
    if (k != name) extra.emplace_back("param." + k, format_complex(v));
  extra.emplace_back("selector", o.selector ? std::to_string(*o.selector) : "default");
  extra.emplace_back("attractors", attractor_text(known));
  const std::string meta = o.out + ".meta";
  write_metadata(img, meta, extra);
  out << render_summary(img, o.out, meta).dump(2) << "\n";
  return Ok;
}

int cmd_verify(std::ostream& out) {
  Json suites = Json::array();
  int passed = 0, failed = 0;
  for (const auto& r : run_all_suites()) {
    suites.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}});
    passed += r.passed;
    failed += r.failed;
  }
  Json j;
  j["suites"] = suites;
  j["passed"] = passed;
  j["failed"] = failed;
  out << j.dump(2) << "\n";
  return failed == 0 ? Ok : VerificationFailed;
}

int cmd_catalog(std::ostream& out) {
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    Json j;
    j["name"] = e.name;
    j["kind"] = e.kind == EntryKind::Scheme ? "scheme" : "normal-form";
    j["parameters"] = bindings_json(e.defaults);
    if (e.expected_nk) {
      j["n"] = e.expected_nk->first;
      j["k"] = e.expected_nk->second;
    } else {
      j["n"] = nullptr;
      j["k"] = nullptr;
    }
    if (e.kind == EntryKind::Scheme) j["lambda_odd_degrees"] = e.lambda_odd_degrees;
    if (e.linear) j["linear_coordinate"] = e.linear->name;
    j["description"] = e.doc;
    list.push_back(j);
  }
  out << list.dump(2) << "\n";
  return Ok;
}

void add_source(CLI::App* sub, Options& o) {
  auto* m = sub->add_option("--method", o.method, "catalog method name");
  auto* f = sub->add_option("--scheme-file", o.scheme_file, "scheme definition file");
  m->excludes(f);
  sub->add_option("--param", o.params, "parameter binding name=value (repeatable)");
  sub->add_option("--d", o.d, "degree of z^d - c")->capture_default_str();
  sub->add_option("--c", o.c, "constant c of z^d - c")->capture_default_str();
}

void add_render(CLI::App* sub, Options& o) {
  sub->add_option("--window", o.window, "xmin,xmax,ymin,ymax")->capture_default_str();
  sub->add_option("--res", o.res, "resolution WxH")->capture_default_str();
  sub->add_option("--out", o.out, "output PPM path")->required();
  sub->add_option("--mode", o.mode, "speed or attractor")->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads (default: NDYN_THREADS or all cores)");
  sub->add_option("--max-iter", o.max_iter, "iteration limit")->capture_default_str();
  sub->add_option("--attractor", o.attractors, "known attracting point or comma-separated cycle (repeatable)");
}

// CLI11 reads "-1,5,-3,3" as a flag; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--window" || args[i] == "--c" || args[i] == "--cycle" ||
                             args[i] == "--attractor" || args[i] == "--param";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamics of Newton-like root-finding operators on z^d - c", "ndyn"};
  app.require_subcommand(1);
  Options o;
  auto* build_cmd = app.add_subcommand("build", "instantiate and conjugate an operator; print its normal form");
  add_source(build_cmd, o);
  auto* analyze_cmd = app.add_subcommand("analyze", "fixed points, critical points and symmetry certificates");
  add_source(analyze_cmd, o);
  analyze_cmd->add_option("--cycle", o.cycle, "comma-separated cycle whose multiplier to report");
  auto* stability_cmd = app.add_subcommand("stability", "stability regions of z = 1 and z = -1");
  add_source(stability_cmd, o);
  stability_cmd->add_option("--vary", o.vary, "parameter of the family");
  auto* dyn_cmd = app.add_subcommand("dynplane", "render a dynamical plane");
  add_source(dyn_cmd, o);
  add_render(dyn_cmd, o);
  auto* param_cmd = app.add_subcommand("paramplane", "render a parameter plane");
  add_source(param_cmd, o);
  add_render(param_cmd, o);
  param_cmd->add_option("--vary", o.vary, "parameter of the family");
  param_cmd->add_option("--selector", o.selector, "index of the free critical pair");
  auto* verify_cmd = app.add_subcommand("verify", "run the identity and property suites");
  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in methods");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (stability_cmd->parsed()) return cmd_stability(o, out);
    if (dyn_cmd->parsed()) return cmd_dynplane(o, out);
    if (param_cmd->parsed()) return cmd_paramplane(o, out);
    if (verify_cmd->parsed()) return cmd_verify(out);
    if (catalog_cmd->parsed()) return cmd_catalog(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::IOError && std::string(e.what()).find("cannot read") != std::string::npos) return Usage;
    return Computation;
  }
  return Usage;
}

}  // namespace ndyn::cli
