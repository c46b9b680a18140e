#include "ndyn/planes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace ndyn {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Root0: return "root-0";
    case Outcome::RootInfinity: return "root-inf";
    case Outcome::StrangeAttractor: return "strange-attractor";
    case Outcome::None: return "none";
  }
  return "unknown";
}

const char* to_string(ColorMode m) { return m == ColorMode::Speed ? "speed" : "attractor"; }

ColorMode parse_color_mode(const std::string& s) {
  if (s == "speed") return ColorMode::Speed;
  if (s == "attractor") return ColorMode::Attractor;
  throw Error(ErrorKind::InvalidArgument, "unknown color mode '" + s + "'");
}

void RenderConfig::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) throw Error(ErrorKind::InvalidArgument, "empty window");
  if (width < 1 || height < 1) throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
  if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");
  if (!(conv_radius > 0)) throw Error(ErrorKind::InvalidArgument, "conv_radius must be positive");
  if (!(infinity_radius > 0)) throw Error(ErrorKind::InvalidArgument, "infinity_radius must be positive");
}

Complex RenderConfig::pixel_center(int col, int row) const {
  const double x = x_min + (col + 0.5) * (x_max - x_min) / width;
  const double y = y_max - (row + 0.5) * (y_max - y_min) / height;
  return {x, y};
}

std::map<std::string, int> PlaneImage::outcome_counts() const {
  std::map<std::string, int> out;
  for (const Outcome o : {Outcome::Root0, Outcome::RootInfinity, Outcome::StrangeAttractor, Outcome::None})
    out[to_string(o)] = 0;
  for (const auto& p : pixels) ++out[to_string(p.outcome)];
  return out;
}

PixelRecord iterate_point(const std::function<Complex(Complex)>& f, Complex z, const RenderConfig& cfg,
                          const std::vector<Attractor>& known) {
  for (int it = 0; it < cfg.max_iter; ++it) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) >= cfg.infinity_radius)
      return {Outcome::RootInfinity, it, -1};
    if (std::abs(z) < cfg.conv_radius) return {Outcome::Root0, it, -1};
    for (std::size_t a = 0; a < known.size(); ++a)
      for (const Complex p : known[a])
        if (std::abs(z - p) < cfg.conv_radius) return {Outcome::StrangeAttractor, it, static_cast<int>(a)};
    z = f(z);
  }
  return {Outcome::None, cfg.max_iter, -1};
}

namespace {

// Fills every pixel with `task(col, row)` using contiguous row bands.
template <class Task>
void render_rows(PlaneImage& img, const RenderConfig& cfg, Task task) {
  int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, cfg.height);
  auto band = [&](int w) {
    const int lo = static_cast<int>(static_cast<long long>(cfg.height) * w / workers);
    const int hi = static_cast<int>(static_cast<long long>(cfg.height) * (w + 1) / workers);
    for (int row = lo; row < hi; ++row)
      for (int col = 0; col < cfg.width; ++col)
        img.pixels[static_cast<std::size_t>(row) * cfg.width + col] = task(col, row, w);
  };
  if (workers == 1) {
    band(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(band, w);
  for (auto& t : pool) t.join();
}

PlaneImage blank(const RenderConfig& cfg) {
  cfg.validate();
  PlaneImage img;
  img.width = cfg.width;
  img.height = cfg.height;
  img.config = cfg;
  img.pixels.resize(static_cast<std::size_t>(cfg.width) * cfg.height);
  return img;
}

}  // namespace

PlaneImage dynamical_plane(const RationalMap& r, const RenderConfig& cfg, const std::vector<Attractor>& known) {
  PlaneImage img = blank(cfg);
  const auto f = [&r](Complex z) { return r(z); };
  render_rows(img, cfg, [&](int col, int row, int) { return iterate_point(f, cfg.pixel_center(col, row), cfg, known); });
  img.rgb = colorize(img, cfg.mode);
  return img;
}

std::vector<Complex> free_critical_representatives(const RationalMap& r) {
  std::vector<Complex> reps;
  for (const auto& c : critical_points(r)) {
    if (!c.free) continue;
    const Complex k = c.point.value();
    if (std::abs(k - 1.0) <= 1e-9 || std::abs(k + 1.0) <= 1e-9) continue;
    const double m = std::abs(k);
    if (m > 1.0 + 1e-9) continue;
    // On the unit circle the partner 1/k is the conjugate; keep the upper one.
    if (std::abs(m - 1.0) <= 1e-9 && k.imag() < 0) continue;
    reps.push_back(k);
  }
  std::sort(reps.begin(), reps.end(), [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  return reps;
}

Complex select_critical(const RationalMap& r, const CriticalSelector& sel) {
  const std::vector<Complex> reps = free_critical_representatives(r);
  if (reps.empty()) throw Error(ErrorKind::NoFreeCritical, "no free critical point");
  if (sel.index) {
    if (*sel.index < 0 || *sel.index >= static_cast<int>(reps.size()))
      throw Error(ErrorKind::NoFreeCritical, "critical index " + std::to_string(*sel.index) + " out of range");
    return reps[static_cast<std::size_t>(*sel.index)];
  }
  if (reps.size() > 1)
    throw Error(ErrorKind::MultipleFreePairs, std::to_string(reps.size()) + " free critical pairs; pass an index");
  return reps.front();
}

MapFamily linear_map_family(const LinearCoeffs& lc) {
  return [lc](Complex alpha) {
    std::vector<Complex> a;
    for (int j = 0; j < lc.k; ++j) a.push_back(lc.A[static_cast<std::size_t>(j)] + lc.B[static_cast<std::size_t>(j)] * alpha);
    return OperatorForm::from_coefficients(lc.n, std::move(a)).to_map();
  };
}

PlaneImage parameter_plane(const MapFamily& family, const CriticalSelector& sel, const RenderConfig& cfg,
                           const std::vector<Attractor>& known) {
  PlaneImage img = blank(cfg);
  int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, cfg.height);
  std::vector<std::map<std::string, int>> diag(static_cast<std::size_t>(workers));
  render_rows(img, cfg, [&](int col, int row, int w) {
    try {
      const RationalMap r = family(cfg.pixel_center(col, row));
      const Complex kappa = select_critical(r, sel);
      return iterate_point([&r](Complex z) { return r(z); }, kappa, cfg, known);
    } catch (const Error& e) {
      ++diag[static_cast<std::size_t>(w)][to_string(e.kind())];
      return PixelRecord{Outcome::None, cfg.max_iter, -1};
    }
  });
  for (const auto& d : diag)
    for (const auto& [k, v] : d) img.diagnostics[k] += v;
  img.rgb = colorize(img, cfg.mode);
  return img;
}

namespace {

struct Key {
  double t;
  double rgb[3];
};

constexpr Key kSpeed[] = {
    {0.0, {255, 0, 0}}, {0.25, {255, 255, 0}}, {0.5, {0, 255, 0}}, {0.75, {0, 0, 255}}, {1.0, {128, 128, 128}},
};

std::uint8_t channel(double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)); }

std::array<std::uint8_t, 3> speed_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  for (std::size_t i = 1; i < std::size(kSpeed); ++i) {
    if (t <= kSpeed[i].t) {
      const Key& a = kSpeed[i - 1];
      const Key& b = kSpeed[i];
      const double u = (t - a.t) / (b.t - a.t);
      return {channel(a.rgb[0] + u * (b.rgb[0] - a.rgb[0])), channel(a.rgb[1] + u * (b.rgb[1] - a.rgb[1])),
              channel(a.rgb[2] + u * (b.rgb[2] - a.rgb[2]))};
    }
  }
  return {128, 128, 128};
}

}  // namespace

std::array<std::uint8_t, 3> pixel_color(const PixelRecord& p, int max_iter, ColorMode mode) {
  const double t = static_cast<double>(p.iterations) / max_iter;
  switch (p.outcome) {
    case Outcome::None:
      return {0, 0, 0};
    case Outcome::StrangeAttractor:
      if (mode == ColorMode::Speed) return {0, 0, 0};
      return {0, channel(255.0 - 159.0 * std::clamp(t, 0.0, 1.0)), 0};
    default:
      return speed_color(t);
  }
}

std::vector<std::uint8_t> colorize(const PlaneImage& img, ColorMode mode) {
  std::vector<std::uint8_t> rgb;
  rgb.reserve(img.pixels.size() * 3);
  for (const auto& p : img.pixels) {
    const auto c = pixel_color(p, img.config.max_iter, mode);
    rgb.insert(rgb.end(), c.begin(), c.end());
  }
  return rgb;
}

std::string ppm_bytes(const PlaneImage& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  const std::vector<std::uint8_t> rgb = img.rgb.size() == img.pixels.size() * 3 ? img.rgb : colorize(img, img.config.mode);
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

void write_ppm(const PlaneImage& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IOError, "cannot open '" + path + "' for writing");
  const std::string bytes = ppm_bytes(img);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error(ErrorKind::IOError, "write to '" + path + "' failed");
}

void write_metadata(const PlaneImage& img, const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& extra) {
  std::ostringstream s;
  s.precision(17);
  const RenderConfig& c = img.config;
  s << "width=" << c.width << "\nheight=" << c.height << "\nx_min=" << c.x_min << "\nx_max=" << c.x_max
    << "\ny_min=" << c.y_min << "\ny_max=" << c.y_max << "\nmax_iter=" << c.max_iter << "\nconv_radius=" << c.conv_radius
    << "\ninfinity_radius=" << c.infinity_radius << "\nmode=" << to_string(c.mode) << "\n";
  for (const auto& [k, v] : extra) s << k << "=" << v << "\n";
  for (const auto& [k, v] : img.outcome_counts()) s << "count." << k << "=" << v << "\n";
  for (const auto& [k, v] : img.diagnostics) s << "diagnostic." << k << "=" << v << "\n";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IOError, "cannot open '" + path + "' for writing");
  f << s.str();
  if (!f) throw Error(ErrorKind::IOError, "write to '" + path + "' failed");
}

}  // namespace ndyn
