#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndyn/analysis.hpp"
#include "ndyn/stability.hpp"

namespace ndyn {

enum class Outcome : std::uint8_t { Root0, RootInfinity, StrangeAttractor, None };
enum class ColorMode { Speed, Attractor };

const char* to_string(Outcome o);
const char* to_string(ColorMode m);
/// Throws InvalidArgument.
ColorMode parse_color_mode(const std::string& s);

struct RenderConfig {
  double x_min = -2.0, x_max = 2.0, y_min = -2.0, y_max = 2.0;
  int width = 400, height = 400;
  int max_iter = 150;
  double conv_radius = 1e-4;
  double infinity_radius = 1e8;
  ColorMode mode = ColorMode::Speed;
  int threads = 0;  // 0: hardware concurrency

  /// Throws InvalidArgument.
  void validate() const;
  /// Center of cell (col, row); row 0 is the top (largest imaginary part).
  Complex pixel_center(int col, int row) const;
};

struct PixelRecord {
  Outcome outcome = Outcome::None;
  int iterations = 0;
  int attractor = -1;  // index into the known attractors for StrangeAttractor
};

/// A fixed point (one element) or a cycle of finite points.
using Attractor = std::vector<Complex>;

struct PlaneImage {
  int width = 0;
  int height = 0;
  RenderConfig config;
  std::vector<PixelRecord> pixels;  // row-major, top row first
  std::vector<std::uint8_t> rgb;
  /// Per-pixel failures of parameter planes, keyed by error kind.
  std::map<std::string, int> diagnostics;

  const PixelRecord& at(int col, int row) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
  std::map<std::string, int> outcome_counts() const;
};

/// Orbit of z0: stops within conv_radius of 0 or of a known attractor point,
/// at |z| >= infinity_radius or a pole, else after max_iter steps.
PixelRecord iterate_point(const std::function<Complex(Complex)>& f, Complex z0, const RenderConfig& cfg,
                          const std::vector<Attractor>& known = {});

PlaneImage dynamical_plane(const RationalMap& r, const RenderConfig& cfg, const std::vector<Attractor>& known = {});

/// Chooses a free critical point of each operator in a family.
struct CriticalSelector {
  /// Index among the representatives sorted by argument; required when more
  /// than one free pair exists.
  std::optional<int> index;
};

/// Free critical representatives with |kappa| <= 1, one per pair, sorted by
/// argument. Critical points at +-1 are excluded.
std::vector<Complex> free_critical_representatives(const RationalMap& r);

/// Throws NoFreeCritical or MultipleFreePairs.
Complex select_critical(const RationalMap& r, const CriticalSelector& sel);

using MapFamily = std::function<RationalMap(Complex)>;

/// alpha -> z^n P/P^ with a_j = A_j + B_j alpha.
MapFamily linear_map_family(const LinearCoeffs& lc);

PlaneImage parameter_plane(const MapFamily& family, const CriticalSelector& sel, const RenderConfig& cfg,
                           const std::vector<Attractor>& known = {});

/// RGB triples for the records under a color mode.
std::vector<std::uint8_t> colorize(const PlaneImage& img, ColorMode mode);
std::array<std::uint8_t, 3> pixel_color(const PixelRecord& p, int max_iter, ColorMode mode);

/// Binary P6. Throws IOError.
void write_ppm(const PlaneImage& img, const std::string& path);
std::string ppm_bytes(const PlaneImage& img);
/// key=value lines: config, the given extra entries, outcome counts, diagnostics.
void write_metadata(const PlaneImage& img, const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& extra);

}  // namespace ndyn
