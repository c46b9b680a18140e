#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ndyn/catalog.hpp"
#include "ndyn/planes.hpp"
#include "ndyn/stability.hpp"
#include "ndyn/verify.hpp"

using namespace ndyn;

namespace {

RationalMap square() { return RationalMap::make(Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0}); }

RenderConfig small(int w, int h) {
  RenderConfig cfg;
  cfg.width = w;
  cfg.height = h;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_CASE("iteration stops at the first qualifying check") {
  const auto f = [](Complex z) { return z * z; };
  const RenderConfig cfg = small(1, 1);
  const PixelRecord p = iterate_point(f, 0.5, cfg);
  CHECK(p.outcome == Outcome::Root0);
  CHECK(p.iterations == 4);
  CHECK(iterate_point(f, 3.0, cfg).outcome == Outcome::RootInfinity);
  const PixelRecord circle = iterate_point(f, -1.0, cfg);
  CHECK(circle.outcome == Outcome::None);
  CHECK(circle.iterations == cfg.max_iter);
  const PixelRecord now = iterate_point(f, 0.0, cfg);
  CHECK(now.iterations == 0);
}

TEST_CASE("known attractors are detected") {
  const auto f = [](Complex z) { return -z; };
  const PixelRecord p = iterate_point(f, 1.0 + 1e-6, small(1, 1), {{1.0, -1.0}});
  CHECK(p.outcome == Outcome::StrangeAttractor);
  CHECK(p.attractor == 0);
}

TEST_CASE("pixel centers") {
  RenderConfig cfg = small(4, 2);
  CHECK(cfg.pixel_center(0, 0) == Complex(-1.5, 1.0));
  CHECK(cfg.pixel_center(3, 1) == Complex(1.5, -1.0));
  cfg.width = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("palette endpoints") {
  CHECK(pixel_color({Outcome::Root0, 0, -1}, 100, ColorMode::Speed) == std::array<std::uint8_t, 3>{255, 0, 0});
  CHECK(pixel_color({Outcome::RootInfinity, 100, -1}, 100, ColorMode::Speed) ==
        std::array<std::uint8_t, 3>{128, 128, 128});
  CHECK(pixel_color({Outcome::Root0, 50, -1}, 100, ColorMode::Speed) == std::array<std::uint8_t, 3>{0, 255, 0});
  CHECK(pixel_color({Outcome::None, 100, -1}, 100, ColorMode::Speed) == std::array<std::uint8_t, 3>{0, 0, 0});
  CHECK(pixel_color({Outcome::StrangeAttractor, 0, 0}, 100, ColorMode::Attractor) ==
        std::array<std::uint8_t, 3>{0, 255, 0});
  CHECK(pixel_color({Outcome::StrangeAttractor, 0, 0}, 100, ColorMode::Speed) ==
        std::array<std::uint8_t, 3>{0, 0, 0});
}

TEST_CASE("PPM bytes") {
  PlaneImage img;
  img.width = 2;
  img.height = 1;
  img.config = small(2, 1);
  img.pixels = {{Outcome::Root0, 0, -1}, {Outcome::None, 150, -1}};
  const std::string bytes = ppm_bytes(img);
  CHECK(bytes == std::string("P6\n2 1\n255\n\xff\0\0\0\0\0", 17));
}

TEST_CASE("z^2 plane is symmetric under 1/z and identical across thread counts") {
  RenderConfig cfg = small(64, 64);
  const PlaneImage one = dynamical_plane(square(), cfg);
  cfg.threads = 5;
  const PlaneImage many = dynamical_plane(square(), cfg);
  CHECK(one.rgb == many.rgb);
  for (int row = 0; row < 64; ++row)
    for (int col = 0; col < 64; ++col) {
      const Complex z = cfg.pixel_center(col, row);
      const Outcome o = one.at(col, row).outcome;
      if (std::abs(std::abs(z) - 1.0) < 0.05) continue;
      CHECK(o == (std::abs(z) < 1.0 ? Outcome::Root0 : Outcome::RootInfinity));
    }
}

TEST_CASE("basins of a symmetric operator swap under 1/z") {
  const RationalMap r = catalog_form(catalog("king"), {{"beta", Complex(1.0, 0.5)}}).to_map();
  const auto f = [&r](Complex z) { return r(z); };
  const RenderConfig cfg = small(1, 1);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const Complex z = std::polar(0.2 + 0.1 * i, 0.7 * i);
    const Outcome a = iterate_point(f, z, cfg).outcome;
    const Outcome b = iterate_point(f, 1.0 / z, cfg).outcome;
    if (a == Outcome::Root0) {
      CHECK(b == Outcome::RootInfinity);
      ++checked;
    } else if (a == Outcome::RootInfinity) {
      CHECK(b == Outcome::Root0);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("real coefficients give a plane symmetric about the real axis") {
  const RationalMap r = catalog_form(catalog("king"), {{"beta", 1.0}}).to_map();
  const PlaneImage img = dynamical_plane(r, small(40, 40));
  int mismatches = 0;
  for (int row = 0; row < 40; ++row)
    for (int col = 0; col < 40; ++col)
      if (img.at(col, row).outcome != img.at(col, 39 - row).outcome) ++mismatches;
  CHECK(mismatches <= 4);
}

TEST_CASE("critical selection") {
  const RationalMap ch = catalog_form(catalog("chebyshev-halley"), {{"alpha", 0.3}}).to_map();
  CHECK(free_critical_representatives(ch).size() == 1);
  const Complex kappa = select_critical(ch, {});
  CHECK(std::abs(kappa) <= 1.0 + 1e-9);
  CHECK_THROWS_AS(select_critical(square(), {}), Error);
}

TEST_CASE("Chebyshev-Halley parameter plane near alpha = 1/2") {
  const MapFamily family = linear_map_family(linearize(catalog_family(catalog("chebyshev-halley"))));
  RenderConfig cfg = small(4, 4);
  cfg.x_min = 0.4;
  cfg.x_max = 0.6;
  cfg.y_min = -0.1;
  cfg.y_max = 0.1;
  const PlaneImage img = parameter_plane(family, {}, cfg);
  for (const auto& p : img.pixels) CHECK(p.outcome == Outcome::Root0);
}

TEST_CASE("files are written") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "ndyn_unit_plane.ppm").string();
  const PlaneImage img = dynamical_plane(square(), small(8, 8));
  write_ppm(img, path);
  write_metadata(img, path + ".meta", {{"source", "z^2"}});
  CHECK(std::filesystem::file_size(path) == ppm_bytes(img).size());
  std::ifstream meta(path + ".meta");
  const std::string text((std::istreambuf_iterator<char>(meta)), std::istreambuf_iterator<char>());
  CHECK(text.find("source=z^2") != std::string::npos);
  CHECK(text.find("count.root-0=") != std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".meta");
  CHECK_THROWS_AS(write_ppm(img, "/nonexistent-dir/x.ppm"), Error);
}
