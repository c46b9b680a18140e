#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ndyn/polynomial.hpp"

namespace ndyn {

namespace {

// Aberth-Ehrlich simultaneous iteration on a polynomial with nonzero constant
// term. Initial guesses lie on a randomly perturbed circle around the root
// centroid; the generator is seeded so results are reproducible.
std::vector<Complex> aberth(const Polynomial& p) {
  const int n = p.degree();
  const Polynomial q = p.scaled(1.0 / p.leading());
  if (n == 1) return {-q[0]};

  const Complex center = -q[n - 1] / static_cast<double>(n);
  double radius = std::pow(std::abs(q(center)), 1.0 / n);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1e-2 * (1.0 + std::abs(center));

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> jitter(0.9, 1.1);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = center + std::polar(radius * jitter(rng), theta);
  }

  std::vector<bool> done(z.size(), false);
  for (int sweep = 0; sweep < tol::root_max_sweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      Complex v, dv;
      q.eval_with_derivative(z[i], v, dv);
      if (std::abs(v) <= tol::root_residual * q.abs_scale(z[i])) {
        done[i] = true;
        continue;
      }
      all_done = false;
      if (dv == Complex(0.0)) {
        z[i] += std::polar(1e-8 * (1.0 + std::abs(z[i])), 0.3 + sweep);
        continue;
      }
      const Complex ratio = v / dv;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const Complex diff = z[i] - z[j];
        if (diff != Complex(0.0)) repulsion += 1.0 / diff;
      }
      const Complex denom = 1.0 - ratio * repulsion;
      const Complex step = denom == Complex(0.0) ? ratio : ratio / denom;
      z[i] -= step;
    }
    if (all_done) return z;
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (q.relative_residual(z[i]) > tol::root_residual)
      throw Error(ErrorKind::NoConvergence,
                  "Aberth iteration did not converge in " + std::to_string(tol::root_max_sweeps) + " sweeps");
  }
  return z;
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Complex> roots;
  // Exact zero roots.
  int zeros = 0;
  while (zeros < p.degree() && p[zeros] == Complex(0.0)) ++zeros;
  roots.assign(static_cast<std::size_t>(zeros), Complex(0.0));
  const Polynomial rest = p.shift_down(zeros);
  if (rest.degree() >= 1) {
    auto r = aberth(rest);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  return roots;
}

std::vector<RootCluster> distinct_roots(const Polynomial& p) {
  const std::vector<Complex> roots = poly_roots(p);
  std::vector<bool> used(roots.size(), false);
  std::vector<RootCluster> out;

  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const double radius = 1e-3 * (1.0 + std::abs(roots[i]));
    std::vector<std::size_t> near{i};
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i && !used[j] && std::abs(roots[j] - roots[i]) <= radius) near.push_back(j);
    std::sort(near.begin() + 1, near.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(roots[a] - roots[i]) < std::abs(roots[b] - roots[i]);
    });

    RootCluster cluster{roots[i], 1};
    std::size_t taken = 1;
    for (std::size_t m = near.size(); m >= 2; --m) {
      Complex x = 0.0;
      for (std::size_t t = 0; t < m; ++t) x += roots[near[t]];
      x /= static_cast<double>(m);
      // An m-fold root is a simple root of the (m-1)-th derivative.
      const Polynomial dm = p.derivative(static_cast<int>(m) - 1);
      const Polynomial dm1 = dm.derivative();
      for (int it = 0; it < 12; ++it) {
        const Complex d = dm1(x);
        if (d == Complex(0.0)) break;
        const Complex step = dm(x) / d;
        x -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
      }
      bool ok = true;
      for (int j = 0; j < static_cast<int>(m) && ok; ++j)
        ok = p.derivative(j).relative_residual(x) <= 1e-8;
      if (ok) {
        cluster = {x, static_cast<int>(m)};
        taken = m;
        break;
      }
    }
    for (std::size_t t = 0; t < taken; ++t) used[near[t]] = true;
    out.push_back(cluster);
  }
  return out;
}

}  // namespace ndyn
