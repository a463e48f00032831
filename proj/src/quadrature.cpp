#include "focalfield/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "focalfield/constants.hpp"

namespace focalfield {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gl(int n) {
  // Newton iteration on the Legendre polynomial, exploiting root symmetry.
  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_nodes(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

PanelEstimate gauss_legendre_fixed(const std::function<Complex(double)>& f, double a, double b,
                                   int panels, int nodes_per_panel) {
  const auto& [xn, wn] = gauss_legendre_nodes(nodes_per_panel);
  const double h = (b - a) / panels;
  Complex total{};
  double l1 = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    Complex s{};
    double s1 = 0.0;
    for (int j = 0; j < nodes_per_panel; ++j) {
      Complex v = f(mid + half * xn[j]);
      s += wn[j] * v;
      s1 += wn[j] * std::abs(v);
    }
    total += half * s;
    l1 += half * s1;
  }
  return {total, l1};
}

Complex integrate_radial(const std::function<Complex(double)>& f, double a, double b,
                         const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) throw std::invalid_argument("integrate_radial: requires a < b");

  int panels = std::max(1, (int)std::ceil(spec.oscillation_scale / constants::pi));
  if (panels > spec.max_panels) panels = spec.max_panels;

  Complex before{};
  PanelEstimate prev = gauss_legendre_fixed(f, a, b, panels, spec.nodes_per_panel);
  while (panels <= spec.max_panels / 2) {
    panels *= 2;
    PanelEstimate cur = gauss_legendre_fixed(f, a, b, panels, spec.nodes_per_panel);
    double scale = detail::convergence_scale(cur.value, cur.l1);
    if (std::abs(cur.value - prev.value) <= spec.relative_tolerance * scale) return cur.value;
    before = prev.value;
    prev = cur;
  }
  throw ConvergenceError("integrate_radial: no convergence at max_panels=" +
                             std::to_string(spec.max_panels),
                         prev.value, before);
}

Complex integrate_periodic(const std::function<Complex(double)>& f, int n_nodes,
                           double relative_tolerance, int max_nodes) {
  if (n_nodes < 2) throw std::invalid_argument("integrate_periodic: need at least 2 nodes");
  const double two_pi = 2.0 * constants::pi;

  int n = n_nodes;
  Complex sum{};
  double l1 = 0.0;
  for (int j = 0; j < n; ++j) {
    Complex v = f(two_pi * j / n);
    sum += v;
    l1 += std::abs(v);
  }
  Complex prev = sum * (two_pi / n);

  while (n <= max_nodes / 2) {
    // refine: old nodes are the even nodes of the doubled rule
    Complex odd{};
    for (int j = 0; j < n; ++j) {
      Complex v = f(two_pi * (2 * j + 1) / (2 * n));
      odd += v;
      l1 += std::abs(v);
    }
    sum += odd;
    n *= 2;
    Complex cur = sum * (two_pi / n);
    double scale = detail::convergence_scale(cur, l1 * (two_pi / n));
    if (std::abs(cur - prev) <= relative_tolerance * scale) return cur;
    prev = cur;
  }
  throw ConvergenceError("integrate_periodic: no convergence at max_nodes=" +
                             std::to_string(max_nodes),
                         prev, prev);
}

Complex integrate_2d_polar(const std::function<Complex(double, double)>& f, double a, double b,
                           const QuadratureSpec& spec, int inner_start_nodes) {
  // Inner integral tolerance is tightened so its error stays below the
  // outer convergence test.
  const double inner_tol = 0.1 * spec.relative_tolerance;
  auto outer = [&](double rho) {
    return integrate_periodic([&](double phi) { return f(rho, phi); }, inner_start_nodes,
                              inner_tol);
  };
  return integrate_radial(outer, a, b, spec);
}

}  // namespace focalfield
