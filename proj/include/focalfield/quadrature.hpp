#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace focalfield {

using Complex = std::complex<double>;

/// Controls for the adaptive integrators.
///
/// oscillation_scale is the caller's estimate of the total phase variation
/// (in radians) of the integrand over the domain, i.e. k*L for a kernel
/// exp(i*k*x) on a length-L interval. It seeds the initial panel count so
/// that no panel spans more than half an oscillation; convergence is then
/// verified by doubling regardless of the seed.
struct QuadratureSpec {
  double relative_tolerance = 1e-8;
  int max_panels = 1 << 16;
  int nodes_per_panel = 32;
  double oscillation_scale = 0.0;

  void validate() const {
    if (!(relative_tolerance > 0.0)) throw std::invalid_argument("QuadratureSpec: relative_tolerance must be > 0");
    if (nodes_per_panel < 2) throw std::invalid_argument("QuadratureSpec: nodes_per_panel must be >= 2");
    if (max_panels < 1) throw std::invalid_argument("QuadratureSpec: max_panels must be >= 1");
  }
};

/// Thrown when doubling reaches the configured limit without the last two
/// estimates agreeing; carries both so callers can judge how bad it is.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Complex last, Complex previous)
      : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}
  Complex last_estimate;
  Complex previous_estimate;
};

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_nodes(int n);

/// Non-adaptive composite Gauss-Legendre rule; also returns the L1 mass
/// sum(|w f|), used as the cancellation-aware convergence scale.
struct PanelEstimate {
  Complex value;
  double l1 = 0.0;
};
PanelEstimate gauss_legendre_fixed(const std::function<Complex(double)>& f, double a, double b,
                                   int panels, int nodes_per_panel);

/// Adaptive panel-doubling Gauss-Legendre on [a, b].
/// Initial panel count is ceil(oscillation_scale / pi) (at least 1); panels
/// are doubled until successive estimates agree to relative_tolerance.
Complex integrate_radial(const std::function<Complex(double)>& f, double a, double b,
                         const QuadratureSpec& spec);

/// Trapezoidal rule over one period [0, 2pi), node count doubled until the
/// estimate is stable. Spectrally accurate for smooth periodic integrands.
Complex integrate_periodic(const std::function<Complex(double)>& f, int n_nodes,
                           double relative_tolerance = 1e-8, int max_nodes = 1 << 21);

/// Nested rule for integral over [a,b] x [0,2pi) of f(rho, phi) drho dphi
/// (no implicit Jacobian): outer adaptive radial, inner adaptive periodic.
Complex integrate_2d_polar(const std::function<Complex(double, double)>& f, double a, double b,
                           const QuadratureSpec& spec, int inner_start_nodes = 64);

namespace detail {
/// Convergence scale guarding against pure cancellation: relative to the
/// result when it dominates, otherwise to a fraction of the integrand mass.
inline double convergence_scale(Complex value, double l1) {
  double v = std::abs(value);
  double floor = 1e-3 * l1;
  return v > floor ? v : floor;
}
}  // namespace detail

}  // namespace focalfield
