#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "focalfield/constants.hpp"

namespace focalfield {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Complex electric field vector at a point, components in V/m.
struct ComplexField3 {
  Complex ex{};
  Complex ey{};
  Complex ez{};

  ComplexField3 operator+(const ComplexField3& o) const { return {ex + o.ex, ey + o.ey, ez + o.ez}; }
  ComplexField3 operator-(const ComplexField3& o) const { return {ex - o.ex, ey - o.ey, ez - o.ez}; }
  ComplexField3 operator*(Complex s) const { return {ex * s, ey * s, ez * s}; }

  double norm_sq() const { return std::norm(ex) + std::norm(ey) + std::norm(ez); }

  bool finite() const {
    auto ok = [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    return ok(ex) && ok(ey) && ok(ez);
  }
};

inline ComplexField3 operator*(Complex s, const ComplexField3& v) { return v * s; }

/// Cylindrical point (rho >= 0, phi in [0, 2pi), z unrestricted).
struct CylPoint {
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;

  /// Normalizes phi into [0, 2pi) and checks rho >= 0.
  static CylPoint make(double rho, double phi, double z) {
    if (!(rho >= 0.0)) throw std::invalid_argument("CylPoint: rho must be >= 0");
    double two_pi = 2.0 * constants::pi;
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    return CylPoint{rho, phi, z};
  }

  double x() const { return rho * std::cos(phi); }
  double y() const { return rho * std::sin(phi); }
};

/// Optics of one focusing arm: wavelength, ideal lens, input Gaussian beam.
///
/// The aperture defaults to 5 beam waists; the Gaussian weight beyond that
/// is below exp(-50) of peak, so a hard cut there does not affect results.
struct OpticalConfig {
  double wavelength = 780e-9;      // m
  double focal_length = 4.5e-3;    // m
  double beam_waist = 1.305e-3;    // m (field 1/e radius of the input beam)
  double aperture_radius = 0.0;    // m; <= 0 selects the 5*beam_waist default
  double input_amplitude = 1.0;    // V/m

  double wavenumber() const { return 2.0 * constants::pi / wavelength; }
  double focusing_u() const { return beam_waist / focal_length; }
  double aperture() const { return aperture_radius > 0.0 ? aperture_radius : 5.0 * beam_waist; }

  void validate() const {
    if (!(wavelength > 0.0)) throw std::invalid_argument("OpticalConfig: wavelength must be > 0");
    if (!(focal_length > 0.0)) throw std::invalid_argument("OpticalConfig: focal_length must be > 0");
    if (!(beam_waist > 0.0)) throw std::invalid_argument("OpticalConfig: beam_waist must be > 0");
    if (!(aperture() > 0.0)) throw std::invalid_argument("OpticalConfig: aperture must be > 0");
    if (!(input_amplitude > 0.0)) throw std::invalid_argument("OpticalConfig: input_amplitude must be > 0");
  }

  /// Config with the waist chosen to give focusing parameter u at this focal length.
  OpticalConfig with_focusing_u(double u) const {
    OpticalConfig c = *this;
    c.beam_waist = u * focal_length;
    c.aperture_radius = 0.0;
    return c;
  }
};

}  // namespace focalfield
