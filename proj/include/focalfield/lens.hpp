#pragma once

#include "focalfield/types.hpp"

namespace focalfield {

/// cos(theta_rho) of the ray through radius rho bent to the focal point:
/// f / sqrt(f^2 + rho^2). The lens plane itself is z = 0, so the angle is
/// defined by the focusing geometry, not by the (degenerate) field point.
inline double lens_cos_theta(double rho, double focal_length) {
  return focal_length / std::sqrt(focal_length * focal_length + rho * rho);
}

inline double lens_sin_theta(double rho, double focal_length) {
  return rho / std::sqrt(focal_length * focal_length + rho * rho);
}

/// Input Gaussian beam on the z = 0^- plane: pol * E_L * exp(-rho^2/w_L^2).
/// polarization must be a transverse unit vector.
ComplexField3 gaussian_input_field(const CylPoint& p, const OpticalConfig& cfg,
                                   const Vec3& polarization = {1.0, 0.0, 0.0});

/// Polarization-bending rotation of the ideal lens at (rho, phi):
/// R_z(phi) * R_tilt(theta_rho) * R_z(-phi); proper rotation for all inputs.
Mat3 rotation_matrix_u(double rho, double phi, double focal_length);

/// Ideal-lens transformation at a lens-plane point:
/// (1/sqrt(cos theta)) * U(rho,phi) * exp(-i k (sqrt(rho^2+f^2) - f)) * E.
/// Beyond the aperture the transmitted field is zero (hard aperture).
ComplexField3 apply_lens(const ComplexField3& field_in, const CylPoint& p,
                         const OpticalConfig& cfg);

/// Recollimation transform of the matched collection lens (confocal twin):
/// sqrt(cos theta) * U(rho,phi) * exp(-i k (sqrt(rho^2+f^2) - f)) * E.
/// Undoes the focusing arm: cancels the diverging spherical phase, unbends
/// the polarization of the diverging ray arriving at (rho, phi), and carries
/// the flux-conserving amplitude for the recollimating direction.
ComplexField3 apply_collection_lens(const ComplexField3& field_in, const CylPoint& p,
                                    const OpticalConfig& cfg);

inline ComplexField3 mat_apply(const Mat3& m, const ComplexField3& v) {
  return {m[0][0] * v.ex + m[0][1] * v.ey + m[0][2] * v.ez,
          m[1][0] * v.ex + m[1][1] * v.ey + m[1][2] * v.ez,
          m[2][0] * v.ex + m[2][1] * v.ey + m[2][2] * v.ez};
}

}  // namespace focalfield
