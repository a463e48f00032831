#include "focalfield/lens.hpp"

namespace focalfield {

ComplexField3 gaussian_input_field(const CylPoint& p, const OpticalConfig& cfg,
                                   const Vec3& polarization) {
  cfg.validate();
  const double norm_sq = polarization[0] * polarization[0] + polarization[1] * polarization[1] +
                         polarization[2] * polarization[2];
  if (std::abs(norm_sq - 1.0) > 1e-9)
    throw std::invalid_argument("gaussian_input_field: polarization must have unit norm");
  if (std::abs(polarization[2]) > 1e-12)
    throw std::invalid_argument("gaussian_input_field: polarization must be transverse");

  const double amp =
      cfg.input_amplitude * std::exp(-(p.rho * p.rho) / (cfg.beam_waist * cfg.beam_waist));
  return {Complex(polarization[0] * amp, 0.0), Complex(polarization[1] * amp, 0.0), Complex(0.0, 0.0)};
}

Mat3 rotation_matrix_u(double rho, double phi, double focal_length) {
  if (!(rho >= 0.0) || !(focal_length > 0.0))
    throw std::invalid_argument("rotation_matrix_u: need rho >= 0 and f > 0");
  const double c = lens_cos_theta(rho, focal_length);
  const double s = lens_sin_theta(rho, focal_length);
  const double cp = std::cos(phi), sp = std::sin(phi);
  // R_z(phi) * [[c,0,-s],[0,1,0],[s,0,c]] * R_z(-phi), written out
  return Mat3{{{c * cp * cp + sp * sp, (c - 1.0) * sp * cp, -s * cp},
               {(c - 1.0) * sp * cp, c * sp * sp + cp * cp, -s * sp},
               {s * cp, s * sp, c}}};
}

namespace {

ComplexField3 lens_common(const ComplexField3& field_in, const CylPoint& p,
                          const OpticalConfig& cfg, bool collection) {
  cfg.validate();
  if (p.rho > cfg.aperture()) return {};  // hard aperture

  const double f = cfg.focal_length;
  const double c = lens_cos_theta(p.rho, f);
  const double amp = collection ? std::sqrt(c) : 1.0 / std::sqrt(c);
  const double path = std::sqrt(p.rho * p.rho + f * f) - f;
  const Complex phase = std::exp(Complex(0.0, -cfg.wavenumber() * path));
  const Mat3 u = rotation_matrix_u(p.rho, p.phi, f);
  return mat_apply(u, field_in) * (amp * phase);
}

}  // namespace

ComplexField3 apply_lens(const ComplexField3& field_in, const CylPoint& p,
                         const OpticalConfig& cfg) {
  return lens_common(field_in, p, cfg, false);
}

ComplexField3 apply_collection_lens(const ComplexField3& field_in, const CylPoint& p,
                                    const OpticalConfig& cfg) {
  return lens_common(field_in, p, cfg, true);
}

}  // namespace focalfield
