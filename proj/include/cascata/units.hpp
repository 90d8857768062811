#pragma once

#include <cmath>
#include <stdexcept>

namespace cascata {

/// Physical constants in eV-based units.
namespace constants {
inline constexpr double planck_h_evs = 4.135667696e-15; ///< Planck constant, eV s
inline constexpr double hbar_evs = 6.582119569e-16;     ///< Reduced Planck constant, eV s

/// hbar expressed in ueV ps, handy for phase integrals over picosecond times.
inline constexpr double hbar_uev_ps = hbar_evs * 1e6 * 1e12;

/// Phase in rad accumulated per (ueV * ps) of splitting-time product.
inline constexpr double phase_per_uev_ps = 1.0 / hbar_uev_ps;
} // namespace constants

/// A time interval in picoseconds. Finite and non-negative by construction.
class Duration {
public:
  explicit Duration(double ps) : ps_(ps) {
    if (!std::isfinite(ps) || ps < 0.0)
      throw std::domain_error("Duration must be finite and non-negative");
  }
  double ps() const { return ps_; }
  double seconds() const { return ps_ * 1e-12; }

private:
  double ps_;
};

/// An energy splitting in ueV. Non-negative by construction.
class EnergySplitting {
public:
  explicit EnergySplitting(double uev) : uev_(uev) {
    if (!std::isfinite(uev) || uev < 0.0)
      throw std::domain_error("EnergySplitting must be finite and non-negative");
  }
  double uev() const { return uev_; }
  double ev() const { return uev_ * 1e-6; }

private:
  double uev_;
};

/// FWHM pulse duration from FWHM spectral bandwidth at a given
/// time-bandwidth product: tau = tbp * h / delta_e.
Duration bandwidth_to_duration(double delta_e_uev, double tbp);

/// Period of the phase factor exp(i S t / hbar): T = h / S.
Duration splitting_to_precession_period(double splitting_uev);

/// Natural linewidth Gamma = hbar / tau of an exponential decay.
EnergySplitting lifetime_to_linewidth(double tau_ps);

} // namespace cascata
