#include "cascata/units.hpp"

namespace cascata {

Duration bandwidth_to_duration(double delta_e_uev, double tbp) {
  if (!(delta_e_uev > 0.0))
    throw std::domain_error("bandwidth_to_duration: bandwidth must be > 0");
  if (!(tbp > 0.0))
    throw std::domain_error("bandwidth_to_duration: time-bandwidth product must be > 0");
  const double tau_s = tbp * constants::planck_h_evs / (delta_e_uev * 1e-6);
  return Duration(tau_s * 1e12);
}

Duration splitting_to_precession_period(double splitting_uev) {
  if (!(splitting_uev > 0.0))
    throw std::domain_error("splitting_to_precession_period: splitting must be > 0");
  const double t_s = constants::planck_h_evs / (splitting_uev * 1e-6);
  return Duration(t_s * 1e12);
}

EnergySplitting lifetime_to_linewidth(double tau_ps) {
  if (!(tau_ps > 0.0))
    throw std::domain_error("lifetime_to_linewidth: lifetime must be > 0");
  const double gamma_ev = constants::hbar_evs / (tau_ps * 1e-12);
  return EnergySplitting(gamma_ev * 1e6);
}

} // namespace cascata
