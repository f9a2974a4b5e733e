// SPDX-License-Identifier: Apache-2.0
//
// Element state selection. The cumulative phase of element k is
//
//   Psi_k = 2 pi f (r_k_T + r_k_R) / c0,     S_k = exp(-j Psi_k).
//
// select_passive picks, per element, the admissible phase state closest to
// exp(j Psi_k) on the unit circle. select_active rotates the phasor set by
// exp(-j mean(angle(S^2))/2) and switches ON one real half-plane, choosing
// the half-plane by comparing sum(real(S')) against K/2.

#ifndef RIS_BEAMFORM_HPP
#define RIS_BEAMFORM_HPP

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "ris/channel.hpp"
#include "ris/geometry.hpp"

namespace ris {

// Unwrapped cumulative phases (>= 0) and the matching unit phasors.
struct PhaseProfile {
    std::vector<double> psi_rad;
    std::vector<std::complex<double>> phasors;  // exp(-j psi)
};

struct PassiveStateSet {
    std::array<double, 2> alphas_deg{0.0, 67.0};
};

PhaseProfile phase_profile(const RisArray& array, const Scene& scene);

// Per-element nearest-state quantization; distance ties go to the first
// state.
RisConfiguration select_passive(const PhaseProfile& profile, const PassiveStateSet& states);

// ON/OFF selection per the half-plane rule above. With use_circular_mean the
// rotation uses the circular mean of angle(S^2) instead of the arithmetic
// mean (non-default variant; the arithmetic mean is wrap-sensitive).
RisConfiguration select_active(const PhaseProfile& profile, bool use_circular_mean = false);

// Brute-force maximizer of received_power over all 2^K state vectors of the
// given mode. Guarded to K <= 20. Ties resolve to the lexicographically
// smallest state vector (PassiveA < PassiveB, ActiveOn < ActiveOff).
std::pair<RisConfiguration, double> exhaustive_select(const RisArray& array, const Scene& scene,
                                                      const ReflectionModel& model,
                                                      const LinkBudget& budget, RisMode mode);

}  // namespace ris

#endif
