// SPDX-License-Identifier: Apache-2.0
//
// Element-wise received-power model for a RIS-reflected link. The core
// quantity is the coherent sum over elements
//
//   P_R = P_T * (G_T G_ELM G_R A_ELM lambda^2 / 64 pi^3)
//         * | sum_k sqrt(F_k) Gamma_k / (r_k_T r_k_R) exp(-j 2pi (r_k_T + r_k_R)/lambda) |^2
//
// with F_k the cos^{2q} element-gain derating per leg and Gamma_k the complex
// reflection coefficient of element k's switch state. synthetic_ctf evaluates
// the same sum per subcarrier frequency for the wideband sounder.

#ifndef RIS_CHANNEL_HPP
#define RIS_CHANNEL_HPP

#include <array>
#include <complex>
#include <vector>

#include "ris/geometry.hpp"

namespace ris {

// Switch state of a single element. Passive states apply one of two phase
// shifts at sub-unity magnitude; active states are amplify-or-mute.
enum class ElementState { PassiveA, PassiveB, ActiveOn, ActiveOff };

enum class RisMode { Passive, Active };

// Per-state complex reflection coefficients. Defaults: passive magnitude
// -1 dB with phases {0, 67} degrees, active ON amplitude 10^(3/20) (3 dB
// re-radiated power gain), active OFF exactly zero.
class ReflectionModel {
public:
    ReflectionModel();  // defaults above
    ReflectionModel(double passive_magnitude, std::array<double, 2> passive_phases_deg,
                    double active_on_gain);

    double passive_magnitude() const { return passive_magnitude_; }
    const std::array<double, 2>& passive_phases_deg() const { return passive_phases_deg_; }
    double active_on_gain() const { return active_on_gain_; }

private:
    double passive_magnitude_;
    std::array<double, 2> passive_phases_deg_;
    double active_on_gain_;
};

// Mode flag plus the per-element switch decisions. Construction rejects
// states that do not belong to the mode.
class RisConfiguration {
public:
    RisConfiguration(RisMode mode, std::vector<ElementState> states);

    static RisConfiguration all_off(std::size_t count);

    RisMode mode() const { return mode_; }
    const std::vector<ElementState>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }

    // One character per element: 'A'/'B' passive, '1'/'0' active ON/OFF.
    std::string compact_string() const;

private:
    RisMode mode_;
    std::vector<ElementState> states_;
};

struct LinkBudget {
    double tx_power_w = 1.0;
    double tx_gain = 1.0;
    double rx_gain = 1.0;
};

// Wideband channel samples: values[i] is the complex gain at frequencies[i].
struct Ctf {
    std::vector<double> frequencies_hz;
    std::vector<std::complex<double>> values;
};

// cos^{2q}(theta_tx) * cos^{2q}(theta_rx); q = 0 gives 1. Angles must be in
// [0, pi/2).
double element_derating(const RisArray& array, double theta_tx_rad, double theta_rx_rad);

std::complex<double> reflection_coefficient(const ReflectionModel& model, ElementState state);

double received_power(const RisArray& array, const Scene& scene, const RisConfiguration& config,
                      const ReflectionModel& model, const LinkBudget& budget);

// Same element sum per frequency; |H(f_c)|^2 equals received_power at the
// carrier.
Ctf synthetic_ctf(const RisArray& array, const Scene& scene, const RisConfiguration& config,
                  const ReflectionModel& model, const LinkBudget& budget,
                  const std::vector<double>& frequencies_hz);

// Adds a configuration-independent chamber ray: constant amplitude `gain`,
// delay set by the path TX -> RIS center -> the point at the scene's RX range
// along specular_direction. Models the static mounting-structure reflection
// that calibration subtracts out.
Ctf add_static_component(const Ctf& ctf, const Scene& scene, const Direction& specular_direction,
                         double gain);

}  // namespace ris

#endif
