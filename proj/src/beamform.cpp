// SPDX-License-Identifier: Apache-2.0

#include "ris/beamform.hpp"

#include <cmath>
#include <numbers>

#include "ris/errors.hpp"

namespace ris {

namespace {

constexpr double pi = std::numbers::pi;

}

PhaseProfile phase_profile(const RisArray& array, const Scene& scene) {
    const auto paths = path_lengths(array, scene);
    PhaseProfile profile;
    profile.psi_rad.reserve(paths.size());
    profile.phasors.reserve(paths.size());
    for (const auto& [r_t, r_r] : paths) {
        // Kept unwrapped; the exponential does not care and intermediate
        // dumps stay reproducible.
        const double psi = 2.0 * pi * array.carrier_frequency() * (r_t + r_r) / speed_of_light;
        profile.psi_rad.push_back(psi);
        profile.phasors.push_back(std::polar(1.0, -psi));
    }
    return profile;
}

RisConfiguration select_passive(const PhaseProfile& profile, const PassiveStateSet& states) {
    if (profile.psi_rad.empty())
        throw invalid_parameter("select_passive: empty phase profile");
    std::vector<ElementState> out;
    out.reserve(profile.psi_rad.size());
    for (const double psi : profile.psi_rad) {
        const std::complex<double> target = std::polar(1.0, psi);
        double best = std::abs(target - std::polar(1.0, states.alphas_deg[0] * pi / 180.0));
        int winner = 0;
        const double d = std::abs(target - std::polar(1.0, states.alphas_deg[1] * pi / 180.0));
        if (d < best) {  // tie keeps the first state
            best = d;
            winner = 1;
        }
        out.push_back(winner == 0 ? ElementState::PassiveA : ElementState::PassiveB);
    }
    return {RisMode::Passive, std::move(out)};
}

RisConfiguration select_active(const PhaseProfile& profile, bool use_circular_mean) {
    if (profile.phasors.empty())
        throw invalid_parameter("select_active: empty phase profile");
    const auto& s = profile.phasors;
    const std::size_t k_count = s.size();

    double rotation_angle;
    if (use_circular_mean) {
        std::complex<double> acc = 0.0;
        for (const auto& v : s)
            acc += v * v / std::abs(v * v);
        rotation_angle = std::arg(acc);
    } else {
        double acc = 0.0;
        for (const auto& v : s)
            acc += std::arg(v * v);
        rotation_angle = acc / static_cast<double>(k_count);
    }
    const std::complex<double> rot = std::polar(1.0, -rotation_angle / 2.0);

    std::vector<std::complex<double>> s_rot(k_count);
    double sum_real = 0.0;
    for (std::size_t k = 0; k < k_count; ++k) {
        s_rot[k] = s[k] * rot;
        sum_real += s_rot[k].real();
    }

    const bool keep_right = sum_real >= static_cast<double>(k_count) / 2.0;
    std::vector<ElementState> out(k_count, ElementState::ActiveOff);
    for (std::size_t k = 0; k < k_count; ++k) {
        const bool on = keep_right ? (s_rot[k].real() >= 0.0) : (s_rot[k].real() < 0.0);
        if (on)
            out[k] = ElementState::ActiveOn;
    }
    return {RisMode::Active, std::move(out)};
}

std::pair<RisConfiguration, double> exhaustive_select(const RisArray& array, const Scene& scene,
                                                      const ReflectionModel& model,
                                                      const LinkBudget& budget, RisMode mode) {
    const std::size_t k_count = array.size();
    if (k_count > 20)
        throw capacity_error("exhaustive_select: limited to K <= 20 elements");

    const ElementState first = mode == RisMode::Passive ? ElementState::PassiveA
                                                        : ElementState::ActiveOn;
    const ElementState second = mode == RisMode::Passive ? ElementState::PassiveB
                                                         : ElementState::ActiveOff;

    // Geometry is configuration-independent; hoist the per-element factors so
    // the 2^K loop is a plain weighted sum.
    const auto paths = path_lengths(array, scene);
    const auto angles = incidence_angles(array, scene);
    std::vector<std::complex<double>> weight(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        const auto [r_t, r_r] = paths[k];
        const double f_c = element_derating(array, angles[k].first, angles[k].second);
        weight[k] = std::sqrt(f_c) / (r_t * r_r) *
                    std::polar(1.0, -2.0 * pi * (r_t + r_r) / array.wavelength());
    }
    const std::complex<double> gamma_first = reflection_coefficient(model, first);
    const std::complex<double> gamma_second = reflection_coefficient(model, second);

    // Enumeration is lexicographic in the state vector (element 1 is the most
    // significant digit, `first` < `second`), so keeping the first strict
    // maximum is the documented tie-break.
    std::uint64_t best_bits = 0;
    double best_metric = -1.0;
    const std::uint64_t total = std::uint64_t{1} << k_count;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::complex<double> sum = 0.0;
        for (std::size_t k = 0; k < k_count; ++k)
            sum += ((bits >> (k_count - 1 - k)) & 1 ? gamma_second : gamma_first) * weight[k];
        const double metric = std::norm(sum);
        if (metric > best_metric) {
            best_metric = metric;
            best_bits = bits;
        }
    }

    std::vector<ElementState> best_states(k_count);
    for (std::size_t k = 0; k < k_count; ++k)
        best_states[k] = (best_bits >> (k_count - 1 - k)) & 1 ? second : first;
    RisConfiguration best(mode, std::move(best_states));
    const double best_power = received_power(array, scene, best, model, budget);
    return {std::move(best), best_power};
}

}  // namespace ris
