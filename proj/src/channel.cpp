// SPDX-License-Identifier: Apache-2.0

#include "ris/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ris/errors.hpp"

namespace ris {

namespace {

constexpr double pi = std::numbers::pi;

bool state_in_mode(ElementState s, RisMode m) {
    if (m == RisMode::Passive)
        return s == ElementState::PassiveA || s == ElementState::PassiveB;
    return s == ElementState::ActiveOn || s == ElementState::ActiveOff;
}

}  // namespace

ReflectionModel::ReflectionModel()
    : ReflectionModel(std::pow(10.0, -1.0 / 20.0), {0.0, 67.0}, std::pow(10.0, 3.0 / 20.0)) {}

ReflectionModel::ReflectionModel(double passive_magnitude,
                                 std::array<double, 2> passive_phases_deg, double active_on_gain)
    : passive_magnitude_(passive_magnitude),
      passive_phases_deg_(passive_phases_deg),
      active_on_gain_(active_on_gain) {
    if (passive_magnitude_ <= 0.0 || passive_magnitude_ > 1.0)
        throw invalid_parameter("ReflectionModel: passive magnitude must be in (0, 1]");
    if (active_on_gain_ < 1.0)
        throw invalid_parameter("ReflectionModel: active ON gain must be >= 1");
    const double d = std::remainder(passive_phases_deg_[0] - passive_phases_deg_[1], 360.0);
    if (d == 0.0)
        throw invalid_parameter("ReflectionModel: passive phases must be distinct modulo 360");
}

RisConfiguration::RisConfiguration(RisMode mode, std::vector<ElementState> states)
    : mode_(mode), states_(std::move(states)) {
    if (states_.empty())
        throw invalid_parameter("RisConfiguration: state vector is empty");
    for (const auto s : states_)
        if (!state_in_mode(s, mode_))
            throw invalid_parameter("RisConfiguration: state does not belong to the mode");
}

RisConfiguration RisConfiguration::all_off(std::size_t count) {
    return {RisMode::Active, std::vector<ElementState>(count, ElementState::ActiveOff)};
}

std::string RisConfiguration::compact_string() const {
    std::string s;
    s.reserve(states_.size());
    for (const auto st : states_) {
        switch (st) {
        case ElementState::PassiveA: s += 'A'; break;
        case ElementState::PassiveB: s += 'B'; break;
        case ElementState::ActiveOn: s += '1'; break;
        case ElementState::ActiveOff: s += '0'; break;
        }
    }
    return s;
}

double element_derating(const RisArray& array, double theta_tx_rad, double theta_rx_rad) {
    if (theta_tx_rad < 0.0 || theta_tx_rad >= pi / 2.0 || theta_rx_rad < 0.0 ||
        theta_rx_rad >= pi / 2.0)
        throw std::domain_error("element_derating: angles must be in [0, pi/2)");
    const double q = array.pattern_exponent();
    if (q == 0.0)
        return 1.0;
    return std::pow(std::cos(theta_tx_rad), 2.0 * q) * std::pow(std::cos(theta_rx_rad), 2.0 * q);
}

std::complex<double> reflection_coefficient(const ReflectionModel& model, ElementState state) {
    switch (state) {
    case ElementState::PassiveA:
        return std::polar(model.passive_magnitude(), model.passive_phases_deg()[0] * pi / 180.0);
    case ElementState::PassiveB:
        return std::polar(model.passive_magnitude(), model.passive_phases_deg()[1] * pi / 180.0);
    case ElementState::ActiveOn:
        return {model.active_on_gain(), 0.0};
    case ElementState::ActiveOff:
    default:
        return {0.0, 0.0};
    }
}

namespace {

// Shared by received_power and synthetic_ctf: per-element complex weight
// sqrt(F_k) Gamma_k / (r_k_T r_k_R) and the total path r_k_T + r_k_R.
struct ElementTerm {
    std::complex<double> weight;
    double total_path;
};

std::vector<ElementTerm> element_terms(const RisArray& array, const Scene& scene,
                                       const RisConfiguration& config,
                                       const ReflectionModel& model) {
    if (config.size() != array.size())
        throw invalid_parameter("configuration has " + std::to_string(config.size()) +
                                " states for " + std::to_string(array.size()) + " elements");
    const auto paths = path_lengths(array, scene);
    const auto angles = incidence_angles(array, scene);
    std::vector<ElementTerm> terms;
    terms.reserve(array.size());
    for (std::size_t k = 0; k < array.size(); ++k) {
        const auto gamma = reflection_coefficient(model, config.states()[k]);
        const double f_c = element_derating(array, angles[k].first, angles[k].second);
        const auto [r_t, r_r] = paths[k];
        terms.push_back({std::sqrt(f_c) * gamma / (r_t * r_r), r_t + r_r});
    }
    return terms;
}

}  // namespace

double received_power(const RisArray& array, const Scene& scene, const RisConfiguration& config,
                      const ReflectionModel& model, const LinkBudget& budget) {
    const double lambda = array.wavelength();
    std::complex<double> sum = 0.0;
    for (const auto& t : element_terms(array, scene, config, model))
        sum += t.weight * std::polar(1.0, -2.0 * pi * t.total_path / lambda);
    const double factor = budget.tx_gain * array.element_gain() * budget.rx_gain *
                          array.element_area() * lambda * lambda / (64.0 * pi * pi * pi);
    return budget.tx_power_w * factor * std::norm(sum);
}

Ctf synthetic_ctf(const RisArray& array, const Scene& scene, const RisConfiguration& config,
                  const ReflectionModel& model, const LinkBudget& budget,
                  const std::vector<double>& frequencies_hz) {
    if (frequencies_hz.empty())
        throw invalid_parameter("synthetic_ctf: frequency list is empty");
    for (const double f : frequencies_hz)
        if (f <= 0.0)
            throw invalid_parameter("synthetic_ctf: frequencies must be positive");

    const auto terms = element_terms(array, scene, config, model);
    const double amp = std::sqrt(budget.tx_power_w * budget.tx_gain * array.element_gain() *
                                 budget.rx_gain * array.element_area() / (64.0 * pi * pi * pi));
    Ctf ctf;
    ctf.frequencies_hz = frequencies_hz;
    ctf.values.reserve(frequencies_hz.size());
    for (const double f : frequencies_hz) {
        const double lambda_f = speed_of_light / f;
        std::complex<double> sum = 0.0;
        for (const auto& t : terms)
            sum += t.weight * std::polar(1.0, -2.0 * pi * f * t.total_path / speed_of_light);
        ctf.values.push_back(amp * lambda_f * sum);
    }
    return ctf;
}

Ctf add_static_component(const Ctf& ctf, const Scene& scene, const Direction& specular_direction,
                         double gain) {
    if (gain < 0.0)
        throw invalid_parameter("add_static_component: gain must be >= 0");
    if (gain == 0.0)
        return ctf;
    const Vec3 center = scene.ris_pose().translation();
    const double rx_range = (scene.rx_position() - center).norm();
    const Vec3 spec_point =
        scene.ris_pose().to_world(direction_to_position(specular_direction, rx_range));
    const double path = (scene.tx_position() - center).norm() + (spec_point - center).norm();
    const double delay = path / speed_of_light;

    Ctf out = ctf;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += gain * std::polar(1.0, -2.0 * pi * out.frequencies_hz[i] * delay);
    return out;
}

}  // namespace ris
