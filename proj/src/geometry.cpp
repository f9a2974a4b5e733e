// SPDX-License-Identifier: Apache-2.0

#include "ris/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ris/errors.hpp"

namespace ris {

namespace {

constexpr double pi = std::numbers::pi;

double deg2rad(double d) { return d * pi / 180.0; }
double rad2deg(double r) { return r * 180.0 / pi; }

}  // namespace

RisArray::RisArray(std::vector<ElementGeometry> elements, double spacing_m,
                   double carrier_frequency_hz, double element_gain, double element_area_m2,
                   double pattern_exponent)
    : elements_(std::move(elements)),
      spacing_(spacing_m),
      carrier_frequency_(carrier_frequency_hz),
      element_gain_(element_gain),
      element_area_(element_area_m2),
      pattern_exponent_(pattern_exponent) {
    if (elements_.empty())
        throw invalid_parameter("RisArray: element count must be >= 1");
    if (spacing_ <= 0.0)
        throw invalid_parameter("RisArray: spacing must be positive");
    if (carrier_frequency_ <= 0.0)
        throw invalid_parameter("RisArray: carrier frequency must be positive");
    if (element_gain_ <= 0.0 || element_area_ <= 0.0)
        throw invalid_parameter("RisArray: element gain and area must be positive");
    if (pattern_exponent_ < 0.0)
        throw invalid_parameter("RisArray: pattern exponent must be >= 0");

    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (elements_[k].index != static_cast<int>(k) + 1)
            throw invalid_parameter("RisArray: element indices must be 1..K contiguous");
        if (elements_[k].position.z != 0.0)
            throw invalid_parameter("RisArray: elements must be coplanar at local z = 0");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            const double d = (elements_[i].position - elements_[j].position).norm();
            if (d < spacing_ - 1e-9)
                throw invalid_parameter("RisArray: elements " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " closer than the lattice spacing");
        }
}

Pose::Pose() = default;

Pose::Pose(const Mat3& rotation, const Vec3& translation)
    : rotation_(rotation), translation_(translation) {
    const Mat3 rtr = rotation.transposed() * rotation;
    const Mat3 id = Mat3::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(rtr(i, j) - id(i, j)) > 1e-9)
                throw invalid_parameter("Pose: rotation is not orthonormal");
    if (std::abs(rotation.det() - 1.0) > 1e-9)
        throw invalid_parameter("Pose: rotation must be proper (det = +1)");
}

Scene::Scene(const Pose& ris_pose, const Vec3& tx_position, const Vec3& rx_position)
    : ris_pose_(ris_pose), tx_position_(tx_position), rx_position_(rx_position) {
    if (ris_pose_.to_local(tx_position_).z <= 0.0)
        throw degenerate_geometry("Scene: TX is not strictly in front of the RIS");
    if (ris_pose_.to_local(rx_position_).z <= 0.0)
        throw degenerate_geometry("Scene: RX is not strictly in front of the RIS");
}

Direction::Direction(double az_deg, double el_deg) : azimuth_deg(az_deg), elevation_deg(el_deg) {
    if (std::abs(az_deg) > 90.0 || std::abs(el_deg) > 90.0)
        throw invalid_parameter("Direction: azimuth and elevation must be within +/-90 degrees");
}

double angular_distance_deg(const Direction& a, const Direction& b) {
    const Vec3 u = direction_to_position(a, 1.0);
    const Vec3 v = direction_to_position(b, 1.0);
    return rad2deg(std::acos(std::clamp(u.dot(v), -1.0, 1.0)));
}

RisArray build_hex_array(int rings, double spacing_m, double carrier_frequency_hz,
                         double element_gain, double element_area_m2, double pattern_exponent) {
    if (rings < 0)
        throw invalid_parameter("build_hex_array: rings must be >= 0");
    if (spacing_m <= 0.0)
        throw invalid_parameter("build_hex_array: spacing must be positive");
    if (carrier_frequency_hz <= 0.0)
        throw invalid_parameter("build_hex_array: carrier frequency must be positive");

    // Axial lattice basis; ring n holds the points at hex distance n.
    const Vec3 a1{spacing_m, 0.0, 0.0};
    const Vec3 a2{spacing_m / 2.0, spacing_m * std::sqrt(3.0) / 2.0, 0.0};

    std::vector<ElementGeometry> elements;
    elements.push_back({1, {0.0, 0.0, 0.0}});
    for (int n = 1; n <= rings; ++n) {
        struct RingPoint {
            double angle;
            Vec3 p;
        };
        std::vector<RingPoint> ring;
        for (int i = -n; i <= n; ++i)
            for (int j = -n; j <= n; ++j) {
                if (std::max({std::abs(i), std::abs(j), std::abs(i + j)}) != n)
                    continue;
                const Vec3 p = a1 * static_cast<double>(i) + a2 * static_cast<double>(j);
                double ang = std::atan2(p.y, p.x);
                if (ang < 0.0) ang += 2.0 * pi;
                ring.push_back({ang, p});
            }
        std::sort(ring.begin(), ring.end(),
                  [](const RingPoint& a, const RingPoint& b) { return a.angle < b.angle; });
        for (const auto& rp : ring)
            elements.push_back({static_cast<int>(elements.size()) + 1, rp.p});
    }
    return {std::move(elements), spacing_m, carrier_frequency_hz,
            element_gain,        element_area_m2, pattern_exponent};
}

Vec3 direction_to_position(const Direction& d, double range_m) {
    if (range_m <= 0.0)
        throw invalid_parameter("direction_to_position: range must be positive");
    const double az = deg2rad(d.azimuth_deg);
    const double el = deg2rad(d.elevation_deg);
    return {range_m * std::cos(el) * std::sin(az), range_m * std::sin(el),
            range_m * std::cos(el) * std::cos(az)};
}

Direction position_to_direction(const Vec3& position) {
    const double r = position.norm();
    if (r <= 0.0)
        throw invalid_parameter("position_to_direction: zero-length position");
    const double el = std::asin(std::clamp(position.y / r, -1.0, 1.0));
    const double az = std::atan2(position.x, position.z);
    return {rad2deg(az), rad2deg(el)};
}

std::vector<std::pair<double, double>> path_lengths(const RisArray& array, const Scene& scene) {
    std::vector<std::pair<double, double>> out;
    out.reserve(array.size());
    for (const auto& e : array.elements()) {
        const Vec3 world = scene.ris_pose().to_world(e.position);
        const double r_t = (world - scene.tx_position()).norm();
        const double r_r = (world - scene.rx_position()).norm();
        if (r_t < 1e-12 || r_r < 1e-12)
            throw degenerate_geometry("path_lengths: TX or RX coincides with element " +
                                      std::to_string(e.index));
        out.emplace_back(r_t, r_r);
    }
    return out;
}

std::vector<std::pair<double, double>> incidence_angles(const RisArray& array, const Scene& scene) {
    const Vec3 tx_local = scene.ris_pose().to_local(scene.tx_position());
    const Vec3 rx_local = scene.ris_pose().to_local(scene.rx_position());

    auto boresight_angle = [](const Vec3& from_element) {
        const double r = from_element.norm();
        if (r < 1e-12)
            throw degenerate_geometry("incidence_angles: endpoint coincides with an element");
        // Boresight is local +z, so cos(theta) = z / r.
        const double theta = std::acos(std::clamp(from_element.z / r, -1.0, 1.0));
        if (theta >= pi / 2.0)
            throw degenerate_geometry("incidence_angles: endpoint behind the array plane");
        return theta;
    };

    std::vector<std::pair<double, double>> out;
    out.reserve(array.size());
    for (const auto& e : array.elements())
        out.emplace_back(boresight_angle(tx_local - e.position),
                         boresight_angle(rx_local - e.position));
    return out;
}

}  // namespace ris
