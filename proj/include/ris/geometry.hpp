// SPDX-License-Identifier: Apache-2.0
//
// RIS array geometry: hexagonal element lattice, scene placement (TX/RX and
// surface pose) and the per-element path lengths / incidence angles that feed
// the received-power model.
//
// Conventions, used consistently everywhere:
//  * The RIS local frame has the elements in the z = 0 plane and boresight
//    along local +z.
//  * A Direction (azimuth phi, elevation theta, degrees) maps to the unit
//    vector (cos th * sin phi, sin th, cos th * cos phi): azimuth rotates
//    about local y toward +x, elevation tilts toward +y.

#ifndef RIS_GEOMETRY_HPP
#define RIS_GEOMETRY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ris/vec3.hpp"

namespace ris {

inline constexpr double speed_of_light = 299792458.0;  // m/s

struct ElementGeometry {
    int index = 0;   // 1-based, contiguous
    Vec3 position;   // meters, RIS local frame (z = 0)
};

// Immutable after construction; the constructor enforces the lattice
// invariants (contiguous indices, coplanarity, minimum pairwise spacing).
class RisArray {
public:
    RisArray(std::vector<ElementGeometry> elements, double spacing_m,
             double carrier_frequency_hz, double element_gain, double element_area_m2,
             double pattern_exponent);

    const std::vector<ElementGeometry>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    double spacing() const { return spacing_; }
    double carrier_frequency() const { return carrier_frequency_; }
    double wavelength() const { return speed_of_light / carrier_frequency_; }
    double element_gain() const { return element_gain_; }
    double element_area() const { return element_area_; }
    double pattern_exponent() const { return pattern_exponent_; }

private:
    std::vector<ElementGeometry> elements_;
    double spacing_;
    double carrier_frequency_;
    double element_gain_;
    double element_area_;
    double pattern_exponent_;
};

// Rigid transform of the RIS local frame into the world frame.
// rotation must be proper orthonormal (checked to 1e-9).
class Pose {
public:
    Pose();  // identity
    Pose(const Mat3& rotation, const Vec3& translation);

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 to_world(const Vec3& local) const { return rotation_ * local + translation_; }
    Vec3 to_local(const Vec3& world) const { return rotation_.transposed() * (world - translation_); }

private:
    Mat3 rotation_;
    Vec3 translation_;
};

// TX/RX placement around a posed RIS. Construction fails unless both
// endpoints are strictly in the front half-space (positive local z).
class Scene {
public:
    Scene(const Pose& ris_pose, const Vec3& tx_position, const Vec3& rx_position);

    const Pose& ris_pose() const { return ris_pose_; }
    const Vec3& tx_position() const { return tx_position_; }
    const Vec3& rx_position() const { return rx_position_; }

    Scene with_rx(const Vec3& rx_world) const { return {ris_pose_, tx_position_, rx_world}; }

private:
    Pose ris_pose_;
    Vec3 tx_position_;
    Vec3 rx_position_;
};

// Scan/steering direction in degrees, |az| <= 90 and |el| <= 90.
struct Direction {
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;

    Direction() = default;
    Direction(double az_deg, double el_deg);
};

// Angle in degrees between two directions (as unit vectors).
double angular_distance_deg(const Direction& a, const Direction& b);

// Centered hexagonal lattice with 1 + 3*rings*(rings+1) elements. Element 1
// sits at the origin; each ring is appended in ascending angle from local +x.
RisArray build_hex_array(int rings, double spacing_m, double carrier_frequency_hz,
                         double element_gain, double element_area_m2,
                         double pattern_exponent);

// Direction -> point at the given range, RIS local frame (see file header for
// the axis convention). Inverse: position_to_direction.
Vec3 direction_to_position(const Direction& d, double range_m);
Direction position_to_direction(const Vec3& position);

// Per-element (distance to TX, distance to RX) in meters.
std::vector<std::pair<double, double>> path_lengths(const RisArray& array, const Scene& scene);

// Per-element (angle element->TX vs boresight, same for RX), radians in
// [0, pi/2).
std::vector<std::pair<double, double>> incidence_angles(const RisArray& array, const Scene& scene);

}  // namespace ris

#endif
