#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "singlab/d2.hpp"

namespace singlab {

enum class CoordFrame { Cartesian, Cylindrical, Spherical };

std::string frame_name(CoordFrame f);

/// Coordinates in the native frame plus time:
///   Cartesian   (x, y, z, t)
///   Cylindrical (r, phi, z, t)
///   Spherical   (r, theta, phi, t)
using Coords = std::array<double, 4>;
using SeededCoords = std::array<D4, 4>;
using ComponentFn = std::function<D4(const SeededCoords&)>;

/// Closed-form velocity/pressure field with exact first and second partials
/// (forward-mode evaluation of the closed form). Immutable after
/// construction; evaluation is pure.
struct FieldSpec {
    std::string family;
    CoordFrame frame = CoordFrame::Cartesian;
    bool steady = true;
    bool has_pressure = true;
    std::array<ComponentFn, 3> velocity;
    ComponentFn pressure;
    std::map<std::string, double> params;
    std::string singular_set;

    D4 eval_velocity(int comp, const Coords& q) const;
    D4 eval_pressure(const Coords& q) const;
    double velocity_value(int comp, const Coords& q) const {
        return eval_velocity(comp, q).v;
    }
};

SeededCoords seed_coords(const Coords& q);

/// Cartesian components of a velocity sampled from a field in any frame, at
/// the Cartesian point x. Used for frame cross-checks.
std::array<double, 3> cartesian_velocity(const FieldSpec& f,
                                         const std::array<double, 3>& x, double t);

}  // namespace singlab
