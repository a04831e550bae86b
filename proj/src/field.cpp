#include "singlab/field.hpp"

#include <cmath>
#include <stdexcept>

namespace singlab {

std::string frame_name(CoordFrame f) {
    switch (f) {
        case CoordFrame::Cartesian: return "cartesian";
        case CoordFrame::Cylindrical: return "cylindrical";
        case CoordFrame::Spherical: return "spherical";
    }
    return "?";
}

SeededCoords seed_coords(const Coords& q) {
    return {D4::var(0, q[0]), D4::var(1, q[1]), D4::var(2, q[2]), D4::var(3, q[3])};
}

D4 FieldSpec::eval_velocity(int comp, const Coords& q) const {
    return velocity[static_cast<size_t>(comp)](seed_coords(q));
}

D4 FieldSpec::eval_pressure(const Coords& q) const {
    if (!has_pressure) throw std::logic_error("field has no pressure component");
    return pressure(seed_coords(q));
}

std::array<double, 3> cartesian_velocity(const FieldSpec& f,
                                         const std::array<double, 3>& x, double t) {
    switch (f.frame) {
        case CoordFrame::Cartesian: {
            Coords q{x[0], x[1], x[2], t};
            return {f.velocity_value(0, q), f.velocity_value(1, q),
                    f.velocity_value(2, q)};
        }
        case CoordFrame::Cylindrical: {
            double r = std::hypot(x[0], x[1]);
            double phi = std::atan2(x[1], x[0]);
            Coords q{r, phi, x[2], t};
            double U = f.velocity_value(0, q), V = f.velocity_value(1, q),
                   W = f.velocity_value(2, q);
            double c = std::cos(phi), s = std::sin(phi);
            return {U * c - V * s, U * s + V * c, W};
        }
        case CoordFrame::Spherical: {
            double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            double rho = std::hypot(x[0], x[1]);
            double theta = std::atan2(rho, x[2]);
            double phi = std::atan2(x[1], x[0]);
            Coords q{r, theta, phi, t};
            double u = f.velocity_value(0, q), v = f.velocity_value(1, q),
                   w = f.velocity_value(2, q);
            double st = std::sin(theta), ct = std::cos(theta);
            double cp = std::cos(phi), sp = std::sin(phi);
            return {u * st * cp + v * ct * cp - w * sp,
                    u * st * sp + v * ct * sp + w * cp, u * ct - v * st};
        }
    }
    throw std::logic_error("cartesian_velocity: bad frame");
}

}  // namespace singlab
