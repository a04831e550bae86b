#include "singlab/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace singlab {

double HermiteMode::normalization() const {
    return norm_num.get_d() / std::sqrt(norm_radicand.get_d());
}

ExactPolynomial3 apply_bstar(const ExactPolynomial3& p) {
    return p.laplacian() - rat(1, 2) * p.y_dot_grad();
}

ExactPolynomial3 weighted_divergence(const std::array<ExactPolynomial3, 3>& v) {
    ExactPolynomial3 out;
    for (int i = 0; i < 3; ++i) {
        out += v[static_cast<size_t>(i)].differentiate(i);
        out -= rat(1, 2) * v[static_cast<size_t>(i)].mul_var(i);
    }
    return out;
}

HermiteMode hermite_mode(const MultiIndex& beta) {
    // H_0 = 1,  H_{beta+e_i} = d_i H_beta - (1/2) y_i H_beta
    ExactPolynomial3 h = ExactPolynomial3::constant(Rational(1));
    for (int dir = 0; dir < 3; ++dir)
        for (int k = 0; k < beta[dir]; ++k)
            h = h.differentiate(dir) - rat(1, 2) * h.mul_var(dir);

    HermiteMode mode;
    mode.index = beta;
    mode.polynomial = h;
    mode.eigenvalue = rat(-beta.order(), 2);
    mode.norm_num = Integer(1) << beta.order();
    mode.norm_radicand = factorial(static_cast<unsigned>(beta[0])) *
                         factorial(static_cast<unsigned>(beta[1])) *
                         factorial(static_cast<unsigned>(beta[2]));

    ExactPolynomial3 check = apply_bstar(h) - mode.eigenvalue * h;
    if (!check.is_zero())
        throw std::logic_error("hermite_mode: eigen-identity failed for " + beta.str());
    return mode;
}

LadderFamily ladder_family_from_string(const std::string& tag) {
    if (tag == "adjoint-blowup") return LadderFamily::AdjointBlowup;
    if (tag == "direct-global") return LadderFamily::DirectGlobal;
    if (tag == "radial-2d") return LadderFamily::Radial2D;
    if (tag == "shifted-2d") return LadderFamily::Shifted2D;
    if (tag == "twistor-linearized") return LadderFamily::TwistorLinearized;
    if (tag == "burnett") return LadderFamily::Burnett;
    throw std::invalid_argument("unknown ladder family: " + tag);
}

std::string ladder_family_name(LadderFamily f) {
    switch (f) {
        case LadderFamily::AdjointBlowup: return "adjoint-blowup";
        case LadderFamily::DirectGlobal: return "direct-global";
        case LadderFamily::Radial2D: return "radial-2d";
        case LadderFamily::Shifted2D: return "shifted-2d";
        case LadderFamily::TwistorLinearized: return "twistor-linearized";
        case LadderFamily::Burnett: return "burnett";
    }
    throw std::invalid_argument("unknown ladder family enum");
}

LadderEntry spectral_ladder(LadderFamily family, int order) {
    if (order < 0) throw std::invalid_argument("spectral_ladder: order must be >= 0");
    long k = order;
    switch (family) {
        case LadderFamily::AdjointBlowup:
            return {rat(-k, 2) - rat(1, 2), (k + 1) * (k + 2) / 2};
        case LadderFamily::DirectGlobal:
            return {rat(-k, 2) - 1, std::nullopt};
        case LadderFamily::Radial2D:
            return {rat(-k), std::nullopt};
        case LadderFamily::Shifted2D:
            return {rat(1 - 2 * k), std::nullopt};
        case LadderFamily::TwistorLinearized:
            return {rat(1 - k), std::nullopt};
        case LadderFamily::Burnett:
            return {rat(-k, 4), std::nullopt};
    }
    throw std::invalid_argument("spectral_ladder: bad family");
}

double SwirlResidual::magnitude(double sigma) const {
    double m = 0.0;
    for (const auto& [mi, c] : drift_part.terms()) m = std::max(m, std::abs(to_double(c)));
    for (const auto& [mi, c] : angular_part.terms())
        m = std::max(m, std::abs(sigma) * std::abs(to_double(c)));
    return m;
}

SwirlResidual swirl_invariance(const HermiteMode& mode, double sigma) {
    (void)sigma;
    const ExactPolynomial3& p = mode.polynomial;
    if (!p.is_planar_radial())
        throw std::invalid_argument(
            "swirl_invariance: mode must be radial in the plane (a polynomial "
            "in y1^2 + y2^2)");
    // planar drift operator with unit shift; eigenvalue 1 - order/2
    ExactPolynomial3 lap2 =
        p.differentiate(0).differentiate(0) + p.differentiate(1).differentiate(1);
    ExactPolynomial3 ydg =
        p.differentiate(0).mul_var(0) + p.differentiate(1).mul_var(1);
    Rational lambda = Rational(1) + rat(-p.degree(), 2);
    SwirlResidual r;
    r.drift_part = lap2 - rat(1, 2) * ydg + p - lambda * p;
    r.angular_part = p.angular_derivative(0, 1);
    return r;
}

}  // namespace singlab
