#include "singlab/gaussian_inner.hpp"

namespace singlab {

namespace {

// 1D moment  m_k = integral y^k w1(y) dy  for the per-dimension factor of w.
// Odd k vanish. Even k = 2j:
//   exp(-y^2/4):              2 (2j)!/j!            * pi^{1/2}
//   (4pi)^{-1/2} exp(-y^2/4):   (2j)!/j!                         (pure rational)
//   (4pi)^{-1}  exp(-y^2/2):    (2j)!/(2^j j!) / 4  * 2^{1/2} pi^{-1/2}
GaussianValue moment1d(int k, GaussianWeight w) {
    GaussianValue out;
    if (k % 2 != 0) return out;
    int j = k / 2;
    Rational base(factorial(static_cast<unsigned>(2 * j)),
                  factorial(static_cast<unsigned>(j)));
    base.canonicalize();
    switch (w) {
        case GaussianWeight::Adjoint:
            out.coeff = 2 * base;
            out.pi_half = 1;
            break;
        case GaussianWeight::Direct:
            out.coeff = base;
            break;
        case GaussianWeight::SquaredF: {
            Rational den(Integer(1) << j);
            out.coeff = base / (4 * den);
            out.two_half = 1;
            out.pi_half = -1;
            break;
        }
    }
    return out;
}

}  // namespace

GaussianValue gaussian_integral(const ExactPolynomial3& p, GaussianWeight w) {
    GaussianValue out;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        int pi_half = 0, two_half = 0;
        bool zero = false;
        for (int i = 0; i < 3; ++i) {
            GaussianValue mi = moment1d(m[i], w);
            if (mi.is_zero()) {
                zero = true;
                break;
            }
            term *= mi.coeff;
            pi_half += mi.pi_half;
            two_half += mi.two_half;
        }
        if (zero) continue;
        // all terms share the same (pi, 2) powers: 3 moments per term
        out.coeff += term;
        out.pi_half = pi_half;
        out.two_half = two_half;
    }
    if (out.is_zero()) return GaussianValue{};
    return out;
}

GaussianValue gaussian_weighted_inner(const ExactPolynomial3& p,
                                      const ExactPolynomial3& q,
                                      GaussianWeight w) {
    return gaussian_integral(p * q, w);
}

}  // namespace singlab
