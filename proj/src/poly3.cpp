#include "singlab/poly3.hpp"

#include <algorithm>
#include <sstream>

namespace singlab {

ExactPolynomial3 ExactPolynomial3::constant(const Rational& c) {
    ExactPolynomial3 p;
    p.add_term(MultiIndex{}, c);
    return p;
}

ExactPolynomial3 ExactPolynomial3::monomial(const MultiIndex& m, const Rational& c) {
    ExactPolynomial3 p;
    p.add_term(m, c);
    return p;
}

ExactPolynomial3 ExactPolynomial3::variable(int dir) {
    MultiIndex m;
    m[dir] = 1;
    return monomial(m, Rational(1));
}

void ExactPolynomial3::add_term(const MultiIndex& m, const Rational& c) {
    if (singlab::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (singlab::is_zero(it->second)) terms_.erase(it);
    }
}

int ExactPolynomial3::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.order());
    return d;
}

Rational ExactPolynomial3::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

ExactPolynomial3 ExactPolynomial3::operator+(const ExactPolynomial3& o) const {
    ExactPolynomial3 p = *this;
    p += o;
    return p;
}

ExactPolynomial3 ExactPolynomial3::operator-(const ExactPolynomial3& o) const {
    ExactPolynomial3 p = *this;
    p -= o;
    return p;
}

ExactPolynomial3& ExactPolynomial3::operator+=(const ExactPolynomial3& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExactPolynomial3& ExactPolynomial3::operator-=(const ExactPolynomial3& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExactPolynomial3 ExactPolynomial3::operator-() const { return scaled(Rational(-1)); }

ExactPolynomial3 ExactPolynomial3::operator*(const ExactPolynomial3& o) const {
    ExactPolynomial3 p;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            MultiIndex m;
            for (int i = 0; i < 3; ++i) m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    return p;
}

ExactPolynomial3 ExactPolynomial3::scaled(const Rational& c) const {
    ExactPolynomial3 p;
    if (singlab::is_zero(c)) return p;
    for (const auto& [m, q] : terms_) p.terms_.emplace(m, q * c);
    return p;
}

ExactPolynomial3 operator*(const Rational& c, const ExactPolynomial3& p) { return p.scaled(c); }

ExactPolynomial3 ExactPolynomial3::differentiate(int dir) const {
    ExactPolynomial3 p;
    for (const auto& [m, c] : terms_) {
        if (m[dir] == 0) continue;
        p.add_term(m.bumped(dir, -1), c * m[dir]);
    }
    return p;
}

ExactPolynomial3 ExactPolynomial3::mul_var(int dir) const {
    ExactPolynomial3 p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m.bumped(dir, 1), c);
    return p;
}

ExactPolynomial3 ExactPolynomial3::laplacian() const {
    ExactPolynomial3 p;
    for (int i = 0; i < 3; ++i) p += differentiate(i).differentiate(i);
    return p;
}

ExactPolynomial3 ExactPolynomial3::y_dot_grad() const {
    ExactPolynomial3 p;
    for (int i = 0; i < 3; ++i) p += differentiate(i).mul_var(i);
    return p;
}

ExactPolynomial3 ExactPolynomial3::angular_derivative(int i, int j) const {
    return differentiate(j).mul_var(i) - differentiate(i).mul_var(j);
}

bool ExactPolynomial3::is_planar_radial() const {
    for (const auto& [m, c] : terms_)
        if (m[2] != 0) return false;
    // radial in the plane <=> annihilated by the rotation generator
    return angular_derivative(0, 1).is_zero();
}

Rational ExactPolynomial3::eval(const Rational& y1, const Rational& y2,
                                const Rational& y3) const {
    Rational out(0);
    for (const auto& [m, c] : terms_)
        out += c * rat_pow(y1, m[0]) * rat_pow(y2, m[1]) * rat_pow(y3, m[2]);
    return out;
}

double ExactPolynomial3::eval(double y1, double y2, double y3) const {
    double out = 0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (int k = 0; k < m[0]; ++k) t *= y1;
        for (int k = 0; k < m[1]; ++k) t *= y2;
        for (int k = 0; k < m[2]; ++k) t *= y3;
        out += t;
    }
    return out;
}

std::string ExactPolynomial3::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        static const char* names[3] = {"y1", "y2", "y3"};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < m[i]; ++k) os << "*" << names[i];
    }
    return os.str();
}

}  // namespace singlab
