#pragma once

#include <map>
#include <string>
#include <vector>

#include "singlab/multiindex.hpp"
#include "singlab/rational.hpp"

namespace singlab {

/// Polynomial in (y1,y2,y3) with exact rational coefficients.
/// Invariant: no stored term has a zero coefficient.
class ExactPolynomial3 {
public:
    using TermMap = std::map<MultiIndex, Rational>;

    ExactPolynomial3() = default;

    static ExactPolynomial3 constant(const Rational& c);
    static ExactPolynomial3 monomial(const MultiIndex& m, const Rational& c);
    static ExactPolynomial3 variable(int dir);  // y_{dir+1}

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff(const MultiIndex& m) const;

    ExactPolynomial3 operator+(const ExactPolynomial3& o) const;
    ExactPolynomial3 operator-(const ExactPolynomial3& o) const;
    ExactPolynomial3 operator*(const ExactPolynomial3& o) const;
    ExactPolynomial3 operator-() const;
    ExactPolynomial3& operator+=(const ExactPolynomial3& o);
    ExactPolynomial3& operator-=(const ExactPolynomial3& o);

    ExactPolynomial3 scaled(const Rational& c) const;
    ExactPolynomial3 differentiate(int dir) const;
    ExactPolynomial3 mul_var(int dir) const;  // multiply by y_{dir+1}

    ExactPolynomial3 laplacian() const;
    ExactPolynomial3 y_dot_grad() const;  // (y . grad) p
    /// Rotation generator y_i d/dy_j - y_j d/dy_i.
    ExactPolynomial3 angular_derivative(int i, int j) const;

    /// True when the polynomial only involves y1^2+y2^2 (planar radial):
    /// every term has e3 = 0 and the poly is a function of y1^2+y2^2.
    bool is_planar_radial() const;

    Rational eval(const Rational& y1, const Rational& y2, const Rational& y3) const;
    double eval(double y1, double y2, double y3) const;

    bool operator==(const ExactPolynomial3& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    void add_term(const MultiIndex& m, const Rational& c);
    TermMap terms_;
};

ExactPolynomial3 operator*(const Rational& c, const ExactPolynomial3& p);

}  // namespace singlab
