#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "singlab/solenoidal.hpp"

using namespace singlab;

namespace {

std::vector<MultiIndex> all_multiindices_up_to(int kmax) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= kmax; ++k)
        for (int a = k; a >= 0; --a)
            for (int b = k - a; b >= 0; --b) {
                MultiIndex m;
                m[0] = a;
                m[1] = b;
                m[2] = k - a - b;
                out.push_back(m);
            }
    return out;
}

}  // namespace

TEST_CASE("hermite_mode: low-order shapes and eigenvalues") {
    MultiIndex zero;
    auto m0 = hermite_mode(zero);
    CHECK(m0.polynomial == ExactPolynomial3::constant(Rational(1)));
    CHECK(m0.eigenvalue == Rational(0));

    MultiIndex e1;
    e1[0] = 1;
    auto m1 = hermite_mode(e1);
    // proportional to y1, eigenvalue -1/2
    CHECK(m1.eigenvalue == rat(-1, 2));
    CHECK(m1.polynomial == rat(-1, 2) * ExactPolynomial3::variable(0));

    MultiIndex e11;
    e11[0] = 2;
    auto m2 = hermite_mode(e11);
    CHECK(m2.eigenvalue == Rational(-1));
    // a*y1^2 + b with a = 1/4, b = -1/2
    auto y1 = ExactPolynomial3::variable(0);
    CHECK(m2.polynomial == rat(1, 4) * (y1 * y1) - ExactPolynomial3::constant(rat(1, 2)));
}

TEST_CASE("planar radial relative of the order-2 mode is 1 - y^2/4 up to scale") {
    MultiIndex a, b;
    a[0] = 2;
    b[1] = 2;
    auto sum = hermite_mode(a).polynomial + hermite_mode(b).polynomial;
    // sum = (y1^2 + y2^2)/4 - 1 which is -(1 - y^2/4)
    auto y1 = ExactPolynomial3::variable(0), y2 = ExactPolynomial3::variable(1);
    auto target = ExactPolynomial3::constant(Rational(1)) -
                  rat(1, 4) * (y1 * y1 + y2 * y2);
    CHECK(sum == -target);
}

TEST_CASE("eigen-identity holds exactly for all |beta| <= 6") {
    for (const auto& m : all_multiindices_up_to(6)) {
        auto mode = hermite_mode(m);
        auto check = apply_bstar(mode.polynomial) - mode.eigenvalue * mode.polynomial;
        CHECK(check.is_zero());
    }
}

TEST_CASE("derivative shift: d_i psi_beta is a nonzero multiple of psi_{beta-e_i}") {
    std::mt19937_64 rng(99);
    auto pool = all_multiindices_up_to(6);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> axis(0, 2);
    int done = 0;
    while (done < 100) {
        MultiIndex beta = pool[pick(rng)];
        int dir = axis(rng);
        if (beta[dir] == 0) continue;
        ++done;
        auto hi = hermite_mode(beta).polynomial.differentiate(dir);
        auto lo = hermite_mode(beta.bumped(dir, -1)).polynomial;
        // hi = -(beta_i/2) * lo exactly
        CHECK((hi - rat(-beta[dir], 2) * lo).is_zero());
    }
}

TEST_CASE("spectral ladders") {
    auto a = spectral_ladder(LadderFamily::AdjointBlowup, 0);
    CHECK(a.eigenvalue == rat(-1, 2));
    CHECK(a.multiplicity.value() == 1);
    CHECK(spectral_ladder(LadderFamily::AdjointBlowup, 3).multiplicity.value() == 10);
    CHECK(spectral_ladder(LadderFamily::DirectGlobal, 1).eigenvalue == rat(-3, 2));
    CHECK(spectral_ladder(LadderFamily::Shifted2D, 2).eigenvalue == Rational(-3));
    CHECK(spectral_ladder(LadderFamily::Radial2D, 2).eigenvalue == Rational(-2));
    CHECK(spectral_ladder(LadderFamily::TwistorLinearized, 4).eigenvalue == Rational(-3));
    CHECK(spectral_ladder(LadderFamily::Burnett, 4).eigenvalue == Rational(-1));
    CHECK_THROWS(ladder_family_from_string("bogus"));
}

TEST_CASE("solenoidal_basis dimensions k(k+2) for k = 1..4") {
    CHECK(solenoidal_basis(1).size() == 3);
    CHECK(solenoidal_basis(2).size() == 8);
    CHECK(solenoidal_basis(3).size() == 15);
    CHECK(solenoidal_basis(4).size() == 24);
}

TEST_CASE("k=1 basis spans the rotation fields") {
    auto basis = solenoidal_basis(1);
    REQUIRE(basis.size() == 3);
    // every member is a combination of the rotations <=> weighted divergence
    // vanishes AND y.v = 0 for each basis element at order 1
    for (const auto& mode : basis) {
        CHECK(mode.is_member());
        ExactPolynomial3 ydot;
        for (int i = 0; i < 3; ++i)
            ydot += mode.components[static_cast<size_t>(i)].mul_var(i);
        CHECK(ydot.is_zero());
    }
}

TEST_CASE("every solenoidal mode yields an exactly divergence-free direct mode") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& mode : solenoidal_basis(k)) {
            auto d = direct_mode(mode);
            CHECK(gaussian_divergence(d.components).is_zero());
        }
}

TEST_CASE("hp1 adjudication: confirmed members, v26 repaired") {
    auto entries = adjudicate_hp1();
    auto find = [&](const std::string& n) {
        for (const auto& e : entries)
            if (e.name == n) return e;
        throw std::runtime_error("missing entry " + n);
    };
    for (const char* n : {"v11", "v12", "v13", "v21", "v22", "v23", "v24", "v25",
                          "v27", "v28"})
        CHECK(find(n).status == AdjudicationStatus::Confirmed);

    auto v26 = find("v26");
    CHECK(v26.status == AdjudicationStatus::Repaired);
    CHECK(v26.repair_component == 0);
    // repaired first component is -y1 y3
    MultiIndex m;
    m[0] = 1;
    m[2] = 1;
    CHECK(v26.repaired_component == ExactPolynomial3::monomial(m, Rational(-1)));

    // repaired triple is a genuine member
    auto fixed = v26.printed;
    fixed[0] = v26.repaired_component;
    CHECK(weighted_divergence(fixed).is_zero());

    // printed asymptotic pattern is not solenoidal and admits no
    // single-monomial repair
    CHECK(find("v1-pattern").status == AdjudicationStatus::Refuted);
}

TEST_CASE("gram matrix: exact off-diagonal zeros, positive diagonals") {
    auto entries = gram_matrix(4);
    for (const auto& e : entries) {
        if (e.beta == e.gamma) {
            CHECK(sgn(e.normalized_diagonal) > 0);
            // diagonal after the printed normalization is 2^{|beta|}
            CHECK(e.normalized_diagonal == rat_pow(Rational(2), e.beta.order()));
        } else {
            CHECK(e.exactly_zero);
        }
    }
}

TEST_CASE("swirl invariance of radial modes for any sigma") {
    // constant mode
    auto c = hermite_mode(MultiIndex{});
    CHECK(swirl_invariance(c, 0.7).magnitude(0.7) == 0.0);

    // radial quadratic: psi_{(2,0,0)} + psi_{(0,2,0)}
    MultiIndex a, b;
    a[0] = 2;
    b[1] = 2;
    HermiteMode quad;
    quad.index = a;
    quad.polynomial = hermite_mode(a).polynomial + hermite_mode(b).polynomial;
    quad.eigenvalue = Rational(-1);
    CHECK(swirl_invariance(quad, 1.0).magnitude(1.0) == 0.0);

    // radial quartic: (y1^2+y2^2)^2 Hermite combination
    MultiIndex q40, q04, q22;
    q40[0] = 4;
    q04[1] = 4;
    q22[0] = 2;
    q22[1] = 2;
    HermiteMode quart;
    quart.polynomial = hermite_mode(q40).polynomial + hermite_mode(q04).polynomial +
                       rat(2) * ExactPolynomial3(hermite_mode(q22).polynomial);
    CHECK(quart.polynomial.is_planar_radial());
    CHECK(swirl_invariance(quart, -3.7).magnitude(-3.7) == 0.0);

    // non-radial input is a contract error
    MultiIndex e1;
    e1[0] = 1;
    CHECK_THROWS_AS(swirl_invariance(hermite_mode(e1), 1.0), std::invalid_argument);
}

TEST_CASE("normalization constants and the basis export surface") {
    MultiIndex m;
    m[0] = 2;
    auto mode = hermite_mode(m);
    // 2^{|beta|} / sqrt(beta!) = 4 / sqrt(2)
    CHECK(mode.normalization() == doctest::Approx(4.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(mode.norm_num == Integer(4));
    CHECK(mode.norm_radicand == Integer(2));

    auto csv = solenoidal_basis_csv(2);
    CHECK(csv.rfind("k,mode_id,component,e1,e2,e3,numerator,denominator", 0) == 0);
    // 3 modes at k=1 and 8 at k=2 appear
    CHECK(csv.find("\n1,0,") != std::string::npos);
    CHECK(csv.find("\n2,7,") != std::string::npos);
}
