#include "singlab/solenoidal.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace singlab {

namespace {

std::vector<MultiIndex> multiindices_of_order(int k) {
    std::vector<MultiIndex> out;
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

// d_i q - (1/2) y_i q : the i-th contribution to the weighted divergence.
ExactPolynomial3 wdiv_component(const ExactPolynomial3& q, int i) {
    return q.differentiate(i) - rat(1, 2) * q.mul_var(i);
}

// Scale a rational-vector mode to coprime integers with positive leading
// coefficient, for stable readable output.
void normalize_mode(std::array<ExactPolynomial3, 3>& comps) {
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& comp : comps)
        for (const auto& [m, c] : comp.terms()) {
            Integer den = c.get_den();
            lcm_den = lcm_den / gcd(lcm_den, den) * den;
        }
    for (const auto& comp : comps)
        for (const auto& [m, c] : comp.terms()) {
            Integer num = c.get_num() * (lcm_den / c.get_den());
            gcd_num = gcd(gcd_num, num);
        }
    if (gcd_num == 0) return;
    Rational scale(lcm_den, gcd_num);
    scale.canonicalize();
    for (auto& comp : comps) comp = comp.scaled(scale);
    // sign: first nonzero coefficient positive
    for (auto& comp : comps) {
        if (comp.is_zero()) continue;
        if (sgn(comp.terms().begin()->second) < 0)
            for (auto& c2 : comps) c2 = -c2;
        break;
    }
}

}  // namespace

std::vector<SolenoidalMode> solenoidal_basis(int k) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("solenoidal_basis: k must be in [1,6]");

    const std::vector<MultiIndex> betas = multiindices_of_order(k);
    const size_t nb = betas.size();
    std::vector<ExactPolynomial3> hpolys(nb);
    for (size_t i = 0; i < nb; ++i) hpolys[i] = hermite_mode(betas[i]).polynomial;

    const size_t ncols = 3 * nb;
    std::vector<ExactPolynomial3> col_image(ncols);
    std::map<MultiIndex, size_t> row_of;
    for (size_t c = 0; c < ncols; ++c) {
        int comp = static_cast<int>(c / nb);
        col_image[c] = wdiv_component(hpolys[c % nb], comp);
        for (const auto& [m, q] : col_image[c].terms())
            row_of.emplace(m, 0);
    }
    size_t nrows = 0;
    for (auto& [m, idx] : row_of) idx = nrows++;

    std::vector<std::vector<Rational>> M(nrows, std::vector<Rational>(ncols, Rational(0)));
    for (size_t c = 0; c < ncols; ++c)
        for (const auto& [m, q] : col_image[c].terms()) M[row_of[m]][c] = q;

    // exact RREF
    std::vector<long> pivot_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < nrows; ++c) {
        size_t piv = rank;
        while (piv < nrows && is_zero(M[piv][c])) ++piv;
        if (piv == nrows) continue;
        std::swap(M[piv], M[rank]);
        Rational inv = Rational(1) / M[rank][c];
        for (size_t j = c; j < ncols; ++j) M[rank][j] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || is_zero(M[r][c])) continue;
            Rational f = M[r][c];
            for (size_t j = c; j < ncols; ++j) M[r][j] -= f * M[rank][j];
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }

    std::vector<SolenoidalMode> basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<Rational> x(ncols, Rational(0));
        x[f] = 1;
        for (size_t c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0)
                x[c] = -M[static_cast<size_t>(pivot_of_col[c])][f];
        SolenoidalMode mode;
        mode.degree = k;
        mode.eigenvalue = rat(-k, 2);
        for (size_t c = 0; c < ncols; ++c) {
            if (is_zero(x[c])) continue;
            int comp = static_cast<int>(c / nb);
            mode.components[static_cast<size_t>(comp)] += x[c] * hpolys[c % nb];
        }
        normalize_mode(mode.components);
        if (!mode.is_member())
            throw std::logic_error("solenoidal_basis: nullspace vector fails membership");
        basis.push_back(std::move(mode));
    }
    return basis;
}

ExactPolynomial3 gaussian_divergence(const std::array<ExactPolynomial3, 3>& v) {
    return weighted_divergence(v);
}

DirectMode direct_mode(const SolenoidalMode& v) {
    if (!v.is_member())
        throw std::invalid_argument("direct_mode: input is not a solenoidal mode");
    DirectMode d;
    d.components = v.components;
    d.eigenvalue = v.eigenvalue;
    if (!gaussian_divergence(d.components).is_zero())
        throw std::logic_error("direct_mode: Gaussian-multiplied field not divergence-free");
    return d;
}

std::string adjudication_status_name(AdjudicationStatus s) {
    switch (s) {
        case AdjudicationStatus::Confirmed: return "confirmed";
        case AdjudicationStatus::Refuted: return "refuted";
        case AdjudicationStatus::Repaired: return "repaired";
    }
    return "?";
}

namespace {

ExactPolynomial3 mono(int a, int b, int c, long coef = 1) {
    MultiIndex m;
    m[0] = a;
    m[1] = b;
    m[2] = c;
    return ExactPolynomial3::monomial(m, Rational(coef));
}

// Is q inside the span of order-k Hermite polynomials? Exactly when the
// drift-diffusion operator scales it by -k/2.
bool in_hermite_span(const ExactPolynomial3& q, int k) {
    return (apply_bstar(q) - rat(-k, 2) * q).is_zero();
}

Hp1Entry adjudicate_entry(const std::string& name,
                          const std::array<ExactPolynomial3, 3>& printed, int k) {
    Hp1Entry e;
    e.name = name;
    e.printed = printed;
    ExactPolynomial3 w = weighted_divergence(printed);
    if (w.is_zero()) {
        e.status = AdjudicationStatus::Confirmed;
        return e;
    }

    // single-monomial repair: replace one component by c * y^alpha with
    // |alpha| = k, keeping the result in the order-k triple space
    for (int i = 0; i < 3; ++i) {
        ExactPolynomial3 base;
        for (int j = 0; j < 3; ++j)
            if (j != i) base += wdiv_component(printed[static_cast<size_t>(j)], j);
        for (int a = k; a >= 0; --a)
            for (int b = k - a; b >= 0; --b) {
                ExactPolynomial3 m = mono(a, b, k - a - b);
                if (!in_hermite_span(m, k)) continue;
                ExactPolynomial3 pm = wdiv_component(m, i);
                // need base + c*pm == 0
                if (pm.is_zero()) {
                    if (!base.is_zero()) continue;
                    continue;  // c indeterminate; skip degenerate case
                }
                if (base.is_zero()) continue;
                Rational lead = pm.coeff(base.terms().begin()->first);
                if (is_zero(lead)) continue;
                Rational c = -base.terms().begin()->second / lead;
                if ((base + c * pm).is_zero()) {
                    e.status = AdjudicationStatus::Repaired;
                    e.repair_component = i;
                    e.repaired_component = c * m;
                    e.note = "component " + std::to_string(i + 1) + " -> " +
                             e.repaired_component.str();
                    return e;
                }
            }
    }
    e.status = AdjudicationStatus::Refuted;
    e.note = "weighted divergence = " + w.str();
    return e;
}

}  // namespace

std::vector<Hp1Entry> adjudicate_hp1() {
    std::vector<Hp1Entry> out;
    auto add = [&](const std::string& name, std::array<ExactPolynomial3, 3> v, int k) {
        out.push_back(adjudicate_entry(name, v, k));
    };
    ExactPolynomial3 zero;
    // first-order block
    add("v11", {zero, -mono(0, 0, 1), mono(0, 1, 0)}, 1);
    add("v12", {mono(0, 0, 1), zero, -mono(1, 0, 0)}, 1);
    add("v13", {-mono(0, 1, 0), mono(1, 0, 0), zero}, 1);
    // second-order block
    add("v21",
        {mono(0, 0, 0, 4) - mono(0, 2, 0) - mono(0, 0, 2), mono(1, 1, 0), mono(1, 0, 1)},
        2);
    add("v22",
        {mono(1, 1, 0), mono(0, 0, 0, 4) - mono(2, 0, 0) - mono(0, 0, 2), mono(0, 1, 1)},
        2);
    add("v23",
        {mono(1, 0, 1), mono(0, 1, 1), mono(0, 0, 0, 4) - mono(2, 0, 0) - mono(0, 2, 0)},
        2);
    add("v24", {zero, mono(1, 0, 1), -mono(1, 1, 0)}, 2);
    add("v25", {-mono(0, 1, 1), zero, mono(1, 1, 0)}, 2);
    add("v26", {-mono(0, 1, 1), mono(0, 1, 1), mono(2, 0, 0) - mono(0, 2, 0)}, 2);
    add("v27", {mono(1, 1, 0), mono(0, 0, 2) - mono(2, 0, 0), -mono(0, 1, 1)}, 2);
    add("v28", {mono(0, 2, 0) - mono(0, 0, 2), -mono(1, 1, 0), mono(1, 0, 1)}, 2);
    // printed first-order asymptotic pattern (y3, y3, 0) * Gaussian
    add("v1-pattern", {mono(0, 0, 1), mono(0, 0, 1), zero}, 1);
    return out;
}

std::vector<GramEntry> gram_matrix(int k_max) {
    if (k_max < 0 || k_max > 6)
        throw std::invalid_argument("gram_matrix: k_max must be in [0,6]");
    std::vector<MultiIndex> all;
    for (int k = 0; k <= k_max; ++k)
        for (const auto& m : multiindices_of_order(k)) all.push_back(m);

    std::vector<ExactPolynomial3> hp(all.size());
    std::vector<HermiteMode> modes(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
        modes[i] = hermite_mode(all[i]);
        hp[i] = modes[i].polynomial;
    }

    std::vector<GramEntry> out;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            GramEntry e;
            e.beta = all[i];
            e.gamma = all[j];
            GaussianValue gv =
                gaussian_weighted_inner(hp[i], hp[j], GaussianWeight::Direct);
            e.raw = gv.coeff;
            e.exactly_zero = gv.is_zero();
            double cb = modes[i].normalization(), cg = modes[j].normalization();
            e.value = gv.value() * cb * cg;
            if (i == j) {
                Rational cb2(modes[i].norm_num * modes[i].norm_num,
                             modes[i].norm_radicand);
                cb2.canonicalize();
                e.normalized_diagonal = cb2 * e.raw;
            }
            out.push_back(e);
        }
    return out;
}

std::string solenoidal_basis_csv(int k_max) {
    std::ostringstream os;
    os << "k,mode_id,component,e1,e2,e3,numerator,denominator\n";
    for (int k = 1; k <= k_max; ++k) {
        auto basis = solenoidal_basis(k);
        for (size_t id = 0; id < basis.size(); ++id)
            for (int comp = 0; comp < 3; ++comp)
                for (const auto& [m, c] : basis[id].components[static_cast<size_t>(comp)].terms())
                    os << k << "," << id << "," << comp + 1 << "," << m[0] << ","
                       << m[1] << "," << m[2] << "," << c.get_num().get_str() << ","
                       << c.get_den().get_str() << "\n";
    }
    return os.str();
}

}  // namespace singlab
