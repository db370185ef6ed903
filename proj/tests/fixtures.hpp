#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "superpoisson/superpoisson.hpp"

namespace fixtures {

using namespace superpoisson;

inline const std::vector<Scalar> kGrid{-1, 0, 1};

inline SuperAlgebra family2() { return family_1dim1(2, 1); }

inline Representation family2_coregular() { return coregular_rep(family2()); }

// T0(y*) = y.
inline LinearMap t0() {
    const auto co = family2_coregular();
    Matrix m(2, 2);
    m(1, 1) = 1;
    return {co.module(), co.algebra().space(), Parity::even, std::move(m)};
}

// T1(x*) = y, T1(y*) = -x.
inline LinearMap t1() {
    const auto co = family2_coregular();
    Matrix m(2, 2);
    m(0, 1) = -1;
    m(1, 0) = 1;
    return {co.module(), co.algebra().space(), Parity::odd, std::move(m)};
}

inline TensorElement y_tensor_y() {
    TensorElement r(family2().space(), Parity::even);
    r.add("y", "y", 1);
    return r;
}

inline TensorElement xy_plus_yx() {
    TensorElement r(family2().space(), Parity::odd);
    r.add("x", "y", 1).add("y", "x", 1);
    return r;
}

inline Matrix diag_signs(const GradedSpace& v) {
    Matrix m(v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        m(i, i) = parity_sign(v.parity(i));
    return m;
}

// θ: V** → V, vᵢ** ↦ (-1)^{|vᵢ|} vᵢ.
inline RepIsomorphism double_dual_iso(const Representation& r) {
    const auto dd = dual_rep(dual_rep(r));
    return {LinearMap(dd.module(), r.module(), Parity::even, diag_signs(r.module())), dd, r};
}

// φ: sV* → (sV)* with the same signs.
inline RepIsomorphism shifted_dual_iso(const Representation& r) {
    const auto src = parity_reversed_rep(dual_rep(r));
    const auto tgt = dual_rep(parity_reversed_rep(r));
    return {LinearMap(src.module(), tgt.module(), Parity::even, diag_signs(r.module())), src, tgt};
}

// id ⊕ φ between the semi-direct products, checked on all basis pairs.
inline bool extension_intertwines(const RepIsomorphism& iso) {
    const SuperAlgebra s1 = semidirect_product(iso.source);
    const SuperAlgebra s2 = semidirect_product(iso.target);
    const std::size_t n = iso.source.algebra().dim(), m = iso.source.module().dim();
    Matrix ext(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        ext(i, i) = 1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            ext(n + a, n + b) = iso.map.matrix()(a, b);
    for (std::size_t i = 0; i < n + m; ++i)
        for (std::size_t j = 0; j < n + m; ++j) {
            const auto ei = ext.column(i), ej = ext.column(j);
            if (ext * std::span<const Scalar>(s1.product_of_basis(i, j)) != s2.multiply(ei, ej))
                return false;
            if (ext * std::span<const Scalar>(s1.bracket_of_basis(i, j)) != s2.bracket(ei, ej))
                return false;
        }
    return true;
}

// One displayed expansion of U∘W for r = Σ xᵢ⊗yᵢ. Factors are {term, leg}
// with term 0 = i (from U), 1 = j (from W) and leg 0 = x, 1 = y; a slot with
// two factors holds their product or bracket in the listed order.
struct Display {
    std::string name;
    Leg u, w;
    LegOp op;
    std::array<std::vector<Factor>, 3> slots;
    std::function<int(int xi, int yi, int xj, int yj)> exponent;
};

inline std::vector<Display> displayed_expansions() {
    const Factor xi{0, 0}, yi{0, 1}, xj{1, 0}, yj{1, 1};
    auto a = [](int, int y_i, int x_j, int y_j) { return y_i * (x_j + y_j); };
    auto b = [](int, int, int, int) { return 0; };
    auto c = [](int x_i, int y_i, int x_j, int) { return x_j * (x_i + y_i); };
    auto d = [](int x_i, int y_i, int x_j, int y_j) { return x_i * x_j + y_i * (x_j + y_j); };
    return {
        {"r13.r12", Leg::l13, Leg::l12, LegOp::product, {{{xi, xj}, {yj}, {yi}}}, a},
        {"r12.r23", Leg::l12, Leg::l23, LegOp::product, {{{xi}, {yi, xj}, {yj}}}, b},
        {"r23.r13", Leg::l23, Leg::l13, LegOp::product, {{{xj}, {xi}, {yi, yj}}}, c},
        {"[r13,r12]", Leg::l13, Leg::l12, LegOp::bracket, {{{xi, xj}, {yj}, {yi}}}, a},
        {"[r23,r13]", Leg::l23, Leg::l13, LegOp::bracket, {{{xj}, {xi}, {yi, yj}}}, c},
        {"[r23,r12]", Leg::l23, Leg::l12, LegOp::bracket, {{{xj}, {xi, yj}, {yi}}}, d},
    };
}

inline int display_sign(const Display& d, const std::array<Parity, 4>& p) {
    auto v = [&](std::size_t k) { return p[k] == Parity::odd ? 1 : 0; };
    return d.exponent(v(0), v(1), v(2), v(3)) % 2 ? -1 : 1;
}

// The displayed formula evaluated literally on the basis terms of r.
inline TripleTensor expand_display(const SuperAlgebra& p, const TensorElement& r, const Display& d) {
    const std::size_t n = p.dim();
    TripleTensor out(p.space());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e) {
                    const Scalar coef = r(a, b) * r(c, e);
                    if (coef == 0)
                        continue;
                    const std::array<std::size_t, 4> idx{a, b, c, e};
                    const std::array<Parity, 4> par{p.parity(a), p.parity(b), p.parity(c), p.parity(e)};
                    std::array<Coefficients, 3> slot;
                    for (std::size_t s = 0; s < 3; ++s) {
                        const auto& f = d.slots[s];
                        const std::size_t i0 = idx[2 * f[0].operand + f[0].index];
                        if (f.size() == 1) {
                            slot[s] = Coefficients(n);
                            slot[s][i0] = 1;
                        } else {
                            const std::size_t i1 = idx[2 * f[1].operand + f[1].index];
                            slot[s] = d.op == LegOp::product ? p.product_of_basis(i0, i1) : p.bracket_of_basis(i0, i1);
                        }
                    }
                    const Scalar k = coef * display_sign(d, par);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            for (std::size_t l = 0; l < n; ++l)
                                out(i, j, l) += k * slot[0][i] * slot[1][j] * slot[2][l];
                }
    return out;
}

inline std::array<Parity, 4> parity_pattern(unsigned bits) {
    std::array<Parity, 4> p{};
    for (std::size_t k = 0; k < 4; ++k)
        p[k] = (bits >> k) & 1u ? Parity::odd : Parity::even;
    return p;
}

// Every tensor on the space with entries in the grid, both parities.
inline std::vector<TensorElement> grid_tensors(const GradedSpace& s, const std::vector<Scalar>& grid) {
    std::vector<TensorElement> out;
    for (Parity par : {Parity::even, Parity::odd})
        for (const auto& m : grid_maps(s, s, par, grid))
            out.emplace_back(s, par, m.matrix());
    return out;
}

} // namespace fixtures
