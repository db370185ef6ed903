#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "o_operators.hpp"

namespace superpoisson {

/// Placement of r = Σ xᵢ⊗yᵢ inside a triple tensor, with 1 in the free slot.
enum class Leg { l12, l13, l23 };

inline std::string to_string(Leg l) {
    switch (l) {
    case Leg::l12: return "r12";
    case Leg::l13: return "r13";
    case Leg::l23: return "r23";
    }
    return "?";
}

/// A tensor factor of one operand: operand 0 is the left factor U of U∘W,
/// operand 1 the right factor W; index 0 is x, index 1 is y.
struct Factor {
    int operand;
    int index;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Result of multiplying two legs slot by slot. A slot holding two factors
/// carries their product (or bracket), left operand first. The Koszul sign
/// is the product of (-1)^{|a||b|} over `crossings`: every factor of U
/// standing to the right of a factor of W has to move past it.
struct LegLayout {
    std::array<std::vector<Factor>, 3> slots;
    std::vector<std::pair<Factor, Factor>> crossings;
};

inline std::array<int, 3> leg_slots(Leg l) {
    switch (l) {
    case Leg::l12: return {0, 1, -1};
    case Leg::l13: return {0, -1, 1};
    case Leg::l23: return {-1, 0, 1};
    }
    return {-1, -1, -1};
}

inline LegLayout leg_layout(Leg u, Leg w) {
    const auto su = leg_slots(u), sw = leg_slots(w);
    LegLayout out;
    for (std::size_t k = 0; k < 3; ++k) {
        if (su[k] >= 0)
            out.slots[k].push_back({0, su[k]});
        if (sw[k] >= 0)
            out.slots[k].push_back({1, sw[k]});
    }
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < k; ++l)
            if (su[k] >= 0 && sw[l] >= 0)
                out.crossings.push_back({{0, su[k]}, {1, sw[l]}});
    return out;
}

/// `parity[2*operand + index]` gives the parity of each factor.
inline int layout_sign(const LegLayout& layout, const std::array<Parity, 4>& parity) {
    int s = 1;
    for (const auto& [a, b] : layout.crossings)
        s *= koszul_sign(parity[2 * a.operand + a.index], parity[2 * b.operand + b.index]);
    return s;
}

enum class LegOp { product, bracket };

namespace detail {

inline void check_tensor_space(const SuperAlgebra& p, const TensorElement& r) {
    if (!(r.space() == p.space()))
        throw SpaceMismatch("tensor does not live on the algebra");
}

} // namespace detail

/// out += factor · (r_u ∘ r_w), with ∘ the product or the bracket in the
/// shared slot.
inline void accumulate_leg_product(TripleTensor& out, const SuperAlgebra& p, const TensorElement& r, Leg u, Leg w,
                                   LegOp op, const Scalar& factor) {
    detail::check_tensor_space(p, r);
    const auto layout = leg_layout(u, w);
    const std::size_t n = p.dim();
    std::vector<std::pair<std::size_t, std::size_t>> terms;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (r(a, b) != 0)
                terms.emplace_back(a, b);

    for (const auto& [xi, yi] : terms)
        for (const auto& [xj, yj] : terms) {
            const std::array<std::size_t, 4> idx{xi, yi, xj, yj};
            const std::array<Parity, 4> par{p.parity(xi), p.parity(yi), p.parity(xj), p.parity(yj)};
            const Scalar coeff = factor * layout_sign(layout, par) * r(xi, yi) * r(xj, yj);
            std::array<std::size_t, 3> pos{};
            std::size_t shared = 3;
            Coefficients combined;
            for (std::size_t k = 0; k < 3; ++k) {
                const auto& f = layout.slots[k];
                if (f.size() == 1) {
                    pos[k] = idx[2 * f[0].operand + f[0].index];
                } else {
                    shared = k;
                    const auto left = idx[2 * f[0].operand + f[0].index];
                    const auto right = idx[2 * f[1].operand + f[1].index];
                    combined = op == LegOp::product ? p.product_of_basis(left, right) : p.bracket_of_basis(left, right);
                }
            }
            if (shared == 3)
                throw Error("legs share no slot");
            for (std::size_t c = 0; c < n; ++c) {
                if (combined[c] == 0)
                    continue;
                pos[shared] = c;
                out(pos[0], pos[1], pos[2]) += coeff * combined[c];
            }
        }
}

inline TripleTensor leg_product(const SuperAlgebra& p, const TensorElement& r, Leg u, Leg w, LegOp op) {
    TripleTensor out(p.space());
    accumulate_leg_product(out, p, r, u, w, op, 1);
    return out;
}

/// A(r) = r13·r12 - (-1)^{|r|} r12·r23 + r23·r13.
inline TripleTensor aybe_defect(const SuperAlgebra& p, const TensorElement& r) {
    TripleTensor out(p.space());
    accumulate_leg_product(out, p, r, Leg::l13, Leg::l12, LegOp::product, 1);
    accumulate_leg_product(out, p, r, Leg::l12, Leg::l23, LegOp::product, -parity_sign(r.parity()));
    accumulate_leg_product(out, p, r, Leg::l23, Leg::l13, LegOp::product, 1);
    return out;
}

/// C(r) = [r12,r13] + [r12,r23] + [r13,r23].
inline TripleTensor cybe_defect(const SuperAlgebra& p, const TensorElement& r) {
    TripleTensor out(p.space());
    accumulate_leg_product(out, p, r, Leg::l12, Leg::l13, LegOp::bracket, 1);
    accumulate_leg_product(out, p, r, Leg::l12, Leg::l23, LegOp::bracket, 1);
    accumulate_leg_product(out, p, r, Leg::l13, Leg::l23, LegOp::bracket, 1);
    return out;
}

struct PybeReport {
    TripleTensor aybe_defect;
    TripleTensor cybe_defect;
    bool is_solution;
};

inline PybeReport check_pybe(const SuperAlgebra& p, const TensorElement& r) {
    auto a = aybe_defect(p, r);
    auto c = cybe_defect(p, r);
    const bool ok = a.is_zero() && c.is_zero();
    return {std::move(a), std::move(c), ok};
}

/// T_r: V* → V with T_r(e_b*) = Σ_a (-1)^{|e_b|} t^{ab} e_a.
inline LinearMap tensor_to_map(const TensorElement& r) {
    const auto& s = r.space();
    Matrix m(s.dim(), s.dim());
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b)
            if (r(a, b) != 0)
                m(a, b) = parity_sign(s.parity(b)) * r(a, b);
    return {dual_space(s), s, r.parity(), std::move(m)};
}

/// Inverse of tensor_to_map for maps V* → V.
inline TensorElement map_to_tensor(const LinearMap& t) {
    const auto& s = t.codomain();
    if (!(t.domain() == dual_space(s)))
        throw SpaceMismatch("expected a map from the dual space to the space");
    Matrix m(s.dim(), s.dim());
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b)
            if (t.matrix()(a, b) != 0)
                m(a, b) = parity_sign(s.parity(b)) * t.matrix()(a, b);
    return {s, t.parity(), std::move(m)};
}

/// ⟨w*, T_r(v*)⟩ = -(-1)^{|r|+|r||w*|} ⟨T_r(w*), v*⟩ on all dual basis pairs,
/// with ⟨x, ξ⟩ = (-1)^{|x||ξ|} ⟨ξ, x⟩. Equivalent to σ(r) = -(-1)^{|r|} r.
inline bool satisfies_pairing_criterion(const TensorElement& r) {
    const auto& s = r.space();
    const auto m = tensor_to_map(r).matrix();
    for (std::size_t w = 0; w < s.dim(); ++w)
        for (std::size_t v = 0; v < s.dim(); ++v) {
            const Scalar rhs =
                -parity_sign(r.parity()) * koszul_sign(r.parity(), s.parity(w)) * parity_sign(s.parity(v)) * m(v, w);
            if (m(w, v) != rhs)
                return false;
        }
    return true;
}

struct TheoremTrDiagnostic {
    bool pybe_solution;
    bool o_operator;
    bool agree() const { return pybe_solution == o_operator; }
};

/// Both sides of the PYBE / co-regular O-operator equivalence, computed
/// independently.
inline TheoremTrDiagnostic check_theorem_tr(const SuperAlgebra& p, const TensorElement& r) {
    detail::check_tensor_space(p, r);
    if (!is_coherent(p))
        throw PreconditionFailed("algebra is not coherent");
    if (!is_graded_skew(r))
        throw PreconditionFailed("tensor does not satisfy sigma(r) = -(-1)^{|r|} r");
    return {check_pybe(p, r).is_solution, is_o_operator(tensor_to_map(r), coregular_rep(p))};
}

/// B(x, y) = ⟨T_r⁻¹(x), y⟩.
inline BilinearForm form_from_tensor(const SuperAlgebra& p, const TensorElement& r) {
    detail::check_tensor_space(p, r);
    const auto inv = inverse(tensor_to_map(r).matrix());
    if (!inv)
        throw PreconditionFailed("tensor is degenerate");
    return {p.space(), inv->transpose()};
}

/// The tensor whose T_r is the inverse of x ↦ B(x, -).
inline TensorElement tensor_from_form(const BilinearForm& b) {
    const LinearMap phi = form_to_map(b);
    const auto inv = inverse(phi.matrix());
    if (!inv)
        throw PreconditionFailed("form is degenerate");
    return map_to_tensor(LinearMap(phi.codomain(), phi.domain(), phi.parity(), *inv));
}

struct SolutionBundle {
    OOperator op;
    SuperAlgebra ambient;
    TensorElement tensor;
    PybeReport report;
};

/// The semi-direct product P ⋉ V* built on the dual representation.
inline SuperAlgebra solution_ambient(const SuperAlgebra& p, const Representation& r) {
    if (!(r.algebra() == p))
        throw SpaceMismatch("representation is over a different algebra");
    if (!is_coherent(p))
        throw PreconditionFailed("algebra is not coherent");
    return semidirect_product(dual_rep(r));
}

/// T as Σ T(vᵢ)⊗vᵢ* inside the ambient algebra.
inline TensorElement embed_operator(const SuperAlgebra& ambient, const LinearMap& t) {
    const std::size_t n = t.codomain().dim();
    Matrix m(ambient.dim(), ambient.dim());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < t.domain().dim(); ++i)
            m(a, n + i) = t.matrix()(a, i);
    return {ambient.space(), t.parity(), std::move(m)};
}

/// r = T - (-1)^{|T|} σ(T) in P ⋉ V*, with its PYBE report.
inline SolutionBundle build_solution(const SuperAlgebra& p, const Representation& r, const LinearMap& t) {
    detail::check_operator_shape(t, r);
    SuperAlgebra ambient = solution_ambient(p, r);
    const TensorElement te = embed_operator(ambient, t);
    TensorElement tensor(ambient.space(), t.parity(),
                         te.coefficients() - parity_sign(t.parity()) * twist(te).coefficients());
    auto report = check_pybe(ambient, tensor);
    return {make_o_operator(t, r), std::move(ambient), std::move(tensor), std::move(report)};
}

struct CorollaryVerdicts {
    bool o_operator;            ///< T for R
    bool suspended_o_operator;  ///< T^s for the parity-reversed R
    bool solution;              ///< r built from T in P ⋉ V*
    bool suspended_solution;    ///< r^s built from T^s in P ⋉ (sV)*
    bool agree() const {
        return o_operator == suspended_o_operator && o_operator == solution && o_operator == suspended_solution;
    }
};

inline CorollaryVerdicts corollary_pipeline(const SuperAlgebra& p, const Representation& r, const LinearMap& t) {
    const Representation rs = parity_reversed_rep(r);
    const LinearMap ts = suspend_operator(t, r);
    return {is_o_operator(t, r), is_o_operator(ts, rs), build_solution(p, r, t).report.is_solution,
            build_solution(p, rs, ts).report.is_solution};
}

} // namespace superpoisson
