#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "representation.hpp"

namespace superpoisson {

namespace detail {

inline void check_operator_shape(const LinearMap& t, const Representation& r) {
    if (!(t.domain() == r.module()))
        throw SpaceMismatch("operator domain must be the representation's module");
    if (!(t.codomain() == r.algebra().space()))
        throw SpaceMismatch("operator codomain must be the algebra");
}

} // namespace detail

/// T: V → P is an O-operator for (V; L, R, rho) when, for all basis v, w,
///   T(v)·T(w)  = T((-1)^{(|T|+|v|)|T|} L_{T(v)} w + (-1)^{|v|(|T|+|w|)} R_{T(w)} v)
///   [T(v),T(w)] = T((-1)^{(|T|+|v|)|T|} rho(T(v)) w - (-1)^{|v|(|T|+|w|)} rho(T(w)) v).
/// Witness indices are (v, w); defects live in P.
inline DefectReport verify_o_operator(const LinearMap& t, const Representation& r) {
    using F = Representation::Family;
    detail::check_operator_shape(t, r);
    const auto& p = r.algebra();
    const auto& v = r.module();
    const Parity pt = t.parity();
    const std::size_t m = v.dim();
    DefectReport rep{"O-operator", {}};

    std::vector<Coefficients> images(m);
    std::vector<Matrix> left_of(m), right_of(m), rho_of(m);
    for (std::size_t i = 0; i < m; ++i) {
        images[i] = t.image_of_basis(i);
        left_of[i] = r.combine(F::left, images[i]);
        right_of[i] = r.combine(F::right, images[i]);
        rho_of[i] = r.combine(F::rho, images[i]);
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const Parity pa = v.parity(a), pb = v.parity(b);
            const int s1 = koszul_sign(pt + pa, pt);
            const int s2 = koszul_sign(pa, pt + pb);
            const auto ew = left_of[a].column(b);
            const auto ev = right_of[b].column(a);
            Coefficients inner(m);
            for (std::size_t k = 0; k < m; ++k)
                inner[k] = s1 * ew[k] + s2 * ev[k];
            auto lhs = p.multiply(images[a], images[b]);
            auto rhs = t.matrix() * std::span<const Scalar>(inner);
            rep.add("product equation", {a, b}, detail::axpy(std::move(lhs), -1, rhs));

            const auto rw = rho_of[a].column(b);
            const auto rv = rho_of[b].column(a);
            for (std::size_t k = 0; k < m; ++k)
                inner[k] = s1 * rw[k] - s2 * rv[k];
            auto lhs2 = p.bracket(images[a], images[b]);
            auto rhs2 = t.matrix() * std::span<const Scalar>(inner);
            rep.add("bracket equation", {a, b}, detail::axpy(std::move(lhs2), -1, rhs2));
        }
    return rep;
}

inline bool is_o_operator(const LinearMap& t, const Representation& r) { return verify_o_operator(t, r).holds(); }

struct OOperator {
    LinearMap map;
    Representation rep;
    bool verified;
};

inline OOperator make_o_operator(LinearMap t, Representation r) {
    const bool ok = is_o_operator(t, r);
    return {std::move(t), std::move(r), ok};
}

/// Weight-zero Rota–Baxter operator: an O-operator for the regular representation.
inline DefectReport verify_rota_baxter(const LinearMap& b, const SuperAlgebra& p) {
    auto rep = verify_o_operator(b, regular_rep(p));
    rep.axiom = "Rota-Baxter";
    return rep;
}

/// T∘φ for an O-operator T of φ's target; the result is an O-operator of φ's source.
inline LinearMap transport(const LinearMap& t, const RepIsomorphism& phi) {
    if (!verify_rep_isomorphism(phi.map, phi.source, phi.target).holds())
        throw PreconditionFailed("transport needs a verified representation isomorphism");
    if (!is_o_operator(t, phi.target))
        throw PreconditionFailed("transport needs an O-operator of the isomorphism's target");
    return compose(t, phi.map);
}

/// T^s: sV → P, T^s(su) = T(u), of parity |T| + 1. The matrix is unchanged.
inline LinearMap suspend_operator(const LinearMap& t) {
    return t.reinterpret(parity_shift(t.domain()), t.codomain(), t.parity() + Parity::odd);
}

inline LinearMap suspend_operator(const LinearMap& t, const Representation& r) {
    detail::check_operator_shape(t, r);
    return suspend_operator(t);
}

/// T^s∘φ for an even O-operator T of a self-reversing representation, where
/// φ: V → sV is an isomorphism onto the parity-reversed representation. The
/// result is an odd O-operator of the source of φ.
inline LinearMap odd_from_even(const LinearMap& t, const RepIsomorphism& phi) {
    if (t.parity() != Parity::even)
        throw PreconditionFailed("expected an even operator");
    if (!(phi.target == parity_reversed_rep(phi.source)))
        throw PreconditionFailed("isomorphism must target the parity-reversed representation");
    if (!is_o_operator(t, phi.source))
        throw PreconditionFailed("map is not an O-operator of the representation");
    return transport(suspend_operator(t), phi);
}

/// Same dimensions and parities: the identification s(sV) = V used when
/// comparing double suspensions.
inline bool identified(const GradedSpace& a, const GradedSpace& b) {
    return a.dim() == b.dim() && a.parities() == b.parities();
}

class BilinearForm {
  public:
    BilinearForm(GradedSpace space, Matrix matrix) : space_(std::move(space)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
            throw SpaceMismatch("form matrix does not match the space");
    }

    const GradedSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

    Scalar operator()(const Coefficients& u, const Coefficients& v) const {
        Scalar s = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0)
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (v[j] != 0)
                        s += u[i] * matrix_(i, j) * v[j];
        return s;
    }

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

  private:
    GradedSpace space_;
    Matrix matrix_;
};

struct CocycleDefects {
    DefectReport product;  ///< B(x·y,z) = B(x,y·z) - (-1)^{(|x|+|y|)|z|} B(z·x,y)
    DefectReport bracket;  ///< B([x,y],z) = B(x,[y,z]) + (-1)^{|y||z|} B([x,z],y)
    bool holds() const { return product.holds() && bracket.holds(); }
};

inline CocycleDefects cocycle_defects(const SuperAlgebra& p, const BilinearForm& b) {
    if (!(b.space() == p.space()))
        throw SpaceMismatch("form and algebra live on different spaces");
    CocycleDefects out{{"2-cocycle product identity", {}}, {"2-cocycle bracket identity", {}}};
    const std::size_t n = p.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto x = detail::unit(n, i), y = detail::unit(n, j), z = detail::unit(n, k);
                const auto pi = p.parity(i), pj = p.parity(j), pk = p.parity(k);
                Scalar d1 = b(p.product_of_basis(i, j), z) - b(x, p.product_of_basis(j, k)) +
                            koszul_sign(pi + pj, pk) * b(p.product_of_basis(k, i), y);
                out.product.add("product identity", {i, j, k}, {d1});
                Scalar d2 = b(p.bracket_of_basis(i, j), z) - b(x, p.bracket_of_basis(j, k)) -
                            koszul_sign(pj, pk) * b(p.bracket_of_basis(i, k), y);
                out.bracket.add("bracket identity", {i, j, k}, {d2});
            }
    return out;
}

/// B(x·y,z) = B(x,y·z) and B([x,y],z) = B(x,[y,z]).
inline DefectReport verify_invariance(const SuperAlgebra& p, const BilinearForm& b) {
    if (!(b.space() == p.space()))
        throw SpaceMismatch("form and algebra live on different spaces");
    DefectReport rep{"invariance", {}};
    const std::size_t n = p.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto x = detail::unit(n, i), z = detail::unit(n, k);
                rep.add("product invariance", {i, j, k},
                        {b(p.product_of_basis(i, j), z) - b(x, p.product_of_basis(j, k))});
                rep.add("bracket invariance", {i, j, k},
                        {b(p.bracket_of_basis(i, j), z) - b(x, p.bracket_of_basis(j, k))});
            }
    return rep;
}

struct FormClassification {
    bool even = false;
    bool odd = false;
    bool supersymmetric = false;
    bool skew_supersymmetric = false;
    bool non_degenerate = false;
    std::optional<bool> invariant;  ///< set only when an algebra was supplied
    std::optional<bool> cocycle;    ///< skew-supersymmetric and both cocycle identities
};

inline FormClassification classify_form(const BilinearForm& b) {
    const auto& s = b.space();
    FormClassification c;
    c.even = c.odd = c.supersymmetric = c.skew_supersymmetric = true;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            const bool same = s.parity(i) == s.parity(j);
            if (b(i, j) != 0)
                (same ? c.odd : c.even) = false;
            const int k = koszul_sign(s.parity(i), s.parity(j));
            if (b(i, j) != k * b(j, i))
                c.supersymmetric = false;
            if (b(i, j) != -k * b(j, i))
                c.skew_supersymmetric = false;
        }
    c.non_degenerate = is_invertible(b.matrix());
    return c;
}

inline FormClassification classify_form(const BilinearForm& b, const SuperAlgebra& p) {
    auto c = classify_form(b);
    c.invariant = verify_invariance(p, b).holds();
    c.cocycle = c.skew_supersymmetric && cocycle_defects(p, b).holds();
    return c;
}

/// φ: P → P* with ⟨φ(x), y⟩ = B(x, y). The form must be even or odd.
inline LinearMap form_to_map(const BilinearForm& b) {
    const auto c = classify_form(b);
    if (!c.even && !c.odd)
        throw PreconditionFailed("form is neither even nor odd; the induced map is not homogeneous");
    return {b.space(), dual_space(b.space()), c.even ? Parity::even : Parity::odd, b.matrix().transpose()};
}

/// Rota–Baxter operator T∘φ built from an O-operator T of the co-regular
/// representation and a non-degenerate even invariant form.
inline LinearMap rota_baxter_from_o_operator(const LinearMap& t, const BilinearForm& b, const SuperAlgebra& p) {
    const auto c = classify_form(b, p);
    if (!c.even || !c.non_degenerate || !*c.invariant)
        throw PreconditionFailed("need a non-degenerate even invariant bilinear form");
    if (!is_o_operator(t, coregular_rep(p)))
        throw PreconditionFailed("map is not an O-operator of the co-regular representation");
    return compose(t, form_to_map(b));
}

/// Converse direction: B∘φ⁻¹ for a Rota–Baxter operator B.
inline LinearMap o_operator_from_rota_baxter(const LinearMap& rb, const BilinearForm& b, const SuperAlgebra& p) {
    const auto c = classify_form(b, p);
    if (!c.even || !c.non_degenerate || !*c.invariant)
        throw PreconditionFailed("need a non-degenerate even invariant bilinear form");
    if (!verify_rota_baxter(rb, p).holds())
        throw PreconditionFailed("map is not a Rota-Baxter operator");
    const LinearMap phi = form_to_map(b);
    LinearMap phi_inv(phi.codomain(), phi.domain(), Parity::even, *inverse(phi.matrix()));
    return compose(rb, phi_inv);
}

/// Exact basis of the invariant forms of the given parity.
inline std::vector<BilinearForm> find_invariant_forms(const SuperAlgebra& p, Parity parity) {
    const std::size_t n = p.dim();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.parity(i) + p.parity(j) == parity)
                unknowns.emplace_back(i, j);

    // B(e_i·e_j, e_k) - B(e_i, e_j·e_k) and the bracket analogue, linear in B.
    std::vector<Coefficients> rows;
    auto emit = [&](const Coefficients& left_arg, std::size_t k, std::size_t i, const Coefficients& right_arg) {
        Coefficients row(unknowns.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto [a, b] = unknowns[u];
            if (b == k)
                row[u] += left_arg[a];
            if (a == i)
                row[u] -= right_arg[b];
        }
        if (!coefficients_zero(row))
            rows.push_back(std::move(row));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                emit(p.product_of_basis(i, j), k, i, p.product_of_basis(j, k));
                emit(p.bracket_of_basis(i, j), k, i, p.bracket_of_basis(j, k));
            }

    std::vector<Coefficients> basis;
    if (rows.empty())
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            basis.push_back(detail::unit(unknowns.size(), u));
    else
        basis = nullspace(Matrix::from_rows(rows));

    std::vector<BilinearForm> forms;
    for (const auto& v : basis) {
        Matrix m(n, n);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            m(unknowns[u].first, unknowns[u].second) = v[u];
        forms.emplace_back(p.space(), std::move(m));
    }
    return forms;
}

struct FormSearch {
    SearchStatus status;
    std::optional<BilinearForm> form;
};

/// First non-degenerate combination of `basis` with coefficients from
/// `grid`. A zero-dimensional basis is an exact negative.
inline FormSearch find_nondegenerate(const std::vector<BilinearForm>& basis, const std::vector<Scalar>& grid) {
    if (basis.empty())
        return {SearchStatus::none_exact, std::nullopt};
    if (basis.size() > kIsomorphismSearchCap)
        return {SearchStatus::undetermined, std::nullopt};
    FormSearch out{SearchStatus::none_in_grid, std::nullopt};
    const auto& space = basis.front().space();
    detail::for_each_combination(basis.size(), grid, [&](const std::vector<Scalar>& c) {
        Matrix m(space.dim(), space.dim());
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0)
                m += c[k] * basis[k].matrix();
        if (!is_invertible(m))
            return false;
        out = {SearchStatus::found, BilinearForm(space, std::move(m))};
        return true;
    });
    return out;
}

inline constexpr std::size_t kOperatorSearchMaxDim = 4;
inline constexpr std::size_t kOperatorSearchMaxCandidates = 2'000'000;

/// Every homogeneous map V → P of the given parity whose free entries lie in
/// `grid` and which satisfies the O-operator equations, in lexicographic
/// order of the free entries (row-major) over the grid as given.
inline std::vector<LinearMap> search_o_operators(const Representation& r, Parity parity,
                                                 const std::vector<Scalar>& grid,
                                                 std::size_t max_dim = kOperatorSearchMaxDim) {
    const auto& v = r.module();
    const auto& p = r.algebra().space();
    if (v.dim() > max_dim)
        throw PreconditionFailed("module dimension " + std::to_string(v.dim()) + " exceeds the search cap " +
                                 std::to_string(max_dim));
    if (grid.empty())
        throw Error("search grid is empty");
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t a = 0; a < v.dim(); ++a)
            if (p.parity(i) == v.parity(a) + parity)
                free.emplace_back(i, a);
    double candidates = 1;
    for (std::size_t k = 0; k < free.size(); ++k)
        candidates *= static_cast<double>(grid.size());
    if (candidates > static_cast<double>(kOperatorSearchMaxCandidates))
        throw PreconditionFailed("operator search would enumerate too many candidates");

    std::vector<LinearMap> found;
    std::vector<std::size_t> digit(free.size(), 0);
    while (true) {
        Matrix m(p.dim(), v.dim());
        for (std::size_t k = 0; k < free.size(); ++k)
            m(free[k].first, free[k].second) = grid[digit[k]];
        LinearMap t(v, p, parity, std::move(m));
        if (is_o_operator(t, r))
            found.push_back(std::move(t));
        std::size_t pos = free.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < grid.size()) {
                done = false;
                break;
            }
            digit[pos] = 0;
        }
        if (done)
            break;
    }
    return found;
}

} // namespace superpoisson
