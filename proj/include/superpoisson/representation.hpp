#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superalgebra.hpp"

namespace superpoisson {

/// (V; L, R, rho): for every algebra basis element e_i three matrices on V,
/// each homogeneous of parity |e_i|. Nothing beyond shape and homogeneity is
/// checked on construction; see verify_representation.
class Representation {
  public:
    enum class Family { left, right, rho };

    Representation(SuperAlgebra algebra, GradedSpace module, std::vector<Matrix> left, std::vector<Matrix> right,
                   std::vector<Matrix> rho)
        : algebra_(std::move(algebra)), module_(std::move(module)),
          maps_{std::move(left), std::move(right), std::move(rho)} {
        static constexpr std::array<const char*, 3> names{"L", "R", "rho"};
        for (std::size_t f = 0; f < 3; ++f) {
            if (maps_[f].size() != algebra_.dim())
                throw SpaceMismatch(std::string(names[f]) + " needs one matrix per algebra basis element");
            for (std::size_t x = 0; x < algebra_.dim(); ++x) {
                const Matrix& m = maps_[f][x];
                if (m.rows() != module_.dim() || m.cols() != module_.dim())
                    throw SpaceMismatch(std::string(names[f]) + "(" + algebra_.space().name(x) +
                                        ") has the wrong shape");
                for (std::size_t a = 0; a < m.rows(); ++a)
                    for (std::size_t b = 0; b < m.cols(); ++b)
                        if (m(a, b) != 0 && module_.parity(a) != module_.parity(b) + algebra_.parity(x))
                            throw Error(std::string(names[f]) + "(" + algebra_.space().name(x) +
                                        ") is not homogeneous at (" + module_.name(a) + ", " + module_.name(b) +
                                        ")");
            }
        }
    }

    /// All-zero action of `algebra` on `module`.
    static Representation zero(const SuperAlgebra& algebra, const GradedSpace& module) {
        std::vector<Matrix> z(algebra.dim(), Matrix(module.dim(), module.dim()));
        return {algebra, module, z, z, z};
    }

    const SuperAlgebra& algebra() const noexcept { return algebra_; }
    const GradedSpace& module() const noexcept { return module_; }

    const std::vector<Matrix>& family(Family f) const { return maps_[static_cast<std::size_t>(f)]; }
    const Matrix& left(std::size_t x) const { return maps_[0][x]; }
    const Matrix& right(std::size_t x) const { return maps_[1][x]; }
    const Matrix& rho(std::size_t x) const { return maps_[2][x]; }

    /// Linear extension Σ x_i M(e_i).
    Matrix combine(Family f, const Coefficients& x) const {
        Matrix out(module_.dim(), module_.dim());
        const auto& fam = family(f);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0)
                out += x[i] * fam[i];
        return out;
    }

    friend bool operator==(const Representation&, const Representation&) = default;

  private:
    SuperAlgebra algebra_;
    GradedSpace module_;
    std::array<std::vector<Matrix>, 3> maps_;
};

inline const char* family_name(Representation::Family f) {
    switch (f) {
    case Representation::Family::left: return "L";
    case Representation::Family::right: return "R";
    case Representation::Family::rho: return "rho";
    }
    return "?";
}

namespace detail {

inline void add_matrix_defect(DefectReport& rep, const std::string& law, std::size_t x, std::size_t y,
                              const Matrix& defect) {
    for (std::size_t v = 0; v < defect.cols(); ++v) {
        auto col = defect.column(v);
        rep.add(law, {x, y, v}, std::move(col));
    }
}

} // namespace detail

/// Checks, for all basis pairs (x, y):
///   L_{x·y} = L_x L_y,  R_{x·y} = (-1)^{|x||y|} R_y R_x,  R_y L_x = (-1)^{|x||y|} L_x R_y,
///   rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x),
///   L_{[x,y]} = rho(x)L_y - (-1)^{|x||y|} L_y rho(x),
///   R_{[x,y]} = rho(x)R_y - (-1)^{|x||y|} R_y rho(x),
///   rho(x·y)  = L_x rho(y) + (-1)^{|x||y|} R_y rho(x).
/// Witness indices are (x, y, v) with the defect column at module basis v.
inline DefectReport verify_representation(const Representation& r) {
    using F = Representation::Family;
    DefectReport rep{"representation", {}};
    const auto& a = r.algebra();
    const std::size_t n = a.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Scalar s = koszul_sign(a.parity(x), a.parity(y));
            const auto xy = a.product_of_basis(x, y);
            const auto bxy = a.bracket_of_basis(x, y);
            detail::add_matrix_defect(rep, "left module", x, y, r.combine(F::left, xy) - r.left(x) * r.left(y));
            detail::add_matrix_defect(rep, "right module", x, y,
                                      r.combine(F::right, xy) - s * (r.right(y) * r.right(x)));
            detail::add_matrix_defect(rep, "bimodule", x, y, r.right(y) * r.left(x) - s * (r.left(x) * r.right(y)));
            detail::add_matrix_defect(rep, "Lie module", x, y,
                                      r.combine(F::rho, bxy) - (r.rho(x) * r.rho(y) - s * (r.rho(y) * r.rho(x))));
            detail::add_matrix_defect(rep, "L-bracket compatibility", x, y,
                                      r.combine(F::left, bxy) - (r.rho(x) * r.left(y) - s * (r.left(y) * r.rho(x))));
            detail::add_matrix_defect(
                rep, "R-bracket compatibility", x, y,
                r.combine(F::right, bxy) - (r.rho(x) * r.right(y) - s * (r.right(y) * r.rho(x))));
            detail::add_matrix_defect(rep, "rho-product compatibility", x, y,
                                      r.combine(F::rho, xy) - (r.left(x) * r.rho(y) + s * (r.right(y) * r.rho(x))));
        }
    return rep;
}

inline bool is_representation(const Representation& r) { return verify_representation(r).holds(); }

/// Semi-direct product P ⊕ V without checking the representation:
///   (x+u)·(y+v) = x·y + L_x v + (-1)^{|u||y|} R_y u,
///   [x+u, y+v]  = [x,y] + rho(x)v - (-1)^{|u||y|} rho(y)u.
/// The basis of P comes first, followed by the basis of V.
inline SuperAlgebra semidirect_product_unchecked(const Representation& r) {
    const auto& p = r.algebra();
    const std::size_t n = p.dim(), m = r.module().dim();
    SuperAlgebra out(direct_sum(p.space(), r.module()));
    const std::size_t total = n + m;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Coefficients prod(total), br(total);
            for (std::size_t k = 0; k < n; ++k) {
                prod[k] = p.product(i, j, k);
                br[k] = p.bracket(i, j, k);
            }
            out.set_product(i, j, prod);
            out.set_bracket(i, j, br);
        }
        for (std::size_t u = 0; u < m; ++u) {
            const int s = koszul_sign(r.module().parity(u), p.parity(i));
            Coefficients xu(total), ux(total), bxu(total), bux(total);
            for (std::size_t q = 0; q < m; ++q) {
                xu[n + q] = r.left(i)(q, u);
                ux[n + q] = s * r.right(i)(q, u);
                bxu[n + q] = r.rho(i)(q, u);
                bux[n + q] = -s * r.rho(i)(q, u);
            }
            out.set_product(i, n + u, xu);
            out.set_product(n + u, i, ux);
            out.set_bracket(i, n + u, bxu);
            out.set_bracket(n + u, i, bux);
        }
    }
    return out;
}

inline SuperAlgebra semidirect_product(const Representation& r) {
    if (!is_representation(r))
        throw PreconditionFailed("semi-direct product needs a verified representation");
    return semidirect_product_unchecked(r);
}

/// L_x y = x·y, R_y x = (-1)^{|x||y|} x·y, rho = ad.
inline Representation regular_rep(const SuperAlgebra& p) {
    const std::size_t n = p.dim();
    std::vector<Matrix> left(n, Matrix(n, n)), right(n, Matrix(n, n)), ad(n, Matrix(n, n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k) {
                left[x](k, y) = p.product(x, y, k);
                right[x](k, y) = koszul_sign(p.parity(y), p.parity(x)) * p.product(y, x, k);
                ad[x](k, y) = p.bracket(x, y, k);
            }
    return {p, p.space(), std::move(left), std::move(right), std::move(ad)};
}

/// M* on V* for an action M of parity px on V:
/// ⟨M* α, v⟩ = -(-1)^{px|α|} ⟨α, M v⟩.
inline Matrix dual_action(const Matrix& m, Parity px, const GradedSpace& v) {
    Matrix d(m.cols(), m.rows());
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b)
            if (m(a, b) != 0)
                d(b, a) = -koszul_sign(px, v.parity(a)) * m(a, b);
    return d;
}

/// rho(x·y) = rho(x)L_y + (-1)^{|x||y|} rho(y)R_x for all basis pairs: the
/// condition for (V*; -R*, -L*, rho*) to be a representation.
inline DefectReport verify_dualizable(const Representation& r) {
    using F = Representation::Family;
    DefectReport rep{"dualizability", {}};
    const auto& a = r.algebra();
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
            const Scalar s = koszul_sign(a.parity(x), a.parity(y));
            detail::add_matrix_defect(rep, "dualizability", x, y,
                                      r.combine(F::rho, a.product_of_basis(x, y)) -
                                          (r.rho(x) * r.left(y) + s * (r.rho(y) * r.right(x))));
        }
    return rep;
}

namespace detail {

inline Representation dual_rep_unchecked(const Representation& r) {
    const auto& a = r.algebra();
    const std::size_t n = a.dim();
    std::vector<Matrix> left, right, rho;
    for (std::size_t x = 0; x < n; ++x) {
        left.push_back(-dual_action(r.right(x), a.parity(x), r.module()));
        right.push_back(-dual_action(r.left(x), a.parity(x), r.module()));
        rho.push_back(dual_action(r.rho(x), a.parity(x), r.module()));
    }
    return {a, dual_space(r.module()), std::move(left), std::move(right), std::move(rho)};
}

} // namespace detail

/// (V*; -R*, -L*, rho*). Throws if the dualizability condition fails.
inline Representation dual_rep(const Representation& r) {
    auto report = verify_dualizable(r);
    if (!report.holds()) {
        const auto& w = report.witnesses.front();
        const auto& s = r.algebra().space();
        throw PreconditionFailed("representation is not dualizable: condition fails at (" + s.name(w.indices[0]) +
                                 ", " + s.name(w.indices[1]) + ")");
    }
    return detail::dual_rep_unchecked(r);
}

/// (P*; -R*, -L*, ad*), which exists exactly when P is coherent.
inline Representation coregular_rep(const SuperAlgebra& p) {
    if (!is_coherent(p))
        throw PreconditionFailed("co-regular representation requires a coherent Poisson superalgebra");
    return detail::dual_rep_unchecked(regular_rep(p));
}

/// (sV; L^s, R^s, rho^s) with M^s_x sv = (-1)^{|x|} s(M_x v).
inline Representation parity_reversed_rep(const Representation& r) {
    const auto& a = r.algebra();
    std::array<std::vector<Matrix>, 3> fam;
    for (std::size_t f = 0; f < 3; ++f)
        for (std::size_t x = 0; x < a.dim(); ++x)
            fam[f].push_back(Scalar(parity_sign(a.parity(x))) *
                             r.family(static_cast<Representation::Family>(f))[x]);
    return {a, parity_shift(r.module()), std::move(fam[0]), std::move(fam[1]), std::move(fam[2])};
}

/// V1 ⊕ V2 with block-diagonal actions.
inline Representation direct_sum_rep(const Representation& r1, const Representation& r2) {
    if (!(r1.algebra() == r2.algebra()))
        throw SpaceMismatch("direct sum of representations of different algebras");
    const std::size_t m1 = r1.module().dim(), m2 = r2.module().dim();
    std::array<std::vector<Matrix>, 3> fam;
    for (std::size_t f = 0; f < 3; ++f)
        for (std::size_t x = 0; x < r1.algebra().dim(); ++x) {
            const auto ff = static_cast<Representation::Family>(f);
            Matrix m(m1 + m2, m1 + m2);
            const Matrix &a = r1.family(ff)[x], &b = r2.family(ff)[x];
            for (std::size_t i = 0; i < m1; ++i)
                for (std::size_t j = 0; j < m1; ++j)
                    m(i, j) = a(i, j);
            for (std::size_t i = 0; i < m2; ++i)
                for (std::size_t j = 0; j < m2; ++j)
                    m(m1 + i, m1 + j) = b(i, j);
            fam[f].push_back(std::move(m));
        }
    std::vector<BasisElement> basis = r1.module().basis();
    for (auto e : r2.module().basis()) {
        e.name += "'";
        basis.push_back(std::move(e));
    }
    return {r1.algebra(), GradedSpace(std::move(basis)), std::move(fam[0]), std::move(fam[1]), std::move(fam[2])};
}

struct RepIsomorphism {
    LinearMap map;
    Representation source;
    Representation target;
};

/// φL_x = L̄_xφ, φR_x = R̄_xφ, φrho(x) = rhō(x)φ for every basis x, with φ
/// an even invertible map from the source module to the target module.
inline DefectReport verify_rep_isomorphism(const LinearMap& phi, const Representation& source,
                                           const Representation& target) {
    if (!(source.algebra() == target.algebra()))
        throw SpaceMismatch("representations of different algebras");
    if (!(phi.domain() == source.module()) || !(phi.codomain() == target.module()))
        throw SpaceMismatch("isomorphism must map the source module to the target module");
    if (phi.parity() != Parity::even)
        throw PreconditionFailed("representation isomorphism must be even");
    if (!is_invertible(phi.matrix()))
        throw PreconditionFailed("representation isomorphism must be invertible");
    DefectReport rep{"representation isomorphism", {}};
    for (std::size_t f = 0; f < 3; ++f) {
        const auto ff = static_cast<Representation::Family>(f);
        const std::string law = std::string("intertwines ") + family_name(ff);
        for (std::size_t x = 0; x < source.algebra().dim(); ++x)
            detail::add_matrix_defect(rep, law, x, x,
                                      phi.matrix() * source.family(ff)[x] - target.family(ff)[x] * phi.matrix());
    }
    return rep;
}

enum class SearchStatus {
    found,         ///< a verified isomorphism is returned
    none_exact,    ///< provably no isomorphism exists
    none_in_grid,  ///< the intertwiner space has no invertible member among the sampled combinations
    undetermined   ///< intertwiner space too large for the grid search
};

inline std::string to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_exact: return "none (exact)";
    case SearchStatus::none_in_grid: return "none found in grid";
    case SearchStatus::undetermined: return "undetermined";
    }
    return "?";
}

struct IsomorphismSearch {
    SearchStatus status;
    std::optional<RepIsomorphism> isomorphism;
    std::size_t intertwiner_dim = 0;
};

namespace detail {

/// Calls visit(coeffs) for every tuple in grid^k except the all-zero one, in
/// lexicographic order; stops early when visit returns true.
inline bool for_each_combination(std::size_t k, const std::vector<Scalar>& grid,
                                 const std::function<bool(const std::vector<Scalar>&)>& visit) {
    std::vector<std::size_t> digit(k, 0);
    std::vector<Scalar> c(k);
    while (true) {
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = grid[digit[i]];
            nonzero = nonzero || c[i] != 0;
        }
        if (nonzero && visit(c))
            return true;
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < grid.size())
                break;
            digit[pos] = 0;
            if (pos == 0)
                return false;
        }
        if (k == 0)
            return false;
    }
}

} // namespace detail

inline constexpr std::size_t kIsomorphismSearchCap = 5;

/// Solves the linear intertwining system for even φ: V1 → V2, then looks for
/// an invertible member among combinations of a solution-space basis with
/// coefficients in {-2,...,2}. Spaces with more than five basis vectors are
/// reported as undetermined.
inline IsomorphismSearch find_rep_isomorphism(const Representation& r1, const Representation& r2) {
    if (!(r1.algebra() == r2.algebra()))
        throw SpaceMismatch("representations of different algebras");
    const auto &v1 = r1.module(), &v2 = r2.module();
    if (v1.dim() != v2.dim())
        throw SpaceMismatch("representations have different dimensions");
    if (v1.even_dim() != v2.even_dim())
        return {SearchStatus::none_exact, std::nullopt, 0};

    const std::size_t d = v1.dim();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (row in V2, col in V1)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (v2.parity(a) == v1.parity(b))
                unknowns.emplace_back(a, b);

    // Each equation is one entry of φM1 - M2φ.
    std::vector<Coefficients> rows;
    for (std::size_t f = 0; f < 3; ++f) {
        const auto ff = static_cast<Representation::Family>(f);
        for (std::size_t x = 0; x < r1.algebra().dim(); ++x) {
            const Matrix &m1 = r1.family(ff)[x], &m2 = r2.family(ff)[x];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    Coefficients row(unknowns.size());
                    for (std::size_t u = 0; u < unknowns.size(); ++u) {
                        const auto [a, b] = unknowns[u];
                        // (φM1)_{ij} contributes φ_{ib} M1_{bj}; (M2φ)_{ij} contributes M2_{ia} φ_{aj}.
                        if (a == i)
                            row[u] += m1(b, j);
                        if (b == j)
                            row[u] -= m2(i, a);
                    }
                    if (!coefficients_zero(row))
                        rows.push_back(std::move(row));
                }
        }
    }
    std::vector<Coefficients> basis;
    if (rows.empty()) {
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            basis.push_back(detail::unit(unknowns.size(), u));
    } else {
        basis = nullspace(Matrix::from_rows(rows));
    }
    IsomorphismSearch result{SearchStatus::none_in_grid, std::nullopt, basis.size()};
    if (basis.empty()) {
        result.status = SearchStatus::none_exact;
        return result;
    }
    if (basis.size() > kIsomorphismSearchCap) {
        result.status = SearchStatus::undetermined;
        return result;
    }
    const std::vector<Scalar> grid{-2, -1, 0, 1, 2};
    detail::for_each_combination(basis.size(), grid, [&](const std::vector<Scalar>& c) {
        Matrix phi(d, d);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (c[k] != 0)
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                    phi(unknowns[u].first, unknowns[u].second) += c[k] * basis[k][u];
        if (!is_invertible(phi))
            return false;
        LinearMap map(v1, v2, Parity::even, std::move(phi));
        if (!verify_rep_isomorphism(map, r1, r2).holds())
            return false;
        result.status = SearchStatus::found;
        result.isomorphism = RepIsomorphism{std::move(map), r1, r2};
        return true;
    });
    return result;
}

/// Even-first block decomposition of a homogeneous action matrix:
/// A = even←even, B = odd←odd, C = even←odd, D = odd←even.
struct BlockForm {
    Matrix a, b, c, d;
    bool diagonal() const { return c.is_zero() && d.is_zero(); }
    bool anti_diagonal() const { return a.is_zero() && b.is_zero(); }
};

inline BlockForm block_form(const Matrix& m, const GradedSpace& v) {
    std::vector<std::size_t> even, odd;
    for (std::size_t i = 0; i < v.dim(); ++i)
        (v.parity(i) == Parity::even ? even : odd).push_back(i);
    auto sub = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
        Matrix s(r.size(), c.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                s(i, j) = m(r[i], c[j]);
        return s;
    };
    return {sub(even, even), sub(odd, odd), sub(even, odd), sub(odd, even)};
}

/// Human-readable block layout of every action matrix, even basis first.
inline std::string blocks(const Representation& r) {
    std::ostringstream os;
    const auto& a = r.algebra();
    os << "module " << r.module().even_dim() << "|" << r.module().odd_dim() << "\n";
    for (std::size_t f = 0; f < 3; ++f) {
        const auto ff = static_cast<Representation::Family>(f);
        for (std::size_t x = 0; x < a.dim(); ++x) {
            const auto bf = block_form(r.family(ff)[x], r.module());
            os << family_name(ff) << "(" << a.space().name(x) << ") ";
            if (a.parity(x) == Parity::even)
                os << "[A 0; 0 B] A=" << bf.a << " B=" << bf.b;
            else
                os << "[0 C; D 0] C=" << bf.c << " D=" << bf.d;
            os << (a.parity(x) == Parity::even ? (bf.diagonal() ? "" : " (not block-diagonal!)")
                                               : (bf.anti_diagonal() ? "" : " (not anti-diagonal!)"))
               << "\n";
        }
    }
    return os.str();
}

} // namespace superpoisson
