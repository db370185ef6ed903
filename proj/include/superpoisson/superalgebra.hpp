#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graded.hpp"

namespace superpoisson {

/// One failing instance of an identity: the basis indices it was evaluated
/// on and the (nonzero) difference of the two sides.
struct Witness {
    std::string law;
    std::vector<std::size_t> indices;
    Coefficients defect;
};

struct DefectReport {
    std::string axiom;
    std::vector<Witness> witnesses;

    bool holds() const noexcept { return witnesses.empty(); }

    std::size_t count(const std::string& law) const {
        std::size_t n = 0;
        for (const auto& w : witnesses)
            n += (w.law == law);
        return n;
    }

    void add(std::string law, std::vector<std::size_t> idx, Coefficients defect) {
        if (!coefficients_zero(defect))
            witnesses.push_back({std::move(law), std::move(idx), std::move(defect)});
    }
};

/// Finite-dimensional superalgebra with a product and a bracket given by
/// structure constants: e_i·e_j = Σ_k c^k_ij e_k, [e_i,e_j] = Σ_k b^k_ij e_k.
/// Both operations are even; entries that would break this are rejected.
class SuperAlgebra {
  public:
    SuperAlgebra() = default;
    explicit SuperAlgebra(GradedSpace space)
        : space_(std::move(space)), n_(space_.dim()), product_(n_ * n_ * n_), bracket_(n_ * n_ * n_) {}

    const GradedSpace& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return n_; }
    Parity parity(std::size_t i) const { return space_.parity(i); }

    const Scalar& product(std::size_t i, std::size_t j, std::size_t k) const { return product_[idx(i, j, k)]; }
    const Scalar& bracket(std::size_t i, std::size_t j, std::size_t k) const { return bracket_[idx(i, j, k)]; }

    void set_product(std::size_t i, std::size_t j, const Coefficients& out) { set(product_, "product", i, j, out); }
    void set_bracket(std::size_t i, std::size_t j, const Coefficients& out) { set(bracket_, "bracket", i, j, out); }

    using Terms = std::vector<std::pair<std::string, Scalar>>;

    /// left·right = Σ coeff·name
    SuperAlgebra& product_rule(const std::string& left, const std::string& right, const Terms& out) {
        set_product(space_.index_of(left), space_.index_of(right), expand(out));
        return *this;
    }
    /// [left,right] = Σ coeff·name; the mirrored entry is not filled in.
    SuperAlgebra& bracket_rule(const std::string& left, const std::string& right, const Terms& out) {
        set_bracket(space_.index_of(left), space_.index_of(right), expand(out));
        return *this;
    }
    /// Sets [left,right] and [right,left] = -(-1)^{|left||right|}[left,right].
    SuperAlgebra& antisymmetric_bracket(const std::string& left, const std::string& right, const Terms& out) {
        const auto i = space_.index_of(left), j = space_.index_of(right);
        Coefficients v = expand(out);
        set_bracket(i, j, v);
        if (i != j) {
            const int s = -koszul_sign(parity(i), parity(j));
            for (auto& c : v)
                c *= s;
            set_bracket(j, i, v);
        }
        return *this;
    }

    Coefficients product_of_basis(std::size_t i, std::size_t j) const { return slice(product_, i, j); }
    Coefficients bracket_of_basis(std::size_t i, std::size_t j) const { return slice(bracket_, i, j); }

    Coefficients multiply(const Coefficients& u, const Coefficients& v) const { return apply(product_, u, v); }
    Coefficients bracket(const Coefficients& u, const Coefficients& v) const { return apply(bracket_, u, v); }

    Vector multiply(const Vector& u, const Vector& v) const {
        check(u), check(v);
        return {space_, multiply(u.coefficients, v.coefficients)};
    }
    Vector bracket(const Vector& u, const Vector& v) const {
        check(u), check(v);
        return {space_, bracket(u.coefficients, v.coefficients)};
    }

    bool bracket_is_zero() const {
        for (const auto& s : bracket_)
            if (s != 0)
                return false;
        return true;
    }

    friend bool operator==(const SuperAlgebra&, const SuperAlgebra&) = default;

  private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

    Coefficients expand(const Terms& terms) const {
        Coefficients v(n_);
        for (const auto& [name, c] : terms)
            v[space_.index_of(name)] += c;
        return v;
    }

    void set(std::vector<Scalar>& table, const char* what, std::size_t i, std::size_t j, const Coefficients& out) {
        if (i >= n_ || j >= n_ || out.size() != n_)
            throw SpaceMismatch(std::string(what) + " entry outside the algebra");
        for (std::size_t k = 0; k < n_; ++k) {
            if (out[k] != 0 && parity(k) != parity(i) + parity(j))
                throw Error(std::string(what) + " is not even: " + space_.name(i) + " , " + space_.name(j) +
                            " -> " + space_.name(k));
            table[idx(i, j, k)] = out[k];
        }
    }

    Coefficients slice(const std::vector<Scalar>& table, std::size_t i, std::size_t j) const {
        return {table.begin() + static_cast<std::ptrdiff_t>(idx(i, j, 0)),
                table.begin() + static_cast<std::ptrdiff_t>(idx(i, j, 0) + n_)};
    }

    Coefficients apply(const std::vector<Scalar>& table, const Coefficients& u, const Coefficients& v) const {
        Coefficients out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (u[i] == 0)
                continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (v[j] == 0)
                    continue;
                const Scalar uv = u[i] * v[j];
                for (std::size_t k = 0; k < n_; ++k)
                    if (table[idx(i, j, k)] != 0)
                        out[k] += uv * table[idx(i, j, k)];
            }
        }
        return out;
    }

    void check(const Vector& v) const {
        if (!(v.space == space_))
            throw SpaceMismatch("vector does not live on the algebra");
    }

    GradedSpace space_;
    std::size_t n_ = 0;
    std::vector<Scalar> product_;
    std::vector<Scalar> bracket_;
};

namespace detail {

inline Coefficients unit(std::size_t n, std::size_t i) {
    Coefficients v(n);
    v[i] = 1;
    return v;
}

/// a + s·b, elementwise.
inline Coefficients axpy(Coefficients a, int s, const Coefficients& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] != 0)
            a[k] += s * b[k];
    return a;
}

inline Coefficients scaled(Coefficients a, const Scalar& s) {
    for (auto& c : a)
        c *= s;
    return a;
}

} // namespace detail

/// (e_i·e_j)·e_k = e_i·(e_j·e_k) over all basis triples.
inline DefectReport verify_associativity(const SuperAlgebra& a) {
    DefectReport rep{"associativity", {}};
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ij = a.product_of_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.multiply(ij, detail::unit(n, k));
                auto rhs = a.multiply(detail::unit(n, i), a.product_of_basis(j, k));
                rep.add("associativity", {i, j, k}, detail::axpy(std::move(lhs), -1, rhs));
            }
        }
    return rep;
}

/// Super-antisymmetry [a,b] = -(-1)^{|a||b|}[b,a] and the super-Jacobi
/// identity (-1)^{|a||c|}[a,[b,c]] + cyclic = 0.
inline DefectReport verify_lie(const SuperAlgebra& a) {
    DefectReport rep{"Lie superalgebra", {}};
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep.add("super-antisymmetry", {i, j},
                    detail::axpy(a.bracket_of_basis(i, j), koszul_sign(a.parity(i), a.parity(j)),
                                 a.bracket_of_basis(j, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
                auto t1 = a.bracket(detail::unit(n, i), a.bracket_of_basis(j, k));
                auto t2 = a.bracket(detail::unit(n, j), a.bracket_of_basis(k, i));
                auto t3 = a.bracket(detail::unit(n, k), a.bracket_of_basis(i, j));
                Coefficients sum = detail::scaled(std::move(t1), koszul_sign(pi, pk));
                sum = detail::axpy(std::move(sum), koszul_sign(pj, pi), t2);
                sum = detail::axpy(std::move(sum), koszul_sign(pk, pj), t3);
                rep.add("super-Jacobi", {i, j, k}, std::move(sum));
            }
    return rep;
}

/// Left Leibniz rule [x,y·z] = [x,y]·z + (-1)^{|x||y|} y·[x,z] and its
/// right-hand form [x·y,z] = x·[y,z] + (-1)^{|y||z|}[x,z]·y. Witnesses are
/// reported for each form separately.
inline DefectReport verify_leibniz(const SuperAlgebra& a) {
    DefectReport rep{"Leibniz rule", {}};
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto x = detail::unit(n, i), y = detail::unit(n, j), z = detail::unit(n, k);
                auto lhs = a.bracket(x, a.product_of_basis(j, k));
                auto r1 = a.multiply(a.bracket_of_basis(i, j), z);
                auto r2 = a.multiply(y, a.bracket_of_basis(i, k));
                lhs = detail::axpy(std::move(lhs), -1, r1);
                lhs = detail::axpy(std::move(lhs), -koszul_sign(a.parity(i), a.parity(j)), r2);
                rep.add("Leibniz (left)", {i, j, k}, std::move(lhs));

                auto lhs2 = a.bracket(a.product_of_basis(i, j), z);
                auto s1 = a.multiply(x, a.bracket_of_basis(j, k));
                auto s2 = a.multiply(a.bracket_of_basis(i, k), y);
                lhs2 = detail::axpy(std::move(lhs2), -1, s1);
                lhs2 = detail::axpy(std::move(lhs2), -koszul_sign(a.parity(j), a.parity(k)), s2);
                rep.add("Leibniz (right)", {i, j, k}, std::move(lhs2));
            }
    return rep;
}

/// [x,y·z] = [x·y,z] - (-1)^{|x|(|y|+|z|)}[y,z·x]
inline DefectReport verify_coherence(const SuperAlgebra& a) {
    DefectReport rep{"coherence", {}};
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.bracket(detail::unit(n, i), a.product_of_basis(j, k));
                auto t1 = a.bracket(a.product_of_basis(i, j), detail::unit(n, k));
                auto t2 = a.bracket(detail::unit(n, j), a.product_of_basis(k, i));
                lhs = detail::axpy(std::move(lhs), -1, t1);
                lhs = detail::axpy(std::move(lhs), koszul_sign(a.parity(i), a.parity(j) + a.parity(k)), t2);
                rep.add("coherence", {i, j, k}, std::move(lhs));
            }
    return rep;
}

/// Associativity, Lie and Leibniz: the Poisson superalgebra axioms.
inline std::vector<DefectReport> verify_poisson(const SuperAlgebra& a) {
    return {verify_associativity(a), verify_lie(a), verify_leibniz(a)};
}

inline bool is_poisson(const SuperAlgebra& a) {
    for (const auto& r : verify_poisson(a))
        if (!r.holds())
            return false;
    return true;
}

inline bool is_coherent(const SuperAlgebra& a) { return verify_coherence(a).holds(); }

/// Bracket replaced by the supercommutator x·y - (-1)^{|x||y|} y·x.
inline SuperAlgebra from_supercommutator(const SuperAlgebra& assoc) {
    if (!assoc.bracket_is_zero())
        throw PreconditionFailed("supercommutator construction expects an algebra with zero bracket");
    if (!verify_associativity(assoc).holds())
        throw PreconditionFailed("supercommutator construction needs an associative product");
    SuperAlgebra out = assoc;
    const std::size_t n = assoc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.set_bracket(i, j,
                            detail::axpy(assoc.product_of_basis(i, j), -koszul_sign(assoc.parity(i), assoc.parity(j)),
                                         assoc.product_of_basis(j, i)));
    return out;
}

struct Polarization {
    SuperAlgebra algebra;
    DefectReport criterion;
};

/// Splits a single product ∗ into x·y = ½(x∗y + (-1)^{|x||y|} y∗x) and
/// [x,y] = ½(x∗y - (-1)^{|x||y|} y∗x). The report checks, over basis
/// triples, 3A(x,y,z) = (-1)^{|y||z|}(x∗z)∗y + (-1)^{|x|(|y|+|z|)}(y∗z)∗x
///   - (-1)^{|x||y|}(y∗x)∗z - (-1)^{|z|(|x|+|y|)}(z∗x)∗y
/// with A the associator of ∗; it is empty exactly when the result is a
/// commutative Poisson superalgebra.
inline Polarization polarize(const SuperAlgebra& star) {
    const std::size_t n = star.dim();
    SuperAlgebra out(star.space());
    const Scalar half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int s = koszul_sign(star.parity(i), star.parity(j));
            const auto ij = star.product_of_basis(i, j), ji = star.product_of_basis(j, i);
            out.set_product(i, j, detail::scaled(detail::axpy(ij, s, ji), half));
            out.set_bracket(i, j, detail::scaled(detail::axpy(ij, -s, ji), half));
        }

    DefectReport rep{"polarization criterion", {}};
    auto mul = [&](const Coefficients& u, const Coefficients& v) { return star.multiply(u, v); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto x = detail::unit(n, i), y = detail::unit(n, j), z = detail::unit(n, k);
                const auto px = star.parity(i), py = star.parity(j), pz = star.parity(k);
                auto assoc = detail::axpy(mul(mul(x, y), z), -1, mul(x, mul(y, z)));
                Coefficients d = detail::scaled(std::move(assoc), 3);
                d = detail::axpy(std::move(d), -koszul_sign(py, pz), mul(mul(x, z), y));
                d = detail::axpy(std::move(d), -koszul_sign(px, py + pz), mul(mul(y, z), x));
                d = detail::axpy(std::move(d), koszul_sign(px, py), mul(mul(y, x), z));
                d = detail::axpy(std::move(d), koszul_sign(pz, px + py), mul(mul(z, x), y));
                rep.add("3A identity", {i, j, k}, std::move(d));
            }
    return {std::move(out), std::move(rep)};
}

/// The five families of 1|1-dimensional Poisson superalgebras on {x even, y odd}.
inline SuperAlgebra family_1dim1(int family, const Scalar& k) {
    if (family < 1 || family > 5)
        throw Error("family must be in 1..5");
    if (k == 0)
        throw PreconditionFailed("family parameter k must be nonzero");
    SuperAlgebra a(make_space({{"x", Parity::even}, {"y", Parity::odd}}));
    switch (family) {
    case 1:
        a.product_rule("y", "y", {{"x", 1}});
        a.bracket_rule("y", "y", {{"x", k}});
        break;
    case 2:
        a.product_rule("x", "x", {{"x", 1}}).product_rule("x", "y", {{"y", 1}});
        a.antisymmetric_bracket("x", "y", {{"y", k}});
        break;
    case 3:
        a.product_rule("x", "x", {{"x", 1}}).product_rule("y", "x", {{"y", 1}});
        a.antisymmetric_bracket("x", "y", {{"y", k}});
        break;
    case 4:
        a.product_rule("x", "x", {{"x", 1}}).product_rule("x", "y", {{"y", 1}}).product_rule("y", "x", {{"y", 1}});
        a.bracket_rule("y", "y", {{"x", k}});
        break;
    case 5:
        a.product_rule("x", "x", {{"x", 1}}).product_rule("x", "y", {{"y", 1}}).product_rule("y", "x", {{"y", 1}});
        a.product_rule("y", "y", {{"x", 1}});
        a.bracket_rule("y", "y", {{"x", k}});
        break;
    }
    return a;
}

/// Matrix superalgebra M(m|n) with zero bracket: basis E_ab, |E_ab| = |a| + |b|
/// where the first m indices are even.
inline SuperAlgebra matrix_superalgebra(std::size_t m, std::size_t n) {
    const std::size_t d = m + n;
    if (d == 0)
        throw Error("matrix superalgebra needs m + n > 0");
    auto par = [m](std::size_t a) { return a < m ? Parity::even : Parity::odd; };
    auto name = [](std::size_t a, std::size_t b) { return "E" + std::to_string(a + 1) + "_" + std::to_string(b + 1); };
    std::vector<BasisElement> basis;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            basis.push_back({name(a, b), par(a) + par(b)});
    SuperAlgebra alg{GradedSpace(std::move(basis))};
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                alg.product_rule(name(a, b), name(b, c), {{name(a, c), 1}});
    return alg;
}

/// gl(m|n): the matrix superalgebra with its supercommutator bracket.
inline SuperAlgebra general_linear(std::size_t m, std::size_t n) {
    return from_supercommutator(matrix_superalgebra(m, n));
}

} // namespace superpoisson
