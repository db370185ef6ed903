#include <gtest/gtest.h>

#include "superpoisson/representation.hpp"

using namespace superpoisson;

namespace {

Matrix diag_signs(const GradedSpace& v) {
    Matrix m(v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        m(i, i) = parity_sign(v.parity(i));
    return m;
}

// Intertwining of the full semi-direct products by id ⊕ φ.
bool extension_intertwines(const RepIsomorphism& iso) {
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

} // namespace

TEST(Regular, IsRepresentationOnEveryFamily) {
    for (int f = 1; f <= 5; ++f)
        EXPECT_TRUE(is_representation(regular_rep(family_1dim1(f, 2)))) << "family " << f;
}

TEST(Regular, ActionMatrices) {
    const auto r = regular_rep(family_1dim1(2, 1));
    // L_x: x -> x, y -> y; R_x: x -> x, y -> 0 (y·x = 0); ad_x: y -> y.
    EXPECT_EQ(r.left(0), Matrix::identity(2));
    EXPECT_EQ(r.right(0), Matrix::from_rows({{1, 0}, {0, 0}}));
    EXPECT_EQ(r.rho(0), Matrix::from_rows({{0, 0}, {0, 1}}));
    // R_y x = (-1)^{|x||y|} x·y = y.
    EXPECT_EQ(r.right(1), Matrix::from_rows({{0, 0}, {1, 0}}));
}

TEST(Coregular, Family2Matrices) {
    const auto co = coregular_rep(family_1dim1(2, 1));
    EXPECT_TRUE(is_representation(co));
    EXPECT_EQ(co.module().name(0), "x*");
    // -R*_x: ⟨-R*_x α, v⟩ = ⟨α, R_x v⟩; R_x = diag(1,0) so -R*_x = diag(1,0).
    EXPECT_EQ(co.left(0), Matrix::from_rows({{1, 0}, {0, 0}}));
    // -L*_x = L_x^T = identity.
    EXPECT_EQ(co.right(0), Matrix::identity(2));
    // ad*_x = -ad_x^T.
    EXPECT_EQ(co.rho(0), Matrix::from_rows({{0, 0}, {0, -1}}));
}

TEST(Coregular, EveryFamilyAndParameter) {
    for (int f = 1; f <= 5; ++f)
        for (const Scalar& k : {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2)})
            EXPECT_TRUE(is_representation(coregular_rep(family_1dim1(f, k)))) << "family " << f;
}

TEST(Coregular, GeneralLinearIsCoherent) {
    const auto gl = general_linear(1, 1);
    EXPECT_TRUE(is_coherent(gl));
    EXPECT_TRUE(is_representation(coregular_rep(gl)));
}

TEST(Coregular, NonCoherentAlgebraRejected) {
    // Family 2 with [y,y] = x added.
    SuperAlgebra a = family_1dim1(2, 1);
    a.bracket_rule("y", "y", {{"x", 1}});
    ASSERT_FALSE(is_coherent(a));
    EXPECT_THROW(coregular_rep(a), PreconditionFailed);
}

TEST(Semidirect, ProductOfRegularAndCoregular) {
    for (int f = 1; f <= 5; ++f) {
        const auto p = family_1dim1(f, 1);
        const auto a = semidirect_product(regular_rep(p));
        EXPECT_TRUE(is_poisson(a)) << "family " << f;
        EXPECT_EQ(a.space().name(2), "x'");
        const auto b = semidirect_product(coregular_rep(p));
        EXPECT_TRUE(is_poisson(b)) << "family " << f;
        EXPECT_EQ(b.space().even_dim(), 2u);
    }
}

TEST(Semidirect, RejectsNonRepresentation) {
    const auto p = family_1dim1(2, 1);
    auto bad = regular_rep(p);
    std::vector<Matrix> left = bad.family(Representation::Family::left);
    left[0] = 2 * left[0];
    Representation r(p, bad.module(), left, bad.family(Representation::Family::right),
                     bad.family(Representation::Family::rho));
    const auto rep = verify_representation(r);
    EXPECT_FALSE(rep.holds());
    EXPECT_GT(rep.count("left module"), 0u);
    EXPECT_THROW(semidirect_product(r), PreconditionFailed);
}

TEST(ParityReversed, RepresentationOnShiftedModule) {
    for (int f = 1; f <= 5; ++f) {
        const auto p = family_1dim1(f, 1);
        const auto rr = parity_reversed_rep(regular_rep(p));
        EXPECT_TRUE(is_representation(rr)) << "family " << f;
        EXPECT_EQ(rr.module().name(0), "sx");
        EXPECT_EQ(rr.module().parity(0), Parity::odd);
        const auto back = parity_reversed_rep(rr);
        EXPECT_EQ(back.family(Representation::Family::left), regular_rep(p).family(Representation::Family::left));
    }
}

TEST(Isomorphism, DoubleDualSignMap) {
    // θ: V** → V, vᵢ** ↦ (-1)^{|vᵢ|} vᵢ.
    for (int f = 1; f <= 5; ++f) {
        const auto p = family_1dim1(f, 1);
        const auto r = regular_rep(p);
        const auto dd = dual_rep(dual_rep(r));
        LinearMap theta(dd.module(), r.module(), Parity::even, diag_signs(r.module()));
        EXPECT_TRUE(verify_rep_isomorphism(theta, dd, r).holds()) << "family " << f;
        EXPECT_TRUE(extension_intertwines({theta, dd, r})) << "family " << f;
        LinearMap id(dd.module(), r.module(), Parity::even, Matrix::identity(2));
        EXPECT_FALSE(verify_rep_isomorphism(id, dd, r).holds()) << "family " << f;
    }
}

TEST(Isomorphism, ShiftedDualSignMap) {
    // φ: sV* → (sV)* between the parity reversal of the dual and the dual of the parity reversal.
    for (int f = 1; f <= 5; ++f) {
        const auto p = family_1dim1(f, 1);
        const auto r = regular_rep(p);
        const auto src = parity_reversed_rep(dual_rep(r));
        const auto tgt = dual_rep(parity_reversed_rep(r));
        EXPECT_EQ(src.module(), tgt.module());
        LinearMap phi(src.module(), tgt.module(), Parity::even, diag_signs(r.module()));
        EXPECT_TRUE(verify_rep_isomorphism(phi, src, tgt).holds()) << "family " << f;
        EXPECT_TRUE(extension_intertwines({phi, src, tgt})) << "family " << f;
    }
}

TEST(Isomorphism, DualOfShiftedDualIsShift) {
    for (int f = 1; f <= 5; ++f) {
        const auto r = regular_rep(family_1dim1(f, 1));
        const auto src = dual_rep(parity_reversed_rep(dual_rep(r)));
        const auto tgt = parity_reversed_rep(r);
        LinearMap id(src.module(), tgt.module(), Parity::even, Matrix::identity(2));
        EXPECT_TRUE(verify_rep_isomorphism(id, src, tgt).holds()) << "family " << f;
    }
}

TEST(Isomorphism, RejectsOddOrSingularMaps) {
    const auto r = regular_rep(family_1dim1(2, 1));
    Matrix zero(2, 2);
    EXPECT_THROW(verify_rep_isomorphism(LinearMap(r.module(), r.module(), Parity::even, zero), r, r),
                 PreconditionFailed);
    Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
    EXPECT_THROW(verify_rep_isomorphism(LinearMap(r.module(), r.module(), Parity::odd, swap), r, r),
                 PreconditionFailed);
}

TEST(Isomorphism, SearchFindsDoubleDualMap) {
    const auto r = regular_rep(family_1dim1(5, 1));
    const auto res = find_rep_isomorphism(dual_rep(dual_rep(r)), r);
    ASSERT_EQ(res.status, SearchStatus::found);
    EXPECT_TRUE(verify_rep_isomorphism(res.isomorphism->map, res.isomorphism->source, res.isomorphism->target).holds());
}

TEST(Isomorphism, SearchReportsParityMismatchExactly) {
    const auto r = regular_rep(family_1dim1(2, 1));
    const auto res = find_rep_isomorphism(r, parity_reversed_rep(r));
    EXPECT_EQ(res.status, SearchStatus::none_exact);
}

TEST(Isomorphism, RegularVersusCoregularOnGl11) {
    // gl(1|1) carries the supertrace form, so its regular and co-regular representations agree.
    const auto gl = general_linear(1, 1);
    const auto res = find_rep_isomorphism(regular_rep(gl), coregular_rep(gl));
    EXPECT_EQ(res.status, SearchStatus::found);
}

TEST(Isomorphism, SelfReversingDirectSum) {
    const auto r = coregular_rep(family_1dim1(2, 1));
    const auto v = direct_sum_rep(r, parity_reversed_rep(r));
    EXPECT_TRUE(is_representation(v));
    const auto res = find_rep_isomorphism(v, parity_reversed_rep(v));
    ASSERT_EQ(res.status, SearchStatus::found);
}

TEST(Blocks, EvenActsDiagonallyOddAntiDiagonally) {
    const auto r = coregular_rep(family_1dim1(1, 1));
    const auto text = blocks(r);
    EXPECT_EQ(text.find("not "), std::string::npos);
    EXPECT_NE(text.find("module 1|1"), std::string::npos);
    const auto bf = block_form(r.left(1), r.module());
    EXPECT_TRUE(bf.anti_diagonal());
}
