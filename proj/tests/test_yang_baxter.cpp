#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace superpoisson;
using namespace fixtures;

TEST(Legs, LayoutsMatchDisplayedExpansions) {
    for (const auto& d : displayed_expansions()) {
        const auto layout = leg_layout(d.u, d.w);
        EXPECT_EQ(layout.slots, d.slots) << d.name;
        for (unsigned bits = 0; bits < 16; ++bits)
            EXPECT_EQ(layout_sign(layout, parity_pattern(bits)), display_sign(d, parity_pattern(bits)))
                << d.name << " pattern " << bits;
    }
}

TEST(Legs, EngineMatchesDisplaysNumerically) {
    std::mt19937_64 rng(11);
    std::vector<SuperAlgebra> algebras;
    for (int f = 1; f <= 5; ++f)
        algebras.push_back(family_1dim1(f, 2));
    algebras.push_back(general_linear(1, 1));
    for (const auto& p : algebras)
        for (int k = 0; k < 10; ++k)
            for (Parity par : {Parity::even, Parity::odd}) {
                const auto r = random_graded_skew_tensor(p.space(), par, rng);
                for (const auto& d : displayed_expansions())
                    EXPECT_EQ(leg_product(p, r, d.u, d.w, d.op), expand_display(p, r, d)) << d.name;
            }
}

TEST(Legs, ShortNames) {
    EXPECT_EQ(to_string(Leg::l12), "r12");
    EXPECT_EQ(to_string(Leg::l23), "r23");
}

TEST(Legs, PartialTermOnSupersymmetricTensor) {
    // r13·r12 for x⊗y + y⊗x over family 2 is -x⊗y⊗y - y⊗x⊗y.
    const auto p = family2();
    const auto t = leg_product(p, xy_plus_yx(), Leg::l13, Leg::l12, LegOp::product);
    TripleTensor want(p.space());
    want(0, 1, 1) = -1;
    want(1, 0, 1) = -1;
    EXPECT_EQ(t, want);
}

TEST(Pybe, ExampleSolutions) {
    const auto p = family2();
    const auto yy = check_pybe(p, y_tensor_y());
    EXPECT_TRUE(yy.is_solution);
    EXPECT_TRUE(yy.aybe_defect.is_zero());
    EXPECT_TRUE(yy.cybe_defect.is_zero());
    EXPECT_EQ(symmetry_class(y_tensor_y()), SymmetryClass::skew_supersymmetric);

    EXPECT_TRUE(check_pybe(p, xy_plus_yx()).is_solution);
    EXPECT_EQ(symmetry_class(xy_plus_yx()), SymmetryClass::supersymmetric);
    EXPECT_EQ(tensor_to_map(xy_plus_yx()).matrix(), t1().matrix());
    EXPECT_EQ(tensor_to_map(xy_plus_yx()).parity(), Parity::odd);
}

TEST(Pybe, NonSolutionReportsDefect) {
    const auto p = family2();
    TensorElement xx(p.space(), Parity::even);
    xx.add("x", "x", 1);
    const auto rep = check_pybe(p, xx);
    EXPECT_FALSE(rep.is_solution);
    EXPECT_FALSE(rep.aybe_defect.is_zero());
    EXPECT_EQ(rep.aybe_defect(0, 0, 0), 1);
}

TEST(Pybe, DefectsScaleQuadratically) {
    std::mt19937_64 rng(5);
    for (int f = 1; f <= 5; ++f) {
        const auto p = family_1dim1(f, 1);
        for (Parity par : {Parity::even, Parity::odd}) {
            const auto r = random_graded_skew_tensor(p.space(), par, rng);
            const auto a = aybe_defect(p, r), c = cybe_defect(p, r);
            const auto a3 = aybe_defect(p, 3 * r), c3 = cybe_defect(p, 3 * r);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k) {
                        EXPECT_EQ(a3(i, j, k), 9 * a(i, j, k));
                        EXPECT_EQ(c3(i, j, k), 9 * c(i, j, k));
                    }
        }
    }
}

TEST(Pybe, WrongSpaceThrows) {
    TensorElement r(general_linear(1, 1).space(), Parity::even);
    EXPECT_THROW(check_pybe(family2(), r), SpaceMismatch);
}

TEST(TensorMap, RoundTripAndSigns) {
    const auto s = family2().space();
    for (const auto& t : grid_tensors(s, kGrid)) {
        const auto m = tensor_to_map(t);
        EXPECT_EQ(m.domain(), dual_space(s));
        EXPECT_EQ(map_to_tensor(m), t);
    }
    EXPECT_EQ(tensor_to_map(y_tensor_y()).matrix(), Matrix::from_rows({{0, 0}, {0, -1}}));
    EXPECT_EQ(tensor_to_map(y_tensor_y()).matrix(), -1 * t0().matrix());
}

TEST(TensorMap, PairingCriterionMatchesGradedSkewness) {
    for (const auto& p : {family2(), general_linear(1, 1)}) {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 40; ++k)
            for (Parity par : {Parity::even, Parity::odd}) {
                const auto r = random_graded_skew_tensor(p.space(), par, rng);
                EXPECT_TRUE(satisfies_pairing_criterion(r));
            }
    }
    for (const auto& t : grid_tensors(family2().space(), kGrid))
        EXPECT_EQ(satisfies_pairing_criterion(t), is_graded_skew(t)) << t.coefficients();
}

TEST(CoregularEquivalence, AgreesOnRandomTensors) {
    std::mt19937_64 rng(2024);
    for (int f = 1; f <= 5; ++f) {
        const auto p = family_1dim1(f, 1);
        std::size_t solutions = 0;
        for (int k = 0; k < 200; ++k)
            for (Parity par : {Parity::even, Parity::odd}) {
                const auto d = check_theorem_tr(p, random_graded_skew_tensor(p.space(), par, rng));
                EXPECT_TRUE(d.agree()) << "family " << f;
                solutions += d.pybe_solution;
            }
        EXPECT_GT(solutions, 0u) << "family " << f;
    }
}

TEST(CoregularEquivalence, AgreesOnGl11) {
    const auto gl = general_linear(1, 1);
    std::mt19937_64 rng(9);
    std::size_t solutions = 0, total = 0;
    for (int k = 0; k < 60; ++k)
        for (Parity par : {Parity::even, Parity::odd}) {
            const auto d = check_theorem_tr(gl, random_graded_skew_tensor(gl.space(), par, rng, -1, 1));
            EXPECT_TRUE(d.agree());
            solutions += d.pybe_solution;
            ++total;
        }
    EXPECT_GT(solutions, 0u);
    EXPECT_LT(solutions, total);
}

TEST(CoregularEquivalence, Preconditions) {
    TensorElement xx(family2().space(), Parity::even);
    xx.add("x", "x", 1);
    EXPECT_THROW(check_theorem_tr(family2(), xx), PreconditionFailed);
    SuperAlgebra bad = family2();
    bad.bracket_rule("y", "y", {{"x", 1}});
    EXPECT_THROW(check_theorem_tr(bad, y_tensor_y()), PreconditionFailed);
}

TEST(Cocycle, FormOfSupersymmetricSolution) {
    const auto p = family2();
    const auto b = form_from_tensor(p, xy_plus_yx());
    EXPECT_EQ(b.matrix(), Matrix::from_rows({{0, -1}, {1, 0}}));
    const auto c = classify_form(b, p);
    EXPECT_TRUE(c.odd);
    EXPECT_TRUE(c.skew_supersymmetric);
    EXPECT_TRUE(c.non_degenerate);
    ASSERT_TRUE(c.cocycle.has_value());
    EXPECT_TRUE(*c.cocycle);
    EXPECT_THROW(form_from_tensor(p, y_tensor_y()), PreconditionFailed);
}

TEST(Cocycle, InvertibleNonSolutionsFail) {
    const auto p = family2();
    std::size_t checked = 0;
    for (const auto& t : grid_tensors(p.space(), kGrid)) {
        if (!is_invertible(t.coefficients()))
            continue;
        const auto b = form_from_tensor(p, t);
        const bool cocycle = classify_form(b).skew_supersymmetric && cocycle_defects(p, b).holds();
        EXPECT_EQ(cocycle, check_pybe(p, t).is_solution) << t.coefficients();
        ++checked;
    }
    EXPECT_EQ(checked, 72u);
}

TEST(Cocycle, ConverseFromForm) {
    const auto p = family2();
    const BilinearForm b(p.space(), Matrix::from_rows({{0, 2}, {-2, 0}}));
    ASSERT_TRUE(*classify_form(b, p).cocycle);
    const auto r = tensor_from_form(b);
    EXPECT_EQ(r.parity(), Parity::odd);
    EXPECT_TRUE(check_pybe(p, r).is_solution);
    EXPECT_EQ(form_from_tensor(p, r).matrix(), b.matrix());
}

TEST(Cocycle, GradedSkewInvertibleTensorsAreClassifiedBySymmetry) {
    // Non-degenerate graded-skew tensors: odd ones give skew-supersymmetric forms.
    const auto p = family2();
    const auto b = form_from_tensor(p, xy_plus_yx());
    EXPECT_EQ(symmetry_class(xy_plus_yx()), SymmetryClass::supersymmetric);
    EXPECT_TRUE(classify_form(b).skew_supersymmetric);
    const auto gl = general_linear(1, 1);
    std::mt19937_64 rng(4);
    std::size_t seen = 0;
    for (int k = 0; k < 200 && seen < 10; ++k) {
        const auto r = random_graded_skew_tensor(gl.space(), Parity::even, rng);
        if (!is_invertible(r.coefficients()))
            continue;
        ++seen;
        EXPECT_EQ(symmetry_class(r), SymmetryClass::skew_supersymmetric);
        EXPECT_TRUE(classify_form(form_from_tensor(gl, r)).skew_supersymmetric);
    }
    EXPECT_GT(seen, 0u);
}

TEST(Solution, BuiltFromExampleOperators) {
    const auto p = family2();
    const auto co = family2_coregular();
    for (const auto& t : {t0(), t1()}) {
        const auto s = build_solution(p, co, t);
        EXPECT_TRUE(s.op.verified);
        EXPECT_TRUE(s.report.is_solution);
        EXPECT_EQ(s.ambient.dim(), 4u);
        EXPECT_TRUE(is_poisson(s.ambient));
        EXPECT_EQ(s.tensor.parity(), t.parity());
        EXPECT_TRUE(is_graded_skew(s.tensor));
    }
    const auto s1 = build_solution(p, co, t1());
    EXPECT_EQ(symmetry_class(s1.tensor), SymmetryClass::supersymmetric);
    // T1 = y⊗x** - x⊗y** inside the ambient; r = T - (-1)^{|T|} σ(T) = T + σ(T).
    const auto emb = embed_operator(s1.ambient, t1());
    EXPECT_EQ(s1.tensor.coefficients(), emb.coefficients() + twist(emb).coefficients());
    EXPECT_EQ(s1.tensor(1, 2), 1);
    EXPECT_EQ(s1.tensor(2, 1), 1);

    const auto s0 = build_solution(p, co, t0());
    EXPECT_EQ(symmetry_class(s0.tensor), SymmetryClass::skew_supersymmetric);
}

TEST(Solution, ZeroMapAndNonOperator) {
    const auto p = family2();
    const auto co = family2_coregular();
    LinearMap zero(co.module(), p.space(), Parity::even, Matrix(2, 2));
    const auto z = build_solution(p, co, zero);
    EXPECT_TRUE(z.tensor.is_zero());
    EXPECT_TRUE(z.report.is_solution);
    Matrix m = t0().matrix();
    m(0, 0) = 1;
    const auto bad = build_solution(p, co, LinearMap(co.module(), p.space(), Parity::even, m));
    EXPECT_FALSE(bad.op.verified);
    EXPECT_FALSE(bad.report.is_solution);
}

TEST(Solution, AgreesWithOperatorVerdictOnGrid) {
    const auto p = family2();
    const auto co = family2_coregular();
    for (Parity par : {Parity::even, Parity::odd})
        for (const auto& t : grid_maps(co.module(), p.space(), par, kGrid))
            EXPECT_EQ(build_solution(p, co, t).report.is_solution, is_o_operator(t, co)) << t.matrix();
}

TEST(Solution, RegularRepresentationOfGl11) {
    const auto gl = general_linear(1, 1);
    const auto reg = regular_rep(gl);
    LinearMap id(reg.module(), gl.space(), Parity::even, Matrix::identity(4));
    const auto s = build_solution(gl, reg, id);
    EXPECT_EQ(s.op.verified, s.report.is_solution);
}

TEST(Pipeline, FourVerdictsAgreeOnGrid) {
    const auto p = family2();
    const auto co = family2_coregular();
    std::size_t positives = 0;
    for (Parity par : {Parity::even, Parity::odd})
        for (const auto& t : grid_maps(co.module(), p.space(), par, kGrid)) {
            const auto v = corollary_pipeline(p, co, t);
            EXPECT_TRUE(v.agree()) << t.matrix();
            positives += v.o_operator;
        }
    EXPECT_GT(positives, 0u);
}
