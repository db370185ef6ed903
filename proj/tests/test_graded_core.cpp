#include <gtest/gtest.h>

#include "superpoisson/graded.hpp"
#include "superpoisson/matrix.hpp"

using namespace superpoisson;

namespace {

GradedSpace xy() { return make_space({{"x", Parity::even}, {"y", Parity::odd}}); }

} // namespace

TEST(Scalar, KoszulSignTable) {
    EXPECT_EQ(koszul_sign(Parity::even, Parity::even), 1);
    EXPECT_EQ(koszul_sign(Parity::even, Parity::odd), 1);
    EXPECT_EQ(koszul_sign(Parity::odd, Parity::even), 1);
    EXPECT_EQ(koszul_sign(Parity::odd, Parity::odd), -1);
    EXPECT_EQ(Parity::odd + Parity::odd, Parity::even);
}

TEST(Scalar, ParseAndFormatCanonical) {
    EXPECT_EQ(format_scalar(parse_scalar("2/4")), "1/2");
    EXPECT_EQ(format_scalar(parse_scalar("-6/3")), "-2");
    EXPECT_EQ(format_scalar(parse_scalar("3/-6")), "-1/2");
    EXPECT_EQ(format_scalar(parse_scalar("0")), "0");
    EXPECT_THROW(parse_scalar("1.5"), Error);
    EXPECT_THROW(parse_scalar("1e3"), Error);
    EXPECT_THROW(parse_scalar("1/0"), Error);
    EXPECT_THROW(parse_scalar(""), Error);
}

TEST(Matrix, InverseAndNullspace) {
    auto m = Matrix::from_rows({{1, 2}, {3, 4}});
    auto inv = inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix::identity(2));
    EXPECT_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));

    auto ns = nullspace(Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (Coefficients{-1, 1, 0}));
    EXPECT_EQ(rank(Matrix::from_rows({{1, 2}, {2, 4}})), 1u);
}

TEST(GradedSpace, RejectsDuplicatesAndEmpty) {
    EXPECT_THROW(make_space({{"x", Parity::even}, {"x", Parity::odd}}), Error);
    EXPECT_THROW(GradedSpace(std::vector<BasisElement>{}), Error);
}

TEST(GradedSpace, DualKeepsParities) {
    const auto d = dual_space(xy());
    EXPECT_EQ(d.name(0), "x*");
    EXPECT_EQ(d.parity(0), Parity::even);
    EXPECT_EQ(d.parity(1), Parity::odd);
}

TEST(GradedSpace, ParityShiftFlipsEveryParity) {
    const auto s = parity_shift(xy());
    EXPECT_EQ(s.name(0), "sx");
    EXPECT_EQ(s.parity(0), Parity::odd);
    EXPECT_EQ(s.parity(1), Parity::even);
    EXPECT_EQ(s.even_dim(), 1u);
    const auto ss = parity_shift(s);
    EXPECT_EQ(ss.parities(), xy().parities());
}

TEST(GradedSpace, DirectSumPrimesClashingNames) {
    const auto d = direct_sum(xy(), xy());
    EXPECT_EQ(d.dim(), 4u);
    EXPECT_EQ(d.name(2), "x'");
    EXPECT_EQ(d.name(3), "y'");
}

TEST(Pairing, DualBasisIsKronecker) {
    const auto v = xy();
    const auto d = dual_space(v);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            EXPECT_EQ(pair(Vector::basis(d, i), Vector::basis(v, j)), i == j ? 1 : 0);
    EXPECT_THROW(pair(Vector::basis(v, 0), Vector::basis(v, 0)), SpaceMismatch);
}

TEST(Pairing, TensorPairingCarriesKoszulSign) {
    const auto v = xy();
    const auto d = dual_space(v);
    TensorElement yy(v, Parity::even), yyd(d, Parity::even);
    yy.add("y", "y", 1);
    yyd.add("y*", "y*", 1);
    EXPECT_EQ(pair_tensor(yyd, yy), -1);

    TensorElement xy_(v, Parity::odd), xyd(d, Parity::odd);
    xy_.add("x", "y", 1);
    xyd.add("x*", "y*", 1);
    EXPECT_EQ(pair_tensor(xyd, xy_), 1);

    TensorElement yx(v, Parity::odd), yxd(d, Parity::odd);
    yx.add("y", "x", 1);
    yxd.add("y*", "x*", 1);
    EXPECT_EQ(pair_tensor(yxd, yx), 1);
}

TEST(Twist, OddOddPairPicksUpSign) {
    const auto v = xy();
    TensorElement r(v, Parity::even);
    r.add("y", "y", 3).add("x", "x", 2);
    const auto t = twist(r);
    EXPECT_EQ(t(1, 1), -3);
    EXPECT_EQ(t(0, 0), 2);

    TensorElement s(v, Parity::odd);
    s.add("x", "y", 5);
    EXPECT_EQ(twist(s)(1, 0), 5);
    EXPECT_EQ(twist(twist(s)), s);
}

TEST(Twist, SymmetryClasses) {
    const auto v = xy();
    TensorElement yy(v, Parity::even);
    yy.add("y", "y", 1);
    EXPECT_EQ(symmetry_class(yy), SymmetryClass::skew_supersymmetric);
    EXPECT_TRUE(is_graded_skew(yy));

    TensorElement s(v, Parity::odd);
    s.add("x", "y", 1).add("y", "x", 1);
    EXPECT_EQ(symmetry_class(s), SymmetryClass::supersymmetric);
    EXPECT_TRUE(is_graded_skew(s));

    TensorElement xx(v, Parity::even);
    xx.add("x", "x", 1);
    EXPECT_EQ(symmetry_class(xx), SymmetryClass::supersymmetric);
    EXPECT_FALSE(is_graded_skew(xx));

    TensorElement n(v, Parity::odd);
    n.add("x", "y", 1);
    EXPECT_EQ(symmetry_class(n), SymmetryClass::neither);

    EXPECT_EQ(symmetry_class(TensorElement(v, Parity::even)), SymmetryClass::both);
}

TEST(Homogeneity, MixedParityTensorRejectedWithIndices) {
    TensorElement r(xy(), Parity::even);
    try {
        r.add("x", "y", 1);
        FAIL() << "expected a homogeneity error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("(x, y)"), std::string::npos);
    }
}

TEST(Homogeneity, LinearMapRejectsWrongParityEntry) {
    const auto v = xy();
    Matrix m(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(LinearMap(v, v, Parity::even, m), Error);
    EXPECT_NO_THROW(LinearMap(v, v, Parity::odd, m));
}

TEST(LinearMap, CompositionAddsParities) {
    const auto v = xy();
    Matrix m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    LinearMap f(v, v, Parity::odd, m);
    const auto ff = compose(f, f);
    EXPECT_EQ(ff.parity(), Parity::even);
    EXPECT_EQ(ff.matrix(), Matrix::identity(2));
}
