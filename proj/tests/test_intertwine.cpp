#include <gtest/gtest.h>

#include "dahakit/intertwine.hpp"

using namespace dahakit;

TEST(Intertwine, A1SuitesPass) {
    IntertwineOptions o;
    o.degree = 2;
    auto d = build_root_datum("A1");
    for (const Report& r : {intertwine_suite_qt(d, o), intertwine_suite_degenerate(d, o)}) {
        for (const auto& c : r.checks) EXPECT_NE(c.status, Status::Fail) << r.backend << " " << c.name << " " << c.witness;
        EXPECT_TRUE(r.passed());
    }
}

TEST(Intertwine, ReflectedLabelIsRequired) {
    auto d = build_root_datum("A1");
    PolyRep R(d);
    auto probes = ProbeBox(1, 2).weights;
    Weight b = make_weight({1});
    QtOp psi = cleared_intertwiner(R, 1);
    EXPECT_TRUE(compare_ops(R, psi * R.Y(b), R.Y(-b) * psi, probes).empty());
    EXPECT_FALSE(compare_ops(R, psi * R.Y(b), R.Y(b) * psi, probes).empty());
    auto [sb, lev] = affine_reflect_label(*d, 0, b);
    EXPECT_EQ(sb, -b);
    EXPECT_EQ(lev, Rational(1));
}

TEST(Intertwine, DegenerateGIsAnInvolution) {
    auto d = build_root_datum("A1");
    DegenerateRep D(d);
    auto sd = certify_subspace(degenerate_closing_ops(D), {make_weight({1})}, {}, 1);
    ASSERT_EQ(sd.basis.size(), 2u);
    auto g = G_degenerate(D, sd, 1);
    auto id = Matrix<KScalar>::identity(2);
    EXPECT_EQ(matrix_diff_witness(g * g, id), "");
    EXPECT_NE(matrix_diff_witness(g, id), "");
    // on span{1} phi'_1 is singular
    auto unit = certify_subspace(degenerate_closing_ops(D), {Weight{}}, {}, 1);
    EXPECT_THROW(G_degenerate(D, unit, 1), SingularMatrix);
}

TEST(Intertwine, QtGIsAnInvolution) {
    auto d = build_root_datum("A1");
    PolyRep R(d);
    auto sd = certify_subspace(qt_closing_ops(R), {make_weight({1})}, {}, 1);
    auto g = G_qt(R, sd, 1);
    EXPECT_EQ(matrix_diff_witness(g * g, Matrix<QtScalar>::identity(sd.basis.size())), "");
}
