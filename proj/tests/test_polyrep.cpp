#include <gtest/gtest.h>

#include <random>

#include "dahakit/polyrep.hpp"

using namespace dahakit;

namespace {

QtPoly one() { return QtPoly::monomial(Weight{}); }

// Y_b(1) for dominant b: each letter of t_b contributes t_nu^{1/2}
QtScalar y_eigenvalue_on_one(const RootDatum& d, const Weight& b) {
    QtScalar r(1);
    for (const auto& a : d.positive_roots()) r = r * QtParams::t_half_pow(a.nu, d.pair_coroot(b, a));
    return r;
}

QtPoly random_poly(std::mt19937& gen, std::size_t rank) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
    std::vector<QtPoly::Term> ts;
    for (int k = 0; k < 4; ++k) {
        Weight w;
        for (std::size_t i = 0; i < rank; ++i) w[i] = e(gen);
        ts.push_back({w, QtScalar(static_cast<long>(c(gen))) * QtScalar::var(1, e(gen))});
    }
    return QtPoly::from_terms(ts);
}

}  // namespace

TEST(PolyRep, TOnOneIsCharacter) {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        auto d = build_root_datum(t);
        PolyRep R(d);
        for (std::size_t i = 0; i <= d->rank(); ++i)
            EXPECT_EQ(R.apply_T(i, one()), QtPoly(QtParams::t_half(d->nu_affine(i)))) << t << " " << i;
    }
}

TEST(PolyRep, A1HandComputedT) {
    auto d = build_root_datum("A1");
    PolyRep R(d);
    Weight w = make_weight({1});
    // T_1(X_omega) = t^{-1/2} X_{-omega}
    EXPECT_EQ(R.apply_T(1, QtPoly::monomial(w)), QtPoly::monomial(-w, QtParams::t_half_pow(1, -1)));
    // T_1(X_{-omega}) = t^{1/2} X_omega + (t^{1/2} - t^{-1/2}) X_{-omega}
    QtPoly want = QtPoly::monomial(w, QtParams::t_half(1)) + QtPoly::monomial(-w, QtParams::t_diff(1));
    EXPECT_EQ(R.apply_T(1, QtPoly::monomial(-w)), want);
}

TEST(PolyRep, YEigenvalueOnOne) {
    for (const char* t : {"A1", "A2", "B2"}) {
        auto d = build_root_datum(t);
        PolyRep R(d);
        for (const auto& b : ProbeBox(d->rank(), 2).weights) {
            bool dominant = true;
            for (std::size_t i = 0; i < d->rank(); ++i) dominant = dominant && b[i] >= 0;
            if (!dominant) continue;
            EXPECT_EQ(R.apply_Y(b, one()), QtPoly(y_eigenvalue_on_one(*d, b))) << t << d->weight_str(b);
        }
    }
}

// property: the quadratic relation on random Laurent polynomials
TEST(PolyRep, QuadraticOnRandomPolynomials) {
    std::mt19937 gen(17);
    for (const char* t : {"A2", "B2"}) {
        auto d = build_root_datum(t);
        PolyRep R(d);
        for (int trial = 0; trial < 10; ++trial) {
            QtPoly f = random_poly(gen, d->rank());
            for (std::size_t i = 0; i <= d->rank(); ++i) {
                int nu = d->nu_affine(i);
                QtPoly g = R.apply_T(i, f);
                QtPoly lhs = R.apply_T(i, g) - QtParams::t_diff(nu) * g - f;
                EXPECT_TRUE(lhs.is_zero()) << t << " " << i;
                EXPECT_EQ(R.apply_T_inverse(i, g), f);
            }
        }
    }
}

TEST(PolyRep, SmallRelationSuitesPass) {
    for (const char* t : {"A1", "A2"}) {
        Report r = relation_suite(build_root_datum(t), t[1] == '1' ? 2 : 1);
        for (const auto& c : r.checks) EXPECT_NE(c.status, Status::Fail) << t << " " << c.name << " " << c.witness;
        EXPECT_TRUE(r.passed());
    }
}

TEST(PolyRep, WrongQPowerIsDetected) {
    auto d = build_root_datum("A1");
    PolyRep R(d);
    auto probes = ProbeBox(1, 2).weights;
    Weight w = make_weight({1});
    // T_1 X_omega T_1 = X_{omega - alpha}; dropping T_1 on the right must fail
    EXPECT_TRUE(compare_ops(R, R.T(1) * R.X(w) * R.T(1), R.X(w - d->simple_root(0)), probes).empty());
    EXPECT_FALSE(compare_ops(R, R.T(1) * R.X(w), R.X(w - d->simple_root(0)), probes).empty());
    EXPECT_FALSE(compare_ops(R, R.T(0) * R.X(-w) * R.T(0), R.X(w, Rational(1)), probes).empty());
}

TEST(PolyRep, DiscriminantSignLine) {
    auto d = build_root_datum("G2");
    PolyRep R(d);
    QtPoly delta = build_discriminant(d);
    for (std::size_t i = 1; i <= 2; ++i)
        EXPECT_EQ(R.apply_T(i, delta), -(QtParams::t_half_pow(d->nu_affine(i), -1) * delta));
}

TEST(Subspaces, ClosureOverflowAndRestriction) {
    auto d = build_root_datum("A1");
    PolyRep R(d);
    std::vector<QtOp> grow{R.X(make_weight({1}))};
    EXPECT_THROW(monomial_closure(grow, {Weight{}}, 1, 3), ClosureOverflow);
    // span{X_omega, X_{-omega}} is stable under T_1
    std::vector<QtOp> ops{R.T(1)};
    auto res = invariant_subspace(ops, {make_weight({1})}, 1, 4);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].basis.size(), 2u);
    auto m = res[0].matrix;
    // the restricted T_1 satisfies the quadratic relation as a matrix
    auto th = QtParams::t_half(1);
    auto q = (m - Matrix<QtScalar>::scalar(2, th)) * (m + Matrix<QtScalar>::scalar(2, QtScalar(1) / th));
    EXPECT_TRUE(q.is_zero_matrix());
}
