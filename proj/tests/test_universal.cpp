#include <gtest/gtest.h>

#include "dahakit/universal.hpp"

using namespace dahakit;

namespace {

std::vector<XYKey> mixed_probes(std::size_t rank, int degree) {
    std::vector<XYKey> out;
    for (const auto& x : ProbeBox(rank, degree).weights)
        for (const auto& y : ProbeBox(rank, degree).weights) out.push_back({x, y});
    return out;
}

}  // namespace

TEST(Universal, ClosedFormOfTsThetaInverseOnOne) {
    EXPECT_EQ(T_s_theta_inverse_closed_form(*build_root_datum("A1")), QtParams::t_half_pow(1, -1));
    EXPECT_EQ(T_s_theta_inverse_closed_form(*build_root_datum("A2")), QtParams::t_half_pow(1, -3));
    EXPECT_EQ(T_s_theta_inverse_closed_form(*build_root_datum("B2")),
              QtParams::t_half_pow(1, -1) * QtParams::t_half_pow(2, -2));
    EXPECT_EQ(T_s_theta_inverse_closed_form(*build_root_datum("G2")),
              QtParams::t_half_pow(1, -3) * QtParams::t_half_pow(3, -2));
    // against the reduced word in the polynomial representation
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        auto d = build_root_datum(t);
        PolyRep R(d);
        auto w = d->reduced_word(d->finite(d->reflection(d->theta())));
        EXPECT_EQ(R.T_word_inverse(w)(QtPoly::monomial(Weight{})), QtPoly(T_s_theta_inverse_closed_form(*d))) << t;
    }
}

TEST(Universal, A1SeedByHand) {
    auto d = build_root_datum("A1");
    HatRep H(d);
    Weight th = d->theta();
    QtScalar qi = H.params().q_pow(Rational(-1));
    QtXY want = QtXY::monomial({th, th}, qi * QtParams::t_half_pow(1, -1)) -
                QtXY::monomial(x_key(th), qi * QtParams::t_diff(1));
    EXPECT_EQ(hat_T0_seed(H, T_s_theta_inverse_closed_form(*d)), want);
}

TEST(Universal, PiOnDiagonalMonomial) {
    auto d = build_root_datum("A1");
    HatRep H(d);
    Weight w = make_weight({1});
    EXPECT_EQ(H.pi(1).image({w, w}), QtXY::monomial({-w, -w}));
}

// on the pure-X slice the hat operators are the Demazure-Lusztig operators
TEST(Universal, PureXSliceIsPolynomialRepresentation) {
    for (const char* t : {"A2", "B2"}) {
        auto d = build_root_datum(t);
        HatRep H(d);
        PolyRep R(d);
        for (std::size_t i = 0; i <= d->rank(); ++i)
            for (const auto& b : ProbeBox(d->rank(), 2).weights) {
                std::vector<QtXY::Term> ts;
                QtPoly img = R.T(i).image(b);
                for (const auto& [w, c] : img.terms()) ts.push_back({x_key(w), c});
                EXPECT_EQ(H.T(i).image(x_key(b)), QtXY::from_terms(std::move(ts))) << t << " " << i;
            }
    }
}

TEST(Universal, InverseNeedsInvertedQuadraticParameter) {
    auto d = build_root_datum("A1");
    HatRep H(d);
    auto probes = mixed_probes(1, 1);
    const HatOp& ti = H.Tinv(1);
    HatOp one = HatOp::identity();
    QtScalar td = QtParams::t_diff(1);
    EXPECT_EQ(compare_hat(H, ti * ti, HatOp::scalar(-td) * ti + one, probes), "");
    EXPECT_NE(compare_hat(H, ti * ti, HatOp::scalar(td) * ti + one, probes), "");
}

TEST(Universal, A1SuitePasses) {
    Report r = universal_suite(build_root_datum("A1"), 2);
    for (const auto& c : r.checks) EXPECT_NE(c.status, Status::Fail) << c.name << " " << c.witness;
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.suite, "universal");
}
