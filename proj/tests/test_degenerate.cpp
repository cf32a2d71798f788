#include <gtest/gtest.h>

#include "dahakit/degenerate.hpp"

using namespace dahakit;

namespace {

KPoly mono(int e) { return KPoly::monomial(make_weight({e})); }
KPoly mono(int e, const KScalar& c) { return KPoly::monomial(make_weight({e}), c); }

}  // namespace

// D_omega(x^n) = (n/2) x^{n-1} + k x^{n-1} (1 - (-1)^n) / 2, with x = x_omega and x_alpha = 2x
TEST(RationalDunkl, A1HandOracle) {
    auto d = build_root_datum("A1");
    DegenerateRep D(d);
    Weight w = make_weight({1});
    KScalar k = k_param(1);
    for (int n = 0; n <= 7; ++n) {
        KPoly got = D.rational_dunkl(w)(mono(n));
        KPoly want;
        if (n > 0) want = mono(n - 1, KScalar(rat(n, 2)) + (n % 2 ? k : KScalar(0)));
        EXPECT_EQ(got, want) << n;
    }
}

// property: (1 - X_{-alpha}) applied to the trigonometric difference gives X^n - s(X^n)
TEST(TrigDunkl, DifferenceInvertsDenominator) {
    for (const char* t : {"A1", "A2", "B2"}) {
        auto d = build_root_datum(t);
        DegenerateRep D(d);
        for (std::size_t j = 0; j < D.positive_roots().size(); ++j) {
            const Root& a = D.positive_roots()[j];
            KPoly denom = KPoly::monomial(Weight{}) - KPoly::monomial(-a.omega);
            for (const auto& c : laurent_ball(d->rank(), 3)) {
                KPoly lhs = denom * D.trig_difference(j)(KPoly::monomial(c));
                Weight sc = c - d->pair_coroot(c, a) * a.omega;
                EXPECT_EQ(lhs, KPoly::monomial(c) - KPoly::monomial(sc)) << t << d->weight_str(c);
            }
        }
    }
}

TEST(TrigDunkl, A1OnConstantsIsShift) {
    auto d = build_root_datum("A1");
    DegenerateRep D(d);
    // D_omega(1) = -(rho_k, omega) = -k/2
    EXPECT_EQ(D.trig_dunkl(make_weight({1}))(mono(0)), mono(0, -(k_param(1) * KScalar(rat(1, 2)))));
    EXPECT_EQ(D.rho_k_pairing(make_weight({1})), k_param(1) * KScalar(rat(1, 2)));
}

TEST(Dunkl, SuitesPassInLowDegree) {
    for (const char* t : {"A1", "A2", "B2"}) {
        Report r = dunkl_suite(build_root_datum(t), 3);
        for (const auto& c : r.checks) EXPECT_NE(c.status, Status::Fail) << t << " " << c.name << " " << c.witness;
        Report g = gaussian_tau_suite(build_root_datum(t), 3);
        for (const auto& c : g.checks) EXPECT_NE(c.status, Status::Fail) << t << " " << c.name << " " << c.witness;
    }
}

TEST(Dunkl, BrokenCommutatorIsDetected) {
    auto d = build_root_datum("A2");
    DegenerateRep D(d);
    auto probes = ordinary_monomials(2, 3);
    auto wo = [&](const Weight& e) { return D.witness_ord(e); };
    KOp a = D.rational_dunkl(d->omega(0)), b = D.rational_dunkl(d->omega(1));
    EXPECT_TRUE(compare_k(a * b, b * a, probes, wo).empty());
    // the bare derivation does not commute with a Dunkl operator
    EXPECT_FALSE(compare_k(a * D.derivation(d->omega(1)), D.derivation(d->omega(1)) * a, probes, wo).empty());
}
