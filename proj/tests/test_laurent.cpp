#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dahakit/laurent.hpp"

using namespace dahakit;

namespace {

using RP = LaurentPoly<Rational>;
using Oracle = std::map<Weight, Rational>;

RP random_poly(std::mt19937& gen, std::size_t rank, Oracle& oracle) {
    std::uniform_int_distribution<int> e(-2, 2), c(-4, 4), len(0, 5);
    std::vector<RP::Term> ts;
    for (int k = len(gen); k > 0; --k) {
        Weight w;
        for (std::size_t i = 0; i < rank; ++i) w[i] = e(gen);
        Rational v(c(gen));
        ts.push_back({w, v});
        oracle[w] += v;
    }
    return RP::from_terms(ts);
}

Oracle clean(Oracle o) {
    for (auto it = o.begin(); it != o.end();)
        it = sgn(it->second) == 0 ? o.erase(it) : std::next(it);
    return o;
}

Oracle as_map(const RP& p) {
    Oracle o;
    for (const auto& [w, c] : p.terms()) o[w] = c;
    return o;
}

}  // namespace

// property: sparse arithmetic agrees with a dictionary oracle
TEST(SparsePoly, MatchesDictionaryOracle) {
    std::mt19937 gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        Oracle oa, ob;
        RP a = random_poly(gen, 2, oa), b = random_poly(gen, 2, ob);
        Oracle sum = oa, prod;
        for (const auto& [w, c] : ob) sum[w] += c;
        for (const auto& [wa, ca] : oa)
            for (const auto& [wb, cb] : ob) prod[wa + wb] += ca * cb;
        EXPECT_EQ(as_map(a + b), clean(sum));
        EXPECT_EQ(as_map(a * b), clean(prod));
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(SparsePoly, ShiftAndCoefficients) {
    Weight w = make_weight({1, -1});
    RP p = RP::monomial(w, Rational(3)) + RP(Rational(2));
    RP s = p.shifted(make_weight({0, 2}));
    EXPECT_EQ(s.coeff(make_weight({1, 1})), Rational(3));
    EXPECT_EQ(s.coeff(make_weight({0, 2})), Rational(2));
    EXPECT_EQ(s.coeff(Weight{}), Rational(0));
}

TEST(ProbeSets, Counts) {
    EXPECT_EQ(ProbeBox(2, 3).weights.size(), 49u);
    EXPECT_EQ(ProbeBox(3, 1).weights.size(), 27u);
    // |{b in Z^2 : |b1| + |b2| <= d}| = 2d^2 + 2d + 1
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(laurent_ball(2, d).size(), static_cast<std::size_t>(2 * d * d + 2 * d + 1));
    // monomials of degree <= d in n variables: C(n+d, n)
    EXPECT_EQ(ordinary_monomials(2, 5).size(), 21u);
    EXPECT_EQ(ordinary_monomials(3, 2).size(), 10u);
}

TEST(Discriminant, ExpandsWithoutCancellationOfExtremes) {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        auto d = build_root_datum(t);
        std::size_t raw = 0;
        auto delta = build_discriminant(d, &raw);
        EXPECT_EQ(raw, std::size_t(1) << d->positive_roots().size()) << t;
        // extreme monomials X_{rho} and X_{-rho}
        EXPECT_FALSE(is_zero(delta.coeff(d->rho()))) << t;
        EXPECT_FALSE(is_zero(delta.coeff(-d->rho()))) << t;
    }
}

TEST(QtParams, HalfPowers) {
    auto d = build_root_datum("B2");
    QtParams P{d};
    EXPECT_EQ(P.q_pow(Rational(1)) * P.q_pow(Rational(-1)), QtScalar(1));
    EXPECT_EQ(QtParams::t_half(1) * QtParams::t_half_pow(1, -1), QtScalar(1));
    EXPECT_NE(QtParams::t_half(1), QtParams::t_half(2));
}
