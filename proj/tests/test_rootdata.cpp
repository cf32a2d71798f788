#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dahakit/polyrep.hpp"

using namespace dahakit;

TEST(RootDatum, WeylOrdersAndCoxeterNumbers) {
    const std::map<std::string, std::pair<std::size_t, int>> table{
        {"A1", {2, 2}}, {"A2", {6, 3}}, {"A3", {24, 4}}, {"B2", {8, 4}},
        {"C2", {8, 4}}, {"C3", {48, 6}}, {"D4", {192, 6}}, {"G2", {12, 6}}};
    for (const auto& [t, v] : table) {
        auto d = build_root_datum(t);
        EXPECT_EQ(d->weyl_order(), v.first) << t;
        EXPECT_EQ(d->coxeter_number(), v.second) << t;
        // |R+| = n h / 2
        EXPECT_EQ(d->positive_roots().size() * 2, d->rank() * static_cast<std::size_t>(v.second)) << t;
    }
}

TEST(RootDatum, UnknownTypeRejected) { EXPECT_THROW(build_root_datum("E9"), UnsupportedType); }

TEST(RootDatum, FundamentalGroupFromMinuscules) {
    const std::map<std::string, std::size_t> pq{{"A1", 2}, {"A2", 3}, {"A3", 4}, {"B2", 2}, {"G2", 1}, {"D4", 4}};
    for (const auto& [t, order] : pq) EXPECT_EQ(build_root_datum(t)->minuscule().size() + 1, order) << t;
}

TEST(RootDatum, ThetaIsDominantShortRoot) {
    for (const auto& t : RootDatum::supported_types()) {
        auto d = build_root_datum(t);
        const Root& th = d->root(d->theta());
        EXPECT_TRUE(th.positive) << t;
        EXPECT_EQ(th.nu, 1) << t;
        EXPECT_EQ(d->dominant(d->theta()), d->theta()) << t;
    }
}

TEST(RootDatum, CoxeterNumberFromRhoAndTheta) {
    // h = 1 + (rho, theta^vee) with theta^vee the maximal coroot
    for (const auto& t : RootDatum::supported_types()) {
        auto d = build_root_datum(t);
        Rational pair = d->inner(d->rho(), d->theta());
        EXPECT_EQ(Rational(d->coxeter_number()), Rational(1) + pair) << t;
    }
}

TEST(RootDatum, BraidOrders) {
    EXPECT_EQ(build_root_datum("A2")->braid_order(1, 2), 3);
    EXPECT_EQ(build_root_datum("B2")->braid_order(1, 2), 4);
    EXPECT_EQ(build_root_datum("G2")->braid_order(1, 2), 6);
    EXPECT_EQ(build_root_datum("A1")->braid_order(0, 1), 0);
    EXPECT_EQ(build_root_datum("A2")->braid_order(0, 1), 3);
}

TEST(RootDatum, SignIsMultiplicative) {
    for (const char* t : {"A2", "B2", "G2", "A3"}) {
        auto d = build_root_datum(t);
        const auto& W = d->weyl_elements();
        for (std::size_t a = 0; a < W.size(); a += 3)
            for (std::size_t b = 0; b < W.size(); b += 2)
                EXPECT_EQ(d->sign(W[a] * W[b]), d->sign(W[a]) * d->sign(W[b])) << t;
    }
}

TEST(RootDatum, RhoOrbitIsRegular) {
    for (const auto& t : RootDatum::supported_types()) {
        auto d = build_root_datum(t);
        EXPECT_EQ(d->orbit(d->rho()).size(), d->weyl_order()) << t;
    }
}

// property: reduced words evaluate back and have the length of the element
TEST(RootDatum, ReducedWordsRoundTrip) {
    std::mt19937 gen(5);
    for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
        auto d = build_root_datum(t);
        for (const auto& x : random_affine_elements(*d, gen, 40, 7)) {
            auto w = d->reduced_word(x);
            EXPECT_EQ(d->evaluate(w), x) << t;
            EXPECT_EQ(static_cast<int>(w.length()), d->length(x)) << t;
        }
    }
}

TEST(RootDatum, TranslationLength) {
    // l(t_b) = sum_{alpha>0} |(b, alpha^vee)| for dominant b
    for (const char* t : {"A2", "B2", "G2"}) {
        auto d = build_root_datum(t);
        Weight b = d->rho();
        int want = 0;
        for (const auto& a : d->positive_roots()) want += std::abs(d->pair_coroot(b, a));
        EXPECT_EQ(d->length(d->translation(b)), want) << t;
    }
}

TEST(RootDatum, PiPermutesAffineNodes) {
    auto d = build_root_datum("A2");
    auto perm = d->pi_node_permutation(1);
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(d->length(d->pi(1)), 0);
}
