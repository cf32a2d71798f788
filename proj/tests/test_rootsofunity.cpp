#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "dahakit/rootsofunity.hpp"

using namespace dahakit;

namespace {

// orbits of W on P/NP by union-find over the simple reflections only
std::size_t orbits_by_union_find(const RootDatum& d, long N) {
    const std::size_t n = d.rank();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= static_cast<std::size_t>(N);
    auto encode = [&](const Weight& c) {
        std::size_t k = 0;
        for (std::size_t i = n; i-- > 0;) k = k * static_cast<std::size_t>(N) + static_cast<std::size_t>(pos_mod(c[i], N));
        return k;
    };
    std::vector<std::size_t> parent(dim);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (std::size_t k = 0; k < dim; ++k) {
        Weight c;
        std::size_t r = k;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = static_cast<int>(r % static_cast<std::size_t>(N));
            r /= static_cast<std::size_t>(N);
        }
        for (std::size_t i = 1; i <= n; ++i) parent[root(k)] = root(encode(d.s(i) * c));
    }
    std::size_t count = 0;
    for (std::size_t k = 0; k < dim; ++k) count += root(k) == k;
    return count;
}

}  // namespace

TEST(Torus, DimensionIsOnePlusHToTheRank) {
    const std::map<std::string, std::size_t> want{{"A1", 3}, {"A2", 16}, {"B2", 25}, {"G2", 49}};
    for (const auto& [t, dim] : want) {
        auto d = build_root_datum(t);
        EXPECT_EQ(TorusModule(d, 1 + d->coxeter_number()).dim(), dim) << t;
    }
}

TEST(Torus, WeylRelationsByHand) {
    auto d = build_root_datum("A2");
    TorusModule V(d, 4);
    Weight a = d->omega(0), b = d->omega(1);
    using M = TorusModule::M;
    EXPECT_EQ(V.X(a).pow(4), M::identity(V.dim()));
    EXPECT_EQ(V.Y(b).pow(4), M::identity(V.dim()));
    // Y_b X_a = q^{(a,b)} X_a Y_b
    M lhs = V.Y(b) * V.X(a);
    M rhs = M::scalar(V.dim(), V.q_pow_inner(a, b)) * V.X(a) * V.Y(b);
    EXPECT_EQ(lhs, rhs);
    EXPECT_NE(V.Y(b) * V.X(a), V.X(a) * V.Y(b));
}

TEST(Torus, RejectsNonCoprimeModulus) {
    EXPECT_THROW(TorusModule(build_root_datum("A2"), 3), IncompatibleParameters);
    EXPECT_THROW(TorusModule(build_root_datum("B2"), 4), IncompatibleParameters);
}

// property: census orbit count equals union-find and Burnside counts
TEST(OrbitCensus, AgreesWithIndependentCounts) {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        auto d = build_root_datum(t);
        for (long N : {5L, 7L, 1L + d->coxeter_number()}) {
            if (std::gcd(N, d->m()) != 1) continue;
            auto oc = orbit_census(*d, N);
            EXPECT_EQ(oc.orbits, orbits_by_union_find(*d, N)) << t << " N=" << N;
            std::size_t total = std::accumulate(oc.sizes.begin(), oc.sizes.end(), std::size_t(0));
            EXPECT_EQ(total, static_cast<std::size_t>(std::pow(N, d->rank()))) << t;
        }
        auto oc = orbit_census(*d, 1 + d->coxeter_number());
        EXPECT_EQ(oc.free_orbits, 1u) << t;
        EXPECT_TRUE(oc.free_orbit_contains_rho) << t;
        EXPECT_EQ(sign_multiplicity(*d, 1 + d->coxeter_number()), Rational(1)) << t;
        EXPECT_EQ(displayed_identity_witness(*d, 1 + d->coxeter_number()), "") << t;
    }
    EXPECT_EQ(sign_multiplicity(*build_root_datum("A2"), 2), Rational(0));
}

TEST(Modular, CompositeModulusRejected) {
    EXPECT_THROW(ModularModule(1, 4), IncompatibleParameters);
    RootsOfUnityOptions o;
    o.modulus = 5;
    EXPECT_THROW(modular_suite(build_root_datum("A1"), o), IncompatibleParameters);
}

TEST(RootsOfUnity, SmallSuitesPass) {
    for (const char* t : {"A1", "A2"}) {
        Report r = roots_of_unity_suite(build_root_datum(t));
        for (const auto& c : r.checks) EXPECT_NE(c.status, Status::Fail) << t << " " << c.name << " " << c.witness;
    }
    // the modular mode needs 1 + h prime
    for (const char* t : {"A1", "B2"}) {
        Report m = modular_suite(build_root_datum(t));
        for (const auto& c : m.checks) EXPECT_NE(c.status, Status::Fail) << t << " " << c.name << " " << c.witness;
    }
    EXPECT_THROW(modular_suite(build_root_datum("A2")), IncompatibleParameters);
}
