#include <gtest/gtest.h>

#include "dahakit/lusztig.hpp"

using namespace dahakit;

namespace {

// Akiyama-Tanigawa; yields B_n with B_1 = +1/2
std::vector<Rational> akiyama_tanigawa(int K) {
    std::vector<Rational> a(static_cast<std::size_t>(K) + 1), out;
    for (int m = 0; m <= K; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            auto J = static_cast<std::size_t>(j);
            a[J - 1] = j * (a[J - 1] - a[J]);
        }
        out.push_back(a[0]);
    }
    return out;
}

YScalar y_pow(int e) { return e == 0 ? YScalar(1) : YScalar::var(0, e); }

}  // namespace

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
    auto B = bernoulli_plus(14);
    auto want = akiyama_tanigawa(14);
    for (std::size_t m = 0; m < B.size(); ++m) EXPECT_EQ(B[m], want[m]) << m;
    EXPECT_EQ(B[1], Rational(1, 2));
    EXPECT_EQ(B[2], Rational(1, 6));
    EXPECT_EQ(B[3], Rational(0));
}

TEST(Bernoulli, InverseOneMinusExpClosedForm) {
    const int K = 6;
    auto c = inverse_one_minus_exp(K);
    auto B = bernoulli_plus(K + 1);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(K + 2));
    // c_j = B+_{j+1} y^j / (j+1)!
    for (int j = -1; j <= K; ++j)
        EXPECT_EQ(c[static_cast<std::size_t>(j + 1)], YScalar(B[static_cast<std::size_t>(j + 1)] / factorial(j + 1)) * y_pow(j))
            << j;
    // and times (1 - e^{-w y}) it is 1 up to order K
    for (int p = 0; p <= K; ++p) {
        YScalar acc(0);
        for (int m = 1; m <= p + 1; ++m) {
            YScalar am = YScalar(Rational(m % 2 ? 1 : -1) / factorial(m)) * y_pow(m);
            acc += am * c[static_cast<std::size_t>(p - m + 1)];
        }
        EXPECT_EQ(acc, YScalar(p == 0 ? 1 : 0)) << p;
    }
}

TEST(Lusztig, A1SuitePasses) {
    LusztigOptions o;
    o.trunc = 4;
    o.degree = 4;
    Report r = lusztig_suite(build_root_datum("A1"), o);
    for (const auto& c : r.checks) EXPECT_NE(c.status, Status::Fail) << c.name << " " << c.witness;
    EXPECT_TRUE(r.passed());
    EXPECT_NE(r.find("routes_agree[omega1]"), nullptr);
}
