#include <gtest/gtest.h>

#include <singular_lab/singular_lab.hpp>

#include "oracles.hpp"

using namespace singular_lab;

TEST(Dyson, Examples)
{
    EXPECT_EQ(dyson(-1, Partition{2, 2, 1}), (Partition{1, 1, 1}));
    EXPECT_TRUE(dyson(1, Partition{}).empty());
    EXPECT_EQ(dyson(2, Partition{1}), Partition{2});
    EXPECT_EQ(dyson(4, Partition{}), Partition{3});
    EXPECT_THROW(dyson(0, Partition{}), domain_error);
    EXPECT_THROW(dyson(0, Partition{3}), domain_error);
}

TEST(Dyson, FrobeniusExamples)
{
    const FrobeniusSymbol gamma3({13, 11, 9, 8, 4, 3, 2, 1, 0}, {24, 21, 20, 17, 15, 13, 12, 8, 4});
    EXPECT_EQ(dyson_frobenius(-11, gamma3),
              FrobeniusSymbol({12, 11, 9, 7, 6, 2, 1, 0}, {23, 22, 19, 17, 15, 14, 10, 6}));
    EXPECT_TRUE(dyson_frobenius(-1, FrobeniusSymbol({0}, {1})).empty());
    EXPECT_EQ(dyson_frobenius(-1, FrobeniusSymbol({1, 0}, {2, 0})), FrobeniusSymbol({0}, {2}));
}

TEST(Dyson, CaseworkMatchesPartitionRoute)
{
    for (int n = 0; n <= 14; ++n) {
        for (const auto &raw : oracle::all_partitions(n)) {
            const Partition p(raw);
            for (long long r = p.rank(); r <= p.rank() + 6; ++r) {
                if (p.empty() && r <= 0) {
                    EXPECT_THROW(dyson(r, p), domain_error);
                    EXPECT_THROW(dyson_frobenius(r, to_frobenius(p)), domain_error);
                    continue;
                }
                const Partition q = dyson(r, p);
                ASSERT_EQ(dyson_frobenius(r, to_frobenius(p)), to_frobenius(q));
                ASSERT_EQ(q.weight(), n + r - 1);
                ASSERT_GE(q.rank(), r - 2);
            }
        }
    }
}

TEST(DysonInverse, Examples)
{
    EXPECT_EQ(dyson_inverse(-1, Partition{1, 1, 1}), (Partition{2, 2, 1}));
    EXPECT_EQ(to_frobenius(dyson_inverse(-1, Partition{})), FrobeniusSymbol({0}, {1}));
    EXPECT_EQ(dyson_inverse_frobenius(-1, FrobeniusSymbol{}), FrobeniusSymbol({0}, {1}));
    EXPECT_TRUE(dyson_inverse(1, Partition{}).empty());
}

// The inverse either returns the unique preimage found by brute force or
// reports that there is none.
TEST(DysonInverse, MatchesBrutePreimage)
{
    for (int n = 0; n <= 10; ++n) {
        for (const auto &raw : oracle::all_partitions(n)) {
            const Partition p(raw);
            for (long long r = -4; r <= 4; ++r) {
                const long long source = n - r + 1;
                std::vector<Partition> preimages;
                if (source >= 0) {
                    for (const auto &q_raw : oracle::all_partitions(static_cast<int>(source))) {
                        const Partition q(q_raw);
                        if (q.rank() <= r && !(q.empty() && r <= 0) && dyson(r, q) == p) {
                            preimages.push_back(q);
                        }
                    }
                }
                ASSERT_LE(preimages.size(), 1u);
                if (preimages.empty()) {
                    ASSERT_THROW(dyson_inverse(r, p), domain_error) << "r=" << r << " n=" << n;
                } else {
                    ASSERT_EQ(dyson_inverse(r, p), preimages.front());
                    ASSERT_EQ(dyson_inverse_frobenius(r, to_frobenius(p)), to_frobenius(preimages.front()));
                }
            }
        }
    }
}

TEST(Shift, Examples)
{
    const FrobeniusSymbol d3({18, 16, 14, 13, 9, 8, 7}, {19, 16, 15, 12, 10, 8, 7});
    EXPECT_EQ(shift(5, d3), FrobeniusSymbol({13, 11, 9, 8, 4, 3, 2}, {24, 21, 20, 17, 15, 13, 12}));
    EXPECT_EQ(shift(0, d3), d3);
    EXPECT_EQ(shift(-5, shift(5, d3)), d3);
    EXPECT_TRUE(shift(3, FrobeniusSymbol{}).empty());
    EXPECT_THROW(shift(8, d3), domain_error);
}

TEST(ShiftedConjugate, Examples)
{
    EXPECT_EQ(shifted_conjugate(2, FrobeniusSymbol({6, 4}, {4, 3})), FrobeniusSymbol({2, 1}, {8, 6}));
    const FrobeniusSymbol d4({31, 28, 27, 25, 23}, {30, 28, 25, 24, 20});
    EXPECT_EQ(shifted_conjugate(7, d4), FrobeniusSymbol({23, 21, 18, 17, 13}, {38, 35, 34, 32, 30}));
    EXPECT_EQ(shifted_conjugate(7, shifted_conjugate(7, d4)), d4);
    EXPECT_TRUE(shifted_conjugate(2, FrobeniusSymbol{}).empty());
    EXPECT_THROW(shifted_conjugate(5, FrobeniusSymbol({6, 4}, {4, 3})), domain_error);
}

TEST(ShiftLaws, Exhaustive)
{
    for (int n = 0; n <= 14; ++n) {
        for (const auto &raw : oracle::all_partitions(n)) {
            const FrobeniusSymbol f = to_frobenius(Partition(raw));
            for (long long u = -4; u <= 4; ++u) {
                try {
                    const FrobeniusSymbol g = shift(u, f);
                    ASSERT_EQ(g.weight(), n);
                    ASSERT_EQ(shift(-u, g), f);
                } catch (const domain_error &) {
                }
                try {
                    const FrobeniusSymbol g = shifted_conjugate(u, f);
                    ASSERT_EQ(g.weight(), n);
                    ASSERT_EQ(shifted_conjugate(u, g), f);
                } catch (const domain_error &) {
                }
            }
        }
    }
}

TEST(Wright, Examples)
{
    const ModulusPair mod(5, 2);
    const WrightOutput out = wright_forward(WrightInput(mod, Partition{37, 27, 22, 7}, Partition{18, 13}));
    EXPECT_EQ(out.kappa, (Partition{30, 25, 25, 15, 10, 10}));
    EXPECT_EQ(out.m, 2);

    const WrightOutput none = wright_forward(WrightInput(mod, Partition{}, Partition{}));
    EXPECT_TRUE(none.kappa.empty());
    EXPECT_EQ(none.m, 0);

    const WrightInput neg(mod, Partition{7}, Partition{18, 13});
    const WrightOutput back = wright_forward(neg);
    EXPECT_EQ(back.m, -1);
    EXPECT_EQ(back.kappa.weight() + wright_offset(mod, -1), neg.weight());
    EXPECT_EQ(wright_inverse(mod, back.kappa, back.m), neg);
}

TEST(Wright, InverseExamples)
{
    const ModulusPair mod(5, 2);
    const WrightInput w = wright_inverse(mod, Partition{5, 5, 5, 5, 5, 5}, 3);
    EXPECT_EQ(w.mu1(), (Partition{17, 12, 7, 2}));
    EXPECT_EQ(w.mu2(), Partition{13});
    const WrightInput empty = wright_inverse(mod, Partition{}, 0);
    EXPECT_TRUE(empty.mu1().empty());
    EXPECT_TRUE(empty.mu2().empty());
    EXPECT_THROW(wright_inverse(mod, Partition{7}, 0), validation_error);
}

TEST(Wright, InputValidation)
{
    const ModulusPair mod(5, 2);
    EXPECT_THROW(WrightInput(mod, Partition{8}, Partition{}), validation_error);
    EXPECT_THROW(WrightInput(mod, Partition{7, 7}, Partition{}), validation_error);
    EXPECT_THROW(WrightInput(mod, Partition{}, Partition{7}), validation_error);
}

TEST(Wright, CountLawAndRoundTrip)
{
    const ModulusPair mod(5, 2);
    for (int n = 0; n <= 60; ++n) {
        std::map<int, long long> by_m;
        for (const auto &[a, b] : oracle::wright_pairs(5, 2, n)) {
            const WrightInput w(mod, Partition(a), Partition(b));
            const WrightOutput out = wright_forward(w);
            ASSERT_EQ(out.m, w.m());
            ASSERT_EQ(out.kappa.weight() + wright_offset(mod, out.m), n);
            for (part_t x : out.kappa) {
                ASSERT_EQ(x % 5, 0);
            }
            ASSERT_EQ(wright_inverse(mod, out.kappa, out.m), w);
            ++by_m[w.m()];
        }
        for (int m = -3; m <= 3; ++m) {
            const long long rest = n - wright_offset(mod, m);
            const long long expected = rest >= 0 && rest % 5 == 0 ? oracle::partitions(static_cast<int>(rest / 5)) : 0;
            ASSERT_EQ(by_m[m], expected) << "n=" << n << " m=" << m;
        }
    }
}
