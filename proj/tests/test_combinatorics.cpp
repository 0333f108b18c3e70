#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <twistderiv/combinatorics.hpp>
#include <twistderiv/error.hpp>

using namespace twistderiv;

namespace {

// B by brute force: all of P(k, n), filtered on the parity vector (1^r 0^{n-r}).
BigInt brute_B(std::size_t n, unsigned k, std::size_t r)
{
    BigInt total = 0;
    for_each_partition(k, n, [&](const OrderedPartition& p) {
        for (std::size_t i = 0; i < n; ++i) {
            if (p.parts[i] % 2 != (i < r ? 1u : 0u)) {
                return;
            }
        }
        total += multinomial(p);
    });
    return total;
}

// Block definition: cut {1..r} into [1,i_1], [i_1,i_2], ..., [i_m, r] and sum the
// sizes of the 2nd, 4th, ... blocks.
std::size_t signature_by_blocks(const IndexSubset& s)
{
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t start = 1;
    for (auto i : s.indices()) {
        blocks.emplace_back(start, i);
        start = i;
    }
    blocks.emplace_back(start, s.ambient());
    std::size_t total = 0;
    for (std::size_t b = 1; b < blocks.size(); b += 2) {
        total += blocks[b].second - blocks[b].first + 1;
    }
    return total;
}

IndexSubset subset_from_mask(std::size_t r, unsigned mask)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r; ++i) {
        if (mask & (1u << i)) {
            idx.push_back(i + 1);
        }
    }
    return IndexSubset(r, idx);
}

BigInt power(std::size_t base, unsigned e)
{
    BigInt out = 1;
    for (unsigned i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

} // namespace

TEST(Multinomial, Examples)
{
    const std::vector<unsigned> a{1, 2, 0};
    const std::vector<unsigned> b{1, 1, 1};
    const std::vector<unsigned> c{0, 0};
    EXPECT_EQ(multinomial(3, a), 3);
    EXPECT_EQ(multinomial(3, b), 6);
    EXPECT_EQ(multinomial(0, c), 1);
}

TEST(Multinomial, SumMismatch)
{
    const std::vector<unsigned> a{1, 1};
    try {
        multinomial(3, a);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::partition_sum_mismatch);
    }
}

TEST(Multinomial, ExactBeyond64Bits)
{
    // 25! / (5!)^5 = 623360743125120
    const std::vector<unsigned> parts(5, 5);
    EXPECT_EQ(multinomial(25, parts), BigInt("623360743125120"));
    const std::vector<unsigned> ones(30, 1);
    EXPECT_EQ(multinomial(30, ones), factorial(30));
    EXPECT_EQ(factorial(30), BigInt("265252859812191058636308480000000"));
}

TEST(Partitions, Examples)
{
    const auto p22 = enumerate_partitions(2, 2);
    ASSERT_EQ(p22.size(), 3u);
    EXPECT_EQ(p22[0].parts, (std::vector<unsigned>{2, 0}));
    EXPECT_EQ(p22[1].parts, (std::vector<unsigned>{1, 1}));
    EXPECT_EQ(p22[2].parts, (std::vector<unsigned>{0, 2}));

    const auto p03 = enumerate_partitions(0, 3);
    ASSERT_EQ(p03.size(), 1u);
    EXPECT_EQ(p03[0].parts, (std::vector<unsigned>{0, 0, 0}));

    EXPECT_EQ(enumerate_partitions(3, 2).size(), 4u);
}

TEST(Partitions, CountUniquenessAndMultinomialTheorem)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (unsigned k = 0; k <= 8; ++k) {
            std::set<std::vector<unsigned>> seen;
            BigInt total = 0;
            for_each_partition(k, n, [&](const OrderedPartition& p) {
                unsigned sum = 0;
                for (auto v : p.parts) {
                    sum += v;
                }
                EXPECT_EQ(sum, k);
                EXPECT_TRUE(seen.insert(p.parts).second);
                total += multinomial(p);
            });
            EXPECT_EQ(BigInt(seen.size()), binomial(k + n - 1, n - 1)) << n << " " << k;
            EXPECT_EQ(total, power(n, k));
        }
    }
}

TEST(CoefficientB, Examples)
{
    for (std::size_t n = 3; n <= 10; ++n) {
        EXPECT_EQ(coefficient_B(n, 3, 3), 6);
    }
    for (std::size_t n = 1; n <= 10; ++n) {
        EXPECT_EQ(coefficient_B(n, 3, 1), BigInt(3 * n - 2));
        EXPECT_EQ(coefficient_B(n, 2, 0), BigInt(n));
    }
    EXPECT_EQ(coefficient_B(4, 3, 2), 0);
    EXPECT_EQ(coefficient_B(1, 2, 0), 1);
    EXPECT_EQ(coefficient_B(2, 2, 0), 2);
    EXPECT_EQ(coefficient_B(2, 2, 2), 2);
}

TEST(CoefficientB, InvalidRange)
{
    EXPECT_THROW(coefficient_B(3, 2, 4), error);
    EXPECT_THROW(coefficient_B(2, 5, 3), error);
    EXPECT_THROW(coefficient_B(0, 2, 0), error);
}

TEST(CoefficientB, MatchesBruteForceAndIsPatternIndependent)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        for (unsigned k = 0; k <= 7; ++k) {
            for (std::size_t r = k % 2; r <= std::min<std::size_t>(k, n); r += 2) {
                const auto B = coefficient_B(n, k, r);
                EXPECT_EQ(B, brute_B(n, k, r)) << n << " " << k << " " << r;
                // Any parity vector with r ones gives the same sum.
                if (r < n && r > 0) {
                    BigInt shifted = 0;
                    for_each_partition(k, n, [&](const OrderedPartition& p) {
                        for (std::size_t i = 0; i < n; ++i) {
                            if (p.parts[i] % 2 != (i >= n - r ? 1u : 0u)) {
                                return;
                            }
                        }
                        shifted += multinomial(p);
                    });
                    EXPECT_EQ(shifted, B);
                }
            }
        }
    }
}

TEST(CoefficientB, Identities)
{
    for (unsigned k = 0; k <= 10; ++k) {
        for (std::size_t n = std::max<std::size_t>(k, 1); n <= k + 2; ++n) {
            EXPECT_EQ(coefficient_B(n, k, k), factorial(k));
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        for (unsigned k = 0; k <= 8; ++k) {
            BigInt total = 0;
            for (std::size_t r = k % 2; r <= std::min<std::size_t>(k, n); r += 2) {
                total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)) * coefficient_B(n, k, r);
            }
            EXPECT_EQ(total, power(n, k)) << n << " " << k;
        }
    }
}

TEST(CoefficientB, LargeOrderNeedsBigIntegers)
{
    // 20! alone exceeds 2^61; the parity sums go beyond 64 bits for n = 12.
    EXPECT_GT(coefficient_B(12, 20, 12), 0);
    BigInt total = 0;
    for (std::size_t r = 0; r <= 12; r += 2) {
        total += binomial(12, static_cast<unsigned>(r)) * coefficient_B(12, 20, r);
    }
    EXPECT_EQ(total, power(12, 20));
    EXPECT_GT(total, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Subsets, EvenSubsets)
{
    const auto e2 = even_subsets(2);
    ASSERT_EQ(e2.size(), 2u);
    EXPECT_TRUE(e2[0].empty());
    EXPECT_EQ(e2[1].indices(), (std::vector<std::size_t>{1, 2}));

    const auto e3 = even_subsets(3);
    ASSERT_EQ(e3.size(), 4u);
    EXPECT_TRUE(e3[0].empty());
    EXPECT_EQ(e3[1].indices(), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(e3[2].indices(), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(e3[3].indices(), (std::vector<std::size_t>{2, 3}));

    const auto e0 = even_subsets(0);
    ASSERT_EQ(e0.size(), 1u);
    EXPECT_TRUE(e0[0].empty());

    for (std::size_t r = 1; r <= 12; ++r) {
        EXPECT_EQ(even_subsets(r).size(), std::size_t{1} << (r - 1));
    }
}

TEST(Subsets, OfSize)
{
    const auto s = subsets_of_size(3, 2);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].indices(), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(s[1].indices(), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(s[2].indices(), (std::vector<std::size_t>{2, 3}));

    const auto z = subsets_of_size(4, 0);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_TRUE(z[0].empty());

    const auto f = subsets_of_size(5, 5);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].indices(), (std::vector<std::size_t>{1, 2, 3, 4, 5}));

    EXPECT_THROW(subsets_of_size(3, 4), error);
    for (unsigned n = 0; n <= 9; ++n) {
        for (unsigned r = 0; r <= n; ++r) {
            EXPECT_EQ(BigInt(subsets_of_size(n, r).size()), binomial(n, r));
        }
    }
}

TEST(Subsets, ComplementAndValidation)
{
    const IndexSubset s(5, {2, 4});
    EXPECT_EQ(s.complement().indices(), (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_THROW(IndexSubset(3, {2, 2}), error);
    EXPECT_THROW(IndexSubset(3, {0}), error);
    EXPECT_THROW(IndexSubset(3, {4}), error);
}

TEST(Signature, Examples)
{
    EXPECT_EQ(signature(IndexSubset(2, {1, 2})), 2u);
    EXPECT_EQ(signature(IndexSubset(3, {1, 3})), 3u);
    EXPECT_EQ(signature(IndexSubset(3, {})), 0u);
    EXPECT_EQ(signature(IndexSubset(7, {})), 0u);
    // Odd branch: (i_2 - i_1 + 1) + (r - i_3 + 1).
    EXPECT_EQ(signature(IndexSubset(6, {1, 2, 4})), 2u + 3u);
}

TEST(Signature, AgreesWithBlockDefinition)
{
    for (std::size_t r = 0; r <= 10; ++r) {
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            const auto s = subset_from_mask(r, mask);
            EXPECT_EQ(signature(s), signature_by_blocks(s)) << r << " " << mask;
        }
    }
}

TEST(AlternatingLength, Examples)
{
    const std::vector<double> ls{0.0, 0.7, 1.5};
    EXPECT_DOUBLE_EQ(alternating_length(IndexSubset(3, {1, 2}), ls), 0.7);
    EXPECT_EQ(alternating_length(IndexSubset(3, {}), ls), 0.0);
    EXPECT_DOUBLE_EQ(alternating_length(IndexSubset(3, {1, 3}), ls), 1.5);
    const std::vector<double> short_ls{0.0};
    EXPECT_THROW(alternating_length(IndexSubset(3, {1, 2}), short_ls), error);
}

TEST(AlternatingLength, AgreesWithDirectSum)
{
    std::vector<double> ls(10);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        ls[i] = 0.37 * static_cast<double>(i * i) + 0.1;
    }
    for (std::size_t r = 0; r <= 10; ++r) {
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            const auto s = subset_from_mask(r, mask);
            double direct = 0.0;
            int sgn = -1;
            for (std::size_t i = 1; i <= r; ++i) {
                if (mask & (1u << (i - 1))) {
                    direct += sgn * ls[i - 1];
                    sgn = -sgn;
                }
            }
            EXPECT_NEAR(alternating_length(s, ls), direct, 1e-13);
        }
    }
}
