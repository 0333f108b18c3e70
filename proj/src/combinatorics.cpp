#include <twistderiv/combinatorics.hpp>
#include <twistderiv/error.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include <fmt/core.h>

namespace twistderiv {

IndexSubset::IndexSubset(std::size_t r, std::vector<std::size_t> indices) : r_(r), indices_(std::move(indices))
{
    for (std::size_t j = 0; j < indices_.size(); ++j) {
        const auto i = indices_[j];
        if (i < 1 || i > r_ || (j > 0 && i <= indices_[j - 1])) {
            throw error(errc::invalid_range,
                        fmt::format("subset indices must be strictly increasing within 1..{}", r_));
        }
    }
}

bool IndexSubset::contains(std::size_t i) const noexcept
{
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

IndexSubset IndexSubset::complement() const
{
    std::vector<std::size_t> rest;
    rest.reserve(r_ - indices_.size());
    for (std::size_t i = 1; i <= r_; ++i) {
        if (!contains(i)) {
            rest.push_back(i);
        }
    }
    return IndexSubset(r_, std::move(rest));
}

std::size_t OrderedPartition::odd_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(parts.begin(), parts.end(), [](unsigned p) { return p % 2 == 1; }));
}

std::vector<unsigned> OrderedPartition::parity() const
{
    std::vector<unsigned> out(parts.size());
    std::transform(parts.begin(), parts.end(), out.begin(), [](unsigned p) { return p % 2; });
    return out;
}

BigInt factorial(unsigned k)
{
    BigInt out = 1;
    for (unsigned i = 2; i <= k; ++i) {
        out *= i;
    }
    return out;
}

BigInt binomial(unsigned n, unsigned r)
{
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    BigInt out = 1;
    for (unsigned i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

BigInt multinomial(unsigned k, std::span<const unsigned> parts)
{
    const auto total = std::accumulate(parts.begin(), parts.end(), 0ull);
    if (total != k) {
        throw error(errc::partition_sum_mismatch, fmt::format("parts sum to {}, expected {}", total, k));
    }
    // Build as a product of binomials to keep intermediates small.
    BigInt out = 1;
    unsigned running = 0;
    for (auto p : parts) {
        running += p;
        out *= binomial(running, p);
    }
    return out;
}

BigInt multinomial(const OrderedPartition& p)
{
    return multinomial(p.k, p.parts);
}

namespace {

void partitions_rec(unsigned remaining, std::size_t pos, OrderedPartition& cur,
                    const std::function<void(const OrderedPartition&)>& visit)
{
    if (pos + 1 == cur.parts.size()) {
        cur.parts[pos] = remaining;
        visit(cur);
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        cur.parts[pos] = v;
        partitions_rec(remaining - v, pos + 1, cur, visit);
    }
}

// Sum of multinomials over the partitions of `remaining` into parts[pos..] that
// respect the parity pattern: positions < odd_upto are odd, the rest even.
// Carries the running product of binomials instead of recomputing k!/prod(p!).
BigInt parity_sum(unsigned remaining, std::size_t pos, std::size_t n, std::size_t odd_upto)
{
    const unsigned want = pos < odd_upto ? 1u : 0u;
    if (pos + 1 == n) {
        return remaining % 2 == want ? BigInt(1) : BigInt(0);
    }
    BigInt total = 0;
    for (unsigned v = want; v <= remaining; v += 2) {
        auto tail = parity_sum(remaining - v, pos + 1, n, odd_upto);
        if (tail != 0) {
            total += binomial(remaining, v) * tail;
        }
    }
    return total;
}

} // namespace

void for_each_partition(unsigned k, std::size_t n, const std::function<void(const OrderedPartition&)>& visit)
{
    if (n == 0) {
        throw error(errc::invalid_range, "partitions need at least one part");
    }
    OrderedPartition cur{k, std::vector<unsigned>(n, 0)};
    partitions_rec(k, 0, cur, visit);
}

std::vector<OrderedPartition> enumerate_partitions(unsigned k, std::size_t n)
{
    std::vector<OrderedPartition> out;
    for_each_partition(k, n, [&](const OrderedPartition& p) { out.push_back(p); });
    return out;
}

BigInt coefficient_B(std::size_t n, unsigned k, std::size_t r)
{
    if (n == 0 || r > k || r > n) {
        throw error(errc::invalid_range, fmt::format("B(n={}, k={}, r={}) needs n >= 1 and r <= min(k, n)", n, k, r));
    }
    if (r % 2 != k % 2) {
        return 0;
    }

    static std::mutex mutex;
    static std::map<std::tuple<std::size_t, unsigned, std::size_t>, BigInt> memo;
    const auto key = std::make_tuple(n, k, r);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
    }
    auto value = parity_sum(k, 0, n, r);
    std::lock_guard lock(mutex);
    memo.emplace(key, value);
    return value;
}

void for_each_subset_of_size(std::size_t n, std::size_t r, const std::function<void(const IndexSubset&)>& visit)
{
    if (r > n) {
        throw error(errc::invalid_range, fmt::format("no subsets of size {} in 1..{}", r, n));
    }
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{1});
    while (true) {
        visit(IndexSubset(n, idx));
        // Advance to the next combination in lexicographic order.
        std::size_t j = r;
        while (j > 0 && idx[j - 1] == n - r + j) {
            --j;
        }
        if (j == 0) {
            return;
        }
        ++idx[j - 1];
        for (std::size_t m = j; m < r; ++m) {
            idx[m] = idx[m - 1] + 1;
        }
    }
}

std::vector<IndexSubset> subsets_of_size(std::size_t n, std::size_t r)
{
    std::vector<IndexSubset> out;
    for_each_subset_of_size(n, r, [&](const IndexSubset& s) { out.push_back(s); });
    return out;
}

std::vector<IndexSubset> even_subsets(std::size_t r)
{
    std::vector<IndexSubset> out;
    for (std::size_t m = 0; m <= r; m += 2) {
        for_each_subset_of_size(r, m, [&](const IndexSubset& s) { out.push_back(s); });
    }
    return out;
}

std::size_t signature(const IndexSubset& subset)
{
    const auto& idx = subset.indices();
    std::size_t s = 0;
    std::size_t j = 0;
    for (; j + 1 < idx.size(); j += 2) {
        s += idx[j + 1] - idx[j] + 1;
    }
    if (j < idx.size()) {
        s += subset.ambient() - idx[j] + 1;
    }
    return s;
}

double alternating_length(const IndexSubset& subset, std::span<const double> lengths)
{
    double out = 0.0;
    bool negative = true;
    for (auto i : subset.indices()) {
        if (i > lengths.size()) {
            throw error(errc::index_out_of_range, fmt::format("index {} outside 1..{}", i, lengths.size()));
        }
        out += negative ? -lengths[i - 1] : lengths[i - 1];
        negative = !negative;
    }
    return out;
}

} // namespace twistderiv
