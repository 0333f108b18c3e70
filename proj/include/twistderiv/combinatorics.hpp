#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistderiv {

using BigInt = boost::multiprecision::cpp_int;

/// An ordered subset I = (i_1 < ... < i_m) of {1..r}, 1-based.
class IndexSubset {
public:
    IndexSubset() = default;

    // Throws invalid_range unless the indices are strictly increasing within [1, r].
    IndexSubset(std::size_t r, std::vector<std::size_t> indices);

    [[nodiscard]] std::size_t ambient() const noexcept { return r_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
    [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    [[nodiscard]] bool contains(std::size_t i) const noexcept;

    // The complementary subset of {1..r}.
    [[nodiscard]] IndexSubset complement() const;

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

private:
    std::size_t r_ = 0;
    std::vector<std::size_t> indices_;
};

/// An ordered tuple of n non-negative integers summing to k.
struct OrderedPartition {
    unsigned k = 0;
    std::vector<unsigned> parts;

    [[nodiscard]] std::size_t n() const noexcept { return parts.size(); }
    // Number of odd parts.
    [[nodiscard]] std::size_t odd_count() const noexcept;
    // Parity vector ([p_1], ..., [p_n]).
    [[nodiscard]] std::vector<unsigned> parity() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned r);

// k! / (p_1! ... p_n!). Throws partition_sum_mismatch if the parts do not sum to k.
BigInt multinomial(unsigned k, std::span<const unsigned> parts);
BigInt multinomial(const OrderedPartition& p);

// Visits every ordered n-tuple of non-negative integers summing to k exactly once,
// in lexicographically decreasing order of (p_1, p_2, ...).
void for_each_partition(unsigned k, std::size_t n, const std::function<void(const OrderedPartition&)>& visit);
std::vector<OrderedPartition> enumerate_partitions(unsigned k, std::size_t n);

/// Sum of multinomials k!/(q_1!...q_n!) over ordered partitions q of k into n
/// parts whose first r parts are odd and remaining n-r parts are even.
///
/// Returns 0 when r and k have different parity. Throws invalid_range for
/// r > k, r > n or n == 0. Results are memoized per (n, k, r); the memo is
/// shared and guarded, so concurrent callers are fine.
BigInt coefficient_B(std::size_t n, unsigned k, std::size_t r);

// All subsets of {1..r} of even cardinality, starting with the empty set.
std::vector<IndexSubset> even_subsets(std::size_t r);

// All size-r subsets of {1..n} in lexicographic order. Throws invalid_range for r > n.
std::vector<IndexSubset> subsets_of_size(std::size_t n, std::size_t r);
void for_each_subset_of_size(std::size_t n, std::size_t r, const std::function<void(const IndexSubset&)>& visit);

// Total size of the even-numbered blocks [i_1,i_2], [i_3,i_4], ... cut from {1..r};
// an odd-size subset closes with the block [i_m, r]. Zero for the empty subset.
std::size_t signature(const IndexSubset& subset);

// -l_{i_1} + l_{i_2} - l_{i_3} + ... ; lengths is indexed 1-based through the subset.
double alternating_length(const IndexSubset& subset, std::span<const double> lengths);

} // namespace twistderiv
