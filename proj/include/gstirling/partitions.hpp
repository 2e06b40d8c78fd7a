#pragma once

#include "gstirling/exact.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace gstirling {

// Linear partition: a nonincreasing sequence of positive parts. The empty
// partition is valid; it has length 0 and part-product 1.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws std::invalid_argument

    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    BigInt product() const;            // pi(rho)
    int multiplicity(int part) const;  // m_i(rho)
    const std::vector<int>& parts() const { return parts_; }

    // Partition with `part` adjoined (it must be >= the current largest).
    Partition with_part(int part) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Fixed-length sequence of nonnegative integers with a declared total.
class Composition {
public:
    Composition(std::vector<int> entries, int declared_total);  // validates the sum

    int slots() const { return static_cast<int>(entries_.size()); }
    int total() const { return total_; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> entries_;
    int total_ = 0;
};

// All streams below yield lazily, in lexicographically decreasing order on
// the part/entry sequence, each element exactly once.

// Partitions with exactly k_parts parts, every part <= max_part.
class BoundedPartitionStream {
public:
    BoundedPartitionStream(int k_parts, int max_part);
    std::optional<Partition> next();

private:
    std::vector<int> cur_;
    bool done_ = false;
    bool pending_ = false;  // cur_ not yet emitted
};

// Partitions with exactly k_parts pairwise-distinct parts, each part < bound.
class DistinctPartitionStream {
public:
    DistinctPartitionStream(int k_parts, int bound);
    std::optional<Partition> next();

private:
    std::vector<int> cur_;
    bool done_ = false;
    bool pending_ = false;
};

// Partitions of weight n with exactly k_parts parts.
class WeightPartitionStream {
public:
    WeightPartitionStream(int n, int k_parts);
    std::optional<Partition> next();

private:
    std::vector<int> cur_;
    bool done_ = false;
    bool pending_ = false;
};

// Length-`slots` sequences of nonnegative integers summing to `total`.
class CompositionStream {
public:
    CompositionStream(int slots, int total);  // slots must be positive
    std::optional<Composition> next();

private:
    std::vector<int> cur_;
    int total_ = 0;
    bool done_ = false;
    bool pending_ = false;
};

BoundedPartitionStream enum_bounded(int k_parts, int max_part);
DistinctPartitionStream enum_distinct_below(int k_parts, int bound);
WeightPartitionStream enum_weight(int n, int k_parts);
CompositionStream enum_compositions(int slots, int total);

}  // namespace gstirling
