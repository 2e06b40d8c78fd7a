#include "gstirling/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace gstirling {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition part must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

BigInt Partition::product() const {
    BigInt acc = 1;
    for (int p : parts_) acc *= p;
    return acc;
}

int Partition::multiplicity(int part) const {
    int count = 0;
    for (int p : parts_) count += (p == part);
    return count;
}

Partition Partition::with_part(int part) const {
    if (part < largest() || part < 1)
        throw std::invalid_argument("adjoined part must be >= the largest part");
    std::vector<int> parts;
    parts.reserve(parts_.size() + 1);
    parts.push_back(part);
    parts.insert(parts.end(), parts_.begin(), parts_.end());
    return Partition(std::move(parts));
}

Composition::Composition(std::vector<int> entries, int declared_total)
    : entries_(std::move(entries)), total_(declared_total) {
    long long sum = 0;
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("composition entries must be nonnegative");
        sum += e;
    }
    if (sum != declared_total)
        throw std::invalid_argument("composition entries do not sum to the declared total");
}

BoundedPartitionStream::BoundedPartitionStream(int k_parts, int max_part) {
    if (k_parts < 0 || max_part < 0)
        throw std::invalid_argument("enum_bounded arguments must be nonnegative");
    if (k_parts > 0 && max_part == 0) {
        done_ = true;
        return;
    }
    cur_.assign(static_cast<std::size_t>(k_parts), max_part);
    pending_ = true;
}

std::optional<Partition> BoundedPartitionStream::next() {
    if (done_) return std::nullopt;
    if (pending_) {
        pending_ = false;
        return Partition(cur_);
    }
    // Decrement the rightmost part that is still > 1; everything to its
    // right becomes equal to the new value (lex-largest completion).
    for (int i = static_cast<int>(cur_.size()) - 1; i >= 0; --i) {
        if (cur_[i] > 1) {
            int v = cur_[i] - 1;
            for (std::size_t j = i; j < cur_.size(); ++j) cur_[j] = v;
            return Partition(cur_);
        }
    }
    done_ = true;
    return std::nullopt;
}

DistinctPartitionStream::DistinctPartitionStream(int k_parts, int bound) {
    if (k_parts < 0 || bound < 1)
        throw std::invalid_argument("enum_distinct_below needs k_parts >= 0 and bound >= 1");
    if (k_parts > bound - 1) {
        done_ = true;
        return;
    }
    cur_.resize(static_cast<std::size_t>(k_parts));
    for (int i = 0; i < k_parts; ++i) cur_[i] = bound - 1 - i;
    pending_ = true;
}

std::optional<Partition> DistinctPartitionStream::next() {
    if (done_) return std::nullopt;
    if (pending_) {
        pending_ = false;
        return Partition(cur_);
    }
    const int k = static_cast<int>(cur_.size());
    // Position i can drop only if k - i smaller distinct positive values
    // still fit below it.
    for (int i = k - 1; i >= 0; --i) {
        if (cur_[i] > k - i) {
            int v = cur_[i] - 1;
            for (int j = i; j < k; ++j) cur_[j] = v - (j - i);
            return Partition(cur_);
        }
    }
    done_ = true;
    return std::nullopt;
}

WeightPartitionStream::WeightPartitionStream(int n, int k_parts) {
    if (n < 0 || k_parts < 0)
        throw std::invalid_argument("enum_weight arguments must be nonnegative");
    if (k_parts == 0) {
        if (n == 0) {
            pending_ = true;  // the empty partition of zero
        } else {
            done_ = true;
        }
        return;
    }
    if (k_parts > n) {
        done_ = true;
        return;
    }
    cur_.assign(static_cast<std::size_t>(k_parts), 1);
    cur_[0] = n - k_parts + 1;
    pending_ = true;
}

std::optional<Partition> WeightPartitionStream::next() {
    if (done_) return std::nullopt;
    if (pending_) {
        pending_ = false;
        return Partition(cur_);
    }
    const int k = static_cast<int>(cur_.size());
    if (k == 0) {
        done_ = true;
        return std::nullopt;
    }
    // Rightmost suffix that can be rebuilt strictly smaller: lower its head
    // to v and refill greedily nonincreasing, preserving the suffix sum.
    long long suffix = cur_[k - 1];
    for (int i = k - 2; i >= 0; --i) {
        suffix += cur_[i];
        const long long len = k - i;
        long long v = std::min<long long>(cur_[i] - 1, suffix - (len - 1));
        if (v >= 1 && (len - 1) * v >= suffix - v) {
            cur_[i] = static_cast<int>(v);
            long long rem = suffix - v;
            for (int j = i + 1; j < k; ++j) {
                long long slots_after = k - 1 - j;
                long long val = std::min<long long>(cur_[j - 1], rem - slots_after);
                cur_[j] = static_cast<int>(val);
                rem -= val;
            }
            return Partition(cur_);
        }
    }
    done_ = true;
    return std::nullopt;
}

CompositionStream::CompositionStream(int slots, int total) : total_(total) {
    if (slots < 1) throw std::invalid_argument("enum_compositions needs at least one slot");
    if (total < 0) throw std::invalid_argument("enum_compositions total must be nonnegative");
    cur_.assign(static_cast<std::size_t>(slots), 0);
    cur_[0] = total;
    pending_ = true;
}

std::optional<Composition> CompositionStream::next() {
    if (done_) return std::nullopt;
    if (pending_) {
        pending_ = false;
        return Composition(cur_, total_);
    }
    const int slots = static_cast<int>(cur_.size());
    // Decrement the rightmost non-final positive entry and dump the freed
    // weight just after it.
    for (int i = slots - 2; i >= 0; --i) {
        if (cur_[i] > 0) {
            cur_[i] -= 1;
            long long prefix = 0;
            for (int j = 0; j <= i; ++j) prefix += cur_[j];
            cur_[i + 1] = static_cast<int>(total_ - prefix);
            for (int j = i + 2; j < slots; ++j) cur_[j] = 0;
            return Composition(cur_, total_);
        }
    }
    done_ = true;
    return std::nullopt;
}

BoundedPartitionStream enum_bounded(int k_parts, int max_part) {
    return BoundedPartitionStream(k_parts, max_part);
}

DistinctPartitionStream enum_distinct_below(int k_parts, int bound) {
    return DistinctPartitionStream(k_parts, bound);
}

WeightPartitionStream enum_weight(int n, int k_parts) {
    return WeightPartitionStream(n, k_parts);
}

CompositionStream enum_compositions(int slots, int total) {
    return CompositionStream(slots, total);
}

}  // namespace gstirling
