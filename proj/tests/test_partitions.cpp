#include "gstirling/partitions.hpp"

#include "gstirling/exact.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace gstirling;

namespace {

template <typename Stream>
std::vector<std::vector<int>> collect(Stream stream) {
    std::vector<std::vector<int>> out;
    while (auto p = stream.next()) out.push_back(p->parts());
    return out;
}

std::vector<std::vector<int>> collect_comp(CompositionStream stream) {
    std::vector<std::vector<int>> out;
    while (auto c = stream.next()) out.push_back(c->entries());
    return out;
}

template <typename Stream>
long long count(Stream stream) {
    long long n = 0;
    while (stream.next()) ++n;
    return n;
}

}  // namespace

TEST_CASE("partition type basics") {
    const Partition empty;
    CHECK(empty.length() == 0);
    CHECK(empty.weight() == 0);
    CHECK(empty.product() == 1);
    CHECK(empty.largest() == 0);

    const Partition p(std::vector<int>{17, 2, 2, 1});
    CHECK(p.length() == 4);
    CHECK(p.weight() == 22);
    CHECK(p.product() == 68);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(3) == 0);
    CHECK(p.with_part(17).parts() == std::vector<int>{17, 17, 2, 2, 1});

    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(p.with_part(3), std::invalid_argument);
}

TEST_CASE("composition type validates its total") {
    const Composition c(std::vector<int>{0, 2, 1}, 3);
    CHECK(c.slots() == 3);
    CHECK(c.total() == 3);
    CHECK_THROWS_AS(Composition(std::vector<int>{1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Composition(std::vector<int>{-1, 4}, 3), std::invalid_argument);
}

TEST_CASE("enum_bounded") {
    CHECK(collect(enum_bounded(2, 2)) ==
          std::vector<std::vector<int>>{{2, 2}, {2, 1}, {1, 1}});
    CHECK(collect(enum_bounded(0, 9)) == std::vector<std::vector<int>>{{}});
    CHECK(collect(enum_bounded(3, 0)).empty());
    CHECK(count(enum_bounded(3, 3)) == 10);  // multisets of size 3 from {1,2,3}
}

TEST_CASE("enum_distinct_below") {
    CHECK(collect(enum_distinct_below(2, 4)) ==
          std::vector<std::vector<int>>{{3, 2}, {3, 1}, {2, 1}});
    CHECK(collect(enum_distinct_below(0, 5)) == std::vector<std::vector<int>>{{}});
    CHECK(collect(enum_distinct_below(3, 3)).empty());
}

TEST_CASE("enum_weight") {
    CHECK(collect(enum_weight(4, 2)) == std::vector<std::vector<int>>{{3, 1}, {2, 2}});
    CHECK(collect(enum_weight(5, 5)) == std::vector<std::vector<int>>{{1, 1, 1, 1, 1}});
    CHECK(collect(enum_weight(3, 5)).empty());
    CHECK(collect(enum_weight(8, 3)) ==
          std::vector<std::vector<int>>{{6, 1, 1}, {5, 2, 1}, {4, 3, 1}, {4, 2, 2}, {3, 3, 2}});
}

TEST_CASE("enum_compositions") {
    CHECK(collect_comp(enum_compositions(2, 2)) ==
          std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(collect_comp(enum_compositions(4, 0)) ==
          std::vector<std::vector<int>>{{0, 0, 0, 0}});
    CHECK(count(enum_compositions(3, 2)) == 6);  // stars and bars: C(4,2)
    CHECK_THROWS_AS(enum_compositions(0, 1), std::invalid_argument);
}

TEST_CASE("streams are duplicate-free and yield valid elements") {
    for (int k = 0; k <= 6; ++k)
        for (int m = 1; m <= 6; ++m) {
            std::set<std::vector<int>> seen;
            auto stream = enum_bounded(k, m);
            while (auto p = stream.next()) {
                CHECK(p->length() == k);
                if (!p->parts().empty()) {
                    CHECK(p->parts().front() <= m);
                    CHECK(p->parts().back() >= 1);
                }
                CHECK(seen.insert(p->parts()).second);
            }
        }
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            std::set<std::vector<int>> seen;
            auto stream = enum_weight(n, k);
            while (auto p = stream.next()) {
                CHECK(p->weight() == n);
                CHECK(p->length() == k);
                CHECK(seen.insert(p->parts()).second);
            }
        }
}

TEST_CASE("bounded-partition and composition counts agree") {
    // The bijection behind the multiset and multiplicity-sequence corollaries.
    for (int k = 0; k <= 8; ++k)
        for (int n = 1; n <= 8; ++n)
            CHECK(count(enum_bounded(k, n)) == count(enum_compositions(n, k)));
}

TEST_CASE("distinct-part counts are binomials") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(BigInt(count(enum_distinct_below(k, n + 1))) ==
                  binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

TEST_CASE("adjoining the bound reproduces the largest-part index set") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 5; ++k) {
            std::set<std::vector<int>> adjoined;
            auto inner = enum_bounded(k, n);
            while (auto p = inner.next()) adjoined.insert(p->with_part(n).parts());

            std::set<std::vector<int>> filtered;
            auto outer = enum_bounded(k + 1, n);
            while (auto p = outer.next())
                if (p->largest() == n) filtered.insert(p->parts());

            CHECK(adjoined == filtered);
        }
}
