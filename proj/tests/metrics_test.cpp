#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hype/metrics.hpp"
#include "hype/rng.hpp"
#include "oracles.hpp"

using namespace hype;

namespace {

Assignment make_assignment(std::uint32_t k, std::vector<PartitionId> parts) {
    Assignment a;
    a.num_partitions = k;
    a.parts = std::move(parts);
    return a;
}

Assignment from_sizes(const std::vector<std::uint64_t>& sizes) {
    Assignment a;
    a.num_partitions = static_cast<std::uint32_t>(sizes.size());
    for (std::uint32_t p = 0; p < sizes.size(); ++p) {
        a.parts.insert(a.parts.end(), sizes[p], p);
    }
    return a;
}

}  // namespace

TEST_CASE("k1_cut on the spec instances") {
    const Hypergraph g = Hypergraph::build(3, {{0, 1, 2}});
    CHECK(k1_cut(g, make_assignment(1, {0, 0, 0})) == 0);
    CHECK(k1_cut(g, make_assignment(2, {0, 0, 1})) == 1);
}

TEST_CASE("hyperedge_cut counts a cut edge once regardless of span") {
    const Hypergraph g = Hypergraph::build(3, {{0, 1, 2}});
    CHECK(hyperedge_cut(g, make_assignment(1, {0, 0, 0})) == 0);
    CHECK(hyperedge_cut(g, make_assignment(3, {0, 1, 2})) == 1);
}

TEST_CASE("soed counts full spans of cut edges") {
    const Hypergraph g = Hypergraph::build(3, {{0, 1, 2}});
    CHECK(soed(g, make_assignment(1, {0, 0, 0})) == 0);
    CHECK(soed(g, make_assignment(2, {0, 0, 1})) == 2);
}

TEST_CASE("cut metrics match the brute-force oracles on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Hypergraph g = testing::random_hypergraph(rng, 12, 30, 5);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.next_below(4));
        const Assignment a = testing::random_assignment(rng, g.num_vertices(), k);
        const std::uint64_t k1 = k1_cut(g, a);
        const std::uint64_t cut = hyperedge_cut(g, a);
        const std::uint64_t sum = soed(g, a);
        CHECK(k1 == testing::k1_oracle(g, a));
        CHECK(cut == testing::cut_oracle(g, a));
        CHECK(sum == testing::soed_oracle(g, a));
        CHECK(sum == k1 + cut);  // metric identity
        CHECK(cut <= k1);
        CHECK(k1 <= static_cast<std::uint64_t>(k - 1) * g.num_edges());

        const auto sizes = a.partition_sizes();
        const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
        if (*hi > 0) {
            CHECK((vertex_imbalance(a) == 0.0) == (*lo == *hi));
        }
    }
}

TEST_CASE("metrics are invariant under partition relabeling") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const Hypergraph g = testing::random_hypergraph(rng, 15, 20, 5);
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.next_below(3));
        const Assignment a = testing::random_assignment(rng, g.num_vertices(), k);
        std::vector<PartitionId> relabel(k);
        std::iota(relabel.begin(), relabel.end(), PartitionId{0});
        rng.shuffle(relabel);
        Assignment b = a;
        for (auto& p : b.parts) {
            p = relabel[p];
        }
        CHECK(k1_cut(g, a) == k1_cut(g, b));
        CHECK(hyperedge_cut(g, a) == hyperedge_cut(g, b));
        CHECK(soed(g, a) == soed(g, b));
    }
}

TEST_CASE("merging two partitions never increases k1_cut") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Hypergraph g = testing::random_hypergraph(rng, 15, 20, 5);
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.next_below(3));
        const Assignment a = testing::random_assignment(rng, g.num_vertices(), k);
        const PartitionId from = static_cast<PartitionId>(rng.next_below(k));
        PartitionId into = static_cast<PartitionId>(rng.next_below(k));
        if (into == from) {
            into = (into + 1) % k;
        }
        Assignment merged = a;
        for (auto& p : merged.parts) {
            if (p == from) {
                p = into;
            }
        }
        CHECK(k1_cut(g, merged) <= k1_cut(g, a));
    }
}

TEST_CASE("metrics require a total assignment") {
    const Hypergraph g = Hypergraph::build(2, {{0, 1}});
    CHECK_THROWS_AS(k1_cut(g, make_assignment(2, {0, kUnassigned})), InvalidParams);
    CHECK_THROWS_AS(soed(g, make_assignment(1, {0})), InvalidParams);  // wrong length
}

TEST_CASE("vertex_imbalance follows the max-min formula") {
    CHECK(vertex_imbalance(from_sizes({5, 5})) == doctest::Approx(0.0));
    CHECK(vertex_imbalance(from_sizes({4, 6})) == doctest::Approx(1.0 / 3.0));
    CHECK(vertex_imbalance(from_sizes({0, 10})) == doctest::Approx(1.0));
    CHECK_THROWS_AS(vertex_imbalance(make_assignment(0, {})), InvalidParams);
}

TEST_CASE("check_balance compares max against lambda * min") {
    CHECK(check_balance(from_sizes({5, 5}), 1.01));
    CHECK_FALSE(check_balance(from_sizes({4, 6}), 1.4));  // 6 < 5.6 fails
    CHECK(check_balance(from_sizes({4, 6}), 1.6));
    CHECK_FALSE(check_balance(from_sizes({0, 3}), 2.0));  // empty partition
    CHECK_THROWS_AS(check_balance(from_sizes({1, 1}), 1.0), InvalidParams);
}

TEST_CASE("report serializers agree and keep a stable field order") {
    MetricsReport report;
    report.k1_cut = 3;
    report.hyperedge_cut = 2;
    report.soed = 5;
    report.partition_sizes = {4, 6};
    report.imbalance = 1.0 / 3.0;
    report.runtime_ms = 12.5;
    CHECK(report.to_json() ==
          "{\"k1_cut\":3,\"hyperedge_cut\":2,\"soed\":5,\"imbalance\":0.3333333333333333,"
          "\"runtime_ms\":12.5,\"partition_sizes\":[4,6]}");
    CHECK(report.csv_header() == "k1_cut,hyperedge_cut,soed,imbalance,runtime_ms,size_0,size_1");
    CHECK(report.to_csv() == "3,2,5,0.3333333333333333,12.5,4,6");
}

TEST_CASE("compute_metrics bundles everything in one pass") {
    const Hypergraph g = Hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    const Assignment a = make_assignment(2, {0, 0, 1, 1});
    const MetricsReport report = compute_metrics(g, a, 1.0);
    CHECK(report.k1_cut == 1);
    CHECK(report.hyperedge_cut == 1);
    CHECK(report.soed == 2);
    CHECK(report.partition_sizes == std::vector<std::uint64_t>{2, 2});
    CHECK(report.imbalance == doctest::Approx(0.0));
    CHECK(report.runtime_ms == doctest::Approx(1.0));
}
