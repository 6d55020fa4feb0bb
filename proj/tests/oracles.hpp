// oracles.hpp - brute-force reference implementations, independent of the
// library's computation paths
#ifndef HYPE_TESTS_ORACLES_HPP
#define HYPE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hype/hypergraph.hpp"
#include "hype/rng.hpp"
#include "hype/types.hpp"

namespace hype::testing {

inline std::uint64_t span_oracle(const Hypergraph& g, HyperedgeId e, const Assignment& a) {
    std::set<PartitionId> parts;
    for (const VertexId v : g.edge_members(e)) {
        parts.insert(a.parts.at(v));
    }
    return parts.size();
}

inline std::uint64_t k1_oracle(const Hypergraph& g, const Assignment& a) {
    std::uint64_t total = 0;
    for (HyperedgeId e = 0; e < g.num_edges(); ++e) {
        const std::uint64_t span = span_oracle(g, e, a);
        if (span > 0) {
            total += span - 1;
        }
    }
    return total;
}

inline std::uint64_t cut_oracle(const Hypergraph& g, const Assignment& a) {
    std::uint64_t total = 0;
    for (HyperedgeId e = 0; e < g.num_edges(); ++e) {
        if (span_oracle(g, e, a) > 1) {
            ++total;
        }
    }
    return total;
}

inline std::uint64_t soed_oracle(const Hypergraph& g, const Assignment& a) {
    std::uint64_t total = 0;
    for (HyperedgeId e = 0; e < g.num_edges(); ++e) {
        const std::uint64_t span = span_oracle(g, e, a);
        if (span > 1) {
            total += span;
        }
    }
    return total;
}

// Naive external-neighbors evaluation: materialize N(v) through a std::set, then subtract
// the fringe element by element.
inline std::uint64_t dext_oracle(const Hypergraph& g, VertexId v,
                                 const std::vector<VertexId>& fringe) {
    std::set<VertexId> neighbors;
    for (const HyperedgeId e : g.vertex_edges(v)) {
        for (const VertexId u : g.edge_members(e)) {
            if (u != v) {
                neighbors.insert(u);
            }
        }
    }
    std::uint64_t count = 0;
    for (const VertexId u : neighbors) {
        if (std::find(fringe.begin(), fringe.end(), u) == fringe.end()) {
            ++count;
        }
    }
    return count;
}

// Random hypergraph for property tests. Members are drawn with repeats on
// purpose; build() is expected to deduplicate.
inline Hypergraph random_hypergraph(Rng& rng, std::size_t max_n, std::size_t max_m,
                                    std::size_t max_size) {
    const std::size_t n = 1 + rng.next_below(max_n);
    const std::size_t m = rng.next_below(max_m + 1);
    std::vector<std::vector<VertexId>> edges(m);
    for (auto& members : edges) {
        const std::size_t size = 1 + rng.next_below(std::min(max_size, n));
        for (std::size_t i = 0; i < size; ++i) {
            members.push_back(static_cast<VertexId>(rng.next_below(n)));
        }
    }
    return Hypergraph::build(n, std::move(edges));
}

inline Assignment random_assignment(Rng& rng, std::size_t n, std::uint32_t k) {
    Assignment a;
    a.num_partitions = k;
    a.parts.resize(n);
    for (auto& p : a.parts) {
        p = static_cast<PartitionId>(rng.next_below(k));
    }
    return a;
}

}  // namespace hype::testing

#endif  // HYPE_TESTS_ORACLES_HPP
