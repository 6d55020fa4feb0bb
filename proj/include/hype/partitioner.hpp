// partitioner.hpp - neighborhood-expansion hypergraph partitioner
#ifndef HYPE_PARTITIONER_HPP
#define HYPE_PARTITIONER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hype/hypergraph.hpp"
#include "hype/metrics.hpp"
#include "hype/types.hpp"

namespace hype {

enum class BalanceMode {
    VertexCount,    // every partition ends up with floor(n/k) or floor(n/k)+1 vertices
    WeightedPins,   // grow while accumulated w(v) = 1 + deg(v) stays below (n+m)/k
    FlipEdgeCount,  // vertex-balance the flipped hypergraph: balances hyperedge counts
};

struct HypeParams {
    std::uint32_t k = 2;
    std::uint32_t fringe_size = 10;       // s: fringe keeps the s best-scored vertices
    std::uint32_t fringe_candidates = 2;  // r: candidates pulled per fringe update
    BalanceMode balance_mode = BalanceMode::VertexCount;
    bool cache_enabled = true;            // lazy score cache, cleared per partition
    bool score_excludes_core = false;     // also subtract the current core from the score
    std::uint64_t seed = 0;
};

struct PartitionResult {
    // Indexed by vertex, or by original hyperedge under FlipEdgeCount
    // (the run partitions the flipped hypergraph).
    Assignment assignment;
    // Cut metrics over the graph that was partitioned; runtime_ms covers
    // the partitioning call only.
    MetricsReport metrics;
};

// Grows k core sets one after another: seed a random vertex, then alternate
// fringe updates (pull candidates from the smallest hyperedges incident to
// the core) and core updates (commit the best-scored fringe vertex) until
// the partition reaches capacity. Deterministic given (g, params).
PartitionResult partition(const Hypergraph& g, const HypeParams& params);

// External neighbors score: |N(v) \ fringe|. Neighbors already committed to
// a core still count as external.
std::uint64_t external_neighbors_score(const Hypergraph& g, VertexId v,
                                       std::span<const VertexId> fringe);

// VertexCount capacities: floor(n/k)+1 for the first n mod k partitions,
// floor(n/k) for the rest.
std::vector<std::uint64_t> vertex_capacities(std::uint64_t n, std::uint32_t k);

// WeightedPins growth threshold: (n + m) / k.
double weighted_pins_threshold(const Hypergraph& g, std::uint32_t k);

}  // namespace hype

#endif  // HYPE_PARTITIONER_HPP
