#include "hype/partitioner.hpp"

#include <algorithm>
#include <chrono>

#include "expansion.hpp"

namespace hype {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate_params(const Hypergraph& g, const HypeParams& params) {
    if (params.k < 1) {
        throw InvalidParams("partition count must be >= 1");
    }
    if (g.num_vertices() < params.k) {
        throw InvalidParams("partition count exceeds the vertex count");
    }
    if (params.fringe_size < 1) {
        throw InvalidParams("fringe size must be >= 1");
    }
    if (params.fringe_candidates < 1) {
        throw InvalidParams("candidate count must be >= 1");
    }
}

// Main loop over the graph actually being expanded (the flipped one
// under FlipEdgeCount). The last partition takes the forced remainder.
Assignment run_expansion(const Hypergraph& g, const HypeParams& params) {
    validate_params(g, params);
    const std::uint64_t n = g.num_vertices();
    const bool weighted = params.balance_mode == BalanceMode::WeightedPins;
    const std::vector<std::uint64_t> caps =
        weighted ? std::vector<std::uint64_t>{} : vertex_capacities(n, params.k);
    const double threshold = weighted ? weighted_pins_threshold(g, params.k) : 0.0;

    detail::ExpansionState state(g, params);
    for (std::uint32_t i = 0; i < params.k; ++i) {
        if (i + 1 == params.k) {
            state.assign_remainder(i);
            break;
        }
        if (state.universe_empty()) {
            continue;  // weighted runs can exhaust the universe early
        }
        state.begin_partition(i);
        const auto partition_full = [&] {
            return weighted ? static_cast<double>(state.core_weight()) >= threshold
                            : state.core_size() >= caps[i];
        };
        while (!partition_full() && state.assigned_total() < n) {
            state.update_fringe();
            if (state.fringe_empty()) {
                break;  // nothing left to draw
            }
            state.update_core();
        }
        state.release_fringe();
    }

    Assignment a;
    a.num_partitions = params.k;
    a.parts = state.take_assignment();
    return a;
}

}  // namespace

PartitionResult partition(const Hypergraph& g, const HypeParams& params) {
    PartitionResult result;
    double runtime = 0.0;
    const Hypergraph* measured = &g;
    Hypergraph flipped;
    const auto start = Clock::now();
    if (params.balance_mode == BalanceMode::FlipEdgeCount) {
        // Vertex-balance the flipped hypergraph, which balances hyperedge
        // counts of the original; the assignment indexes original hyperedges.
        flipped = g.flip();
        HypeParams inner = params;
        inner.balance_mode = BalanceMode::VertexCount;
        result.assignment = run_expansion(flipped, inner);
        measured = &flipped;
    } else {
        result.assignment = run_expansion(g, params);
    }
    runtime = elapsed_ms(start);
    result.metrics = compute_metrics(*measured, result.assignment, runtime);
    return result;
}

std::uint64_t external_neighbors_score(const Hypergraph& g, VertexId v,
                                       std::span<const VertexId> fringe) {
    std::uint64_t count = 0;
    for (const VertexId u : g.neighbors(v)) {
        if (std::find(fringe.begin(), fringe.end(), u) == fringe.end()) {
            ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t> vertex_capacities(std::uint64_t n, std::uint32_t k) {
    if (k < 1) {
        throw InvalidParams("partition count must be >= 1");
    }
    std::vector<std::uint64_t> caps(k, n / k);
    for (std::uint64_t i = 0; i < n % k; ++i) {
        ++caps[i];
    }
    return caps;
}

double weighted_pins_threshold(const Hypergraph& g, std::uint32_t k) {
    if (k < 1) {
        throw InvalidParams("partition count must be >= 1");
    }
    return static_cast<double>(g.num_vertices() + g.num_edges()) / static_cast<double>(k);
}

}  // namespace hype
