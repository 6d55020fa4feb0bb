#include "hype/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "hype/rng.hpp"

namespace hype {

Assignment minmax_partition(const Hypergraph& g, const StreamingParams& params) {
    const std::uint32_t k = params.k;
    if (k < 1) {
        throw InvalidParams("partition count must be >= 1");
    }
    const std::size_t n = g.num_vertices();
    if (n < k) {
        throw InvalidParams("partition count exceeds the vertex count");
    }

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    Rng rng(params.seed);
    rng.shuffle(order);

    Assignment result;
    result.num_partitions = k;
    result.parts.assign(n, kUnassigned);

    std::vector<std::uint64_t> load(k, 0);
    std::vector<std::vector<PartitionId>> touched(g.num_edges());  // sorted, small

    const auto edge_touches = [&touched](HyperedgeId e, PartitionId p) {
        const auto& parts = touched[e];
        return std::binary_search(parts.begin(), parts.end(), p);
    };

    for (const VertexId v : order) {
        const std::uint64_t min_load = *std::min_element(load.begin(), load.end());
        // One overlap score per eligible partition, the streaming way; this
        // is why the runtime grows with k.
        PartitionId best = kUnassigned;
        std::uint64_t best_score = 0;
        std::uint64_t best_load = 0;
        for (PartitionId p = 0; p < k; ++p) {
            if (load[p] > min_load + params.slack) {
                continue;
            }
            std::uint64_t s = 0;
            for (const HyperedgeId e : g.vertex_edges(v)) {
                if (edge_touches(e, p)) {
                    ++s;
                }
            }
            if (best == kUnassigned || s > best_score || (s == best_score && load[p] < best_load)) {
                best = p;
                best_score = s;
                best_load = load[p];
            }
        }
        result.parts[v] = best;
        if (params.mode == StreamBalance::VertexBalanced) {
            ++load[best];
        }
        for (const HyperedgeId e : g.vertex_edges(v)) {
            auto& parts = touched[e];
            const auto it = std::lower_bound(parts.begin(), parts.end(), best);
            if (it == parts.end() || *it != best) {
                parts.insert(it, best);
                if (params.mode == StreamBalance::EdgeBalanced) {
                    ++load[best];
                }
            }
        }
    }
    return result;
}

Assignment random_partition(const Hypergraph& g, std::uint32_t k, std::uint64_t seed) {
    if (k < 1) {
        throw InvalidParams("partition count must be >= 1");
    }
    const std::size_t n = g.num_vertices();
    if (n < k) {
        throw InvalidParams("partition count exceeds the vertex count");
    }
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    Rng rng(seed);
    rng.shuffle(order);

    Assignment result;
    result.num_partitions = k;
    result.parts.assign(n, kUnassigned);
    for (std::size_t i = 0; i < n; ++i) {
        result.parts[order[i]] = static_cast<PartitionId>(i % k);
    }
    return result;
}

}  // namespace hype
