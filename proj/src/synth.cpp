#include "hype/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <unordered_set>

#include "hype/rng.hpp"

namespace hype {

namespace {

// Floyd's algorithm: uniform sample of `count` distinct values from
// [0, population), deterministic under the rng stream.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t population, std::uint64_t count) {
    if (count > population) {
        throw InvalidParams("cannot sample more distinct members than the population holds");
    }
    std::unordered_set<std::uint64_t> chosen;
    std::vector<std::uint64_t> result;
    result.reserve(count);
    for (std::uint64_t j = population - count; j < population; ++j) {
        const std::uint64_t t = rng.next_below(j + 1);
        if (chosen.insert(t).second) {
            result.push_back(t);
        } else {
            chosen.insert(j);
            result.push_back(j);
        }
    }
    return result;
}

}  // namespace

PlantedResult generate_planted(const PlantedSpec& spec) {
    if (spec.blocks < 1 || spec.vertices_per_block < 1) {
        throw InvalidParams("planted generator needs at least one block and one vertex per block");
    }
    if (spec.edge_size_min < 1 || spec.edge_size_min > spec.edge_size_max) {
        throw InvalidParams("planted edge size bounds are infeasible");
    }
    if (spec.edge_size_max > spec.vertices_per_block) {
        throw InvalidParams("planted edge size exceeds block size");
    }
    if (spec.noise < 0.0 || spec.noise > 1.0) {
        throw InvalidParams("noise must be in [0, 1]");
    }

    const std::uint64_t n = static_cast<std::uint64_t>(spec.blocks) * spec.vertices_per_block;
    Rng rng(spec.seed);
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(spec.blocks) * spec.edges_per_block);

    for (std::uint32_t block = 0; block < spec.blocks; ++block) {
        const std::uint64_t block_start = static_cast<std::uint64_t>(block) * spec.vertices_per_block;
        for (std::uint32_t i = 0; i < spec.edges_per_block; ++i) {
            const bool global = rng.next_double() < spec.noise;
            const std::uint64_t size =
                spec.edge_size_min + rng.next_below(spec.edge_size_max - spec.edge_size_min + 1);
            const std::uint64_t population = global ? n : spec.vertices_per_block;
            const std::uint64_t offset = global ? 0 : block_start;
            std::vector<VertexId> members;
            members.reserve(size);
            for (const std::uint64_t pick : sample_distinct(rng, population, size)) {
                members.push_back(static_cast<VertexId>(offset + pick));
            }
            edges.push_back(std::move(members));
        }
    }

    PlantedResult result;
    result.graph = Hypergraph::build(n, std::move(edges));
    result.ground_truth.num_partitions = spec.blocks;
    result.ground_truth.parts.resize(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        result.ground_truth.parts[v] = static_cast<PartitionId>(v / spec.vertices_per_block);
    }
    return result;
}

Hypergraph generate_powerlaw(const PowerLawSpec& spec) {
    if (spec.gamma <= 1.0) {
        throw InvalidParams("power-law exponent must be > 1");
    }
    if (spec.edge_size_min < 1 || spec.edge_size_min > spec.edge_size_cap) {
        throw InvalidParams("power-law edge size bounds are infeasible");
    }
    if (spec.m > 0 && spec.edge_size_cap > spec.n) {
        throw InvalidParams("edge size cap exceeds the vertex count");
    }

    // Cumulative weights of x^-gamma over [min, cap] for inverse-CDF draws.
    const std::uint32_t support = spec.edge_size_cap - spec.edge_size_min + 1;
    std::vector<double> cumulative(support);
    double total = 0.0;
    for (std::uint32_t i = 0; i < support; ++i) {
        total += std::pow(static_cast<double>(spec.edge_size_min + i), -spec.gamma);
        cumulative[i] = total;
    }

    Rng rng(spec.seed);
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(spec.m);
    for (std::uint64_t e = 0; e < spec.m; ++e) {
        const double u = rng.next_double() * total;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        const std::uint64_t size =
            spec.edge_size_min + static_cast<std::uint32_t>(it - cumulative.begin());
        std::vector<VertexId> members;
        members.reserve(size);
        for (const std::uint64_t pick : sample_distinct(rng, spec.n, size)) {
            members.push_back(static_cast<VertexId>(pick));
        }
        edges.push_back(std::move(members));
    }
    return Hypergraph::build(spec.n, std::move(edges));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> degree_histogram(const Hypergraph& g) {
    std::map<std::uint64_t, std::uint64_t> buckets;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        ++buckets[g.vertex_degree(v)];
    }
    return {buckets.begin(), buckets.end()};
}

void write_histogram_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& histogram,
                         std::ostream& out) {
    out << "degree,count\n";
    for (const auto& [degree, count] : histogram) {
        out << degree << ',' << count << '\n';
    }
}

}  // namespace hype
