// synth.hpp - deterministic synthetic hypergraph generators
#ifndef HYPE_SYNTH_HPP
#define HYPE_SYNTH_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hype/hypergraph.hpp"
#include "hype/types.hpp"

namespace hype {

// Planted-partition hypergraph: `blocks` communities of equal size, each
// hyperedge drawn within its own block except for a `noise` fraction whose
// members are drawn from the whole vertex set.
struct PlantedSpec {
    std::uint32_t blocks = 2;
    std::uint32_t vertices_per_block = 8;
    std::uint32_t edges_per_block = 12;
    std::uint32_t edge_size_min = 2;
    std::uint32_t edge_size_max = 4;
    double noise = 0.0;  // in [0, 1]
    std::uint64_t seed = 0;
};

struct PlantedResult {
    Hypergraph graph;
    Assignment ground_truth;  // block label per vertex
};

PlantedResult generate_planted(const PlantedSpec& spec);

// Hyperedge sizes follow a discrete power law with exponent gamma on
// [edge_size_min, edge_size_cap], sampled by inverse CDF; members uniform.
struct PowerLawSpec {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double gamma = 2.5;  // > 1
    std::uint32_t edge_size_min = 2;
    std::uint32_t edge_size_cap = 50;
    std::uint64_t seed = 0;
};

Hypergraph generate_powerlaw(const PowerLawSpec& spec);

// Exact vertex-degree histogram, ascending by degree.
std::vector<std::pair<std::uint64_t, std::uint64_t>> degree_histogram(const Hypergraph& g);

// Two-column CSV: "degree,count" header plus one row per bucket.
void write_histogram_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& histogram,
                         std::ostream& out);

}  // namespace hype

#endif  // HYPE_SYNTH_HPP
