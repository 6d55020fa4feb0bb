// baselines.hpp - streaming minmax and uniform-random comparison partitioners
#ifndef HYPE_BASELINES_HPP
#define HYPE_BASELINES_HPP

#include <cstdint>

#include "hype/hypergraph.hpp"
#include "hype/types.hpp"

namespace hype {

enum class StreamBalance {
    EdgeBalanced,    // load = distinct hyperedges touching a partition
    VertexBalanced,  // load = vertices assigned to a partition
};

struct StreamingParams {
    std::uint32_t k = 2;
    std::uint64_t slack = 100;  // max load above the least-loaded partition
    StreamBalance mode = StreamBalance::VertexBalanced;
    std::uint64_t seed = 0;     // stream order shuffle
};

// One-pass greedy: vertices arrive in a seed-shuffled order and go to the
// eligible partition that already touches the most of their incident
// hyperedges. Eligible means load <= min load + slack; ties go to the
// least-loaded, then lowest-id partition. Assignments are final.
Assignment minmax_partition(const Hypergraph& g, const StreamingParams& params);

// Uniformly random balanced assignment: shuffle, deal round-robin.
Assignment random_partition(const Hypergraph& g, std::uint32_t k, std::uint64_t seed);

}  // namespace hype

#endif  // HYPE_BASELINES_HPP
