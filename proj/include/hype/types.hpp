// types.hpp - shared id types, assignment, and error types
#ifndef HYPE_TYPES_HPP
#define HYPE_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hype {

using VertexId = std::uint32_t;
using HyperedgeId = std::uint32_t;
using PartitionId = std::uint32_t;

inline constexpr PartitionId kUnassigned = static_cast<PartitionId>(-1);

// Malformed input data (file contents, partition files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Infeasible or out-of-range parameters (k > n, bad bounds, ...).
struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total mapping from item index to partition id. Items are vertices, or
// original hyperedges when the run partitioned a flipped hypergraph.
struct Assignment {
    std::uint32_t num_partitions = 0;
    std::vector<PartitionId> parts;

    // Per-partition item counts; empty partitions count as 0.
    // Throws InvalidParams if any item is unassigned or out of range.
    std::vector<std::uint64_t> partition_sizes() const {
        std::vector<std::uint64_t> sizes(num_partitions, 0);
        for (PartitionId p : parts) {
            if (p >= num_partitions) {
                throw InvalidParams("assignment contains an unassigned or out-of-range partition id");
            }
            ++sizes[p];
        }
        return sizes;
    }
};

}  // namespace hype

#endif  // HYPE_TYPES_HPP
