// hypergraph.hpp - immutable dual-incidence hypergraph
#ifndef HYPE_HYPERGRAPH_HPP
#define HYPE_HYPERGRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hype/types.hpp"

namespace hype {

// G = (V, E) stored CSR-style in both directions: hyperedge -> member
// vertices and vertex -> incident hyperedges. Incidence lists are sorted
// ascending so set operations over them merge in linear time. Immutable
// after construction; safe to share across concurrent readers.
//
// Hyperedges of size 0 can occur as flips of graphs with isolated vertices;
// loaders reject them, metrics treat them as spanning nothing.
class Hypergraph {
public:
    Hypergraph() = default;

    // Builds both incidence directions from per-hyperedge member lists.
    // Duplicate members within a hyperedge are silently dropped; members
    // must be < num_vertices (InvalidParams otherwise).
    static Hypergraph build(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges);

    std::size_t num_vertices() const { return vertex_offsets_.size() - 1; }
    std::size_t num_edges() const { return edge_offsets_.size() - 1; }
    std::uint64_t num_pins() const { return edge_offsets_.back(); }

    // Member vertices of hyperedge e, sorted ascending.
    std::span<const VertexId> edge_members(HyperedgeId e) const {
        return {edge_pins_.data() + edge_offsets_[e],
                edge_pins_.data() + edge_offsets_[e + 1]};
    }

    // Hyperedges incident to vertex v, sorted ascending.
    std::span<const HyperedgeId> vertex_edges(VertexId v) const {
        return {vertex_pins_.data() + vertex_offsets_[v],
                vertex_pins_.data() + vertex_offsets_[v + 1]};
    }

    std::size_t edge_size(HyperedgeId e) const {
        return static_cast<std::size_t>(edge_offsets_[e + 1] - edge_offsets_[e]);
    }

    std::size_t vertex_degree(VertexId v) const {
        return static_cast<std::size_t>(vertex_offsets_[v + 1] - vertex_offsets_[v]);
    }

    // N(v): distinct vertices sharing a hyperedge with v, ascending,
    // v itself excluded. Throws InvalidParams if v is out of range.
    std::vector<VertexId> neighbors(VertexId v) const;

    // Transposed hypergraph: every vertex becomes a hyperedge and vice
    // versa. flip(flip(g)) is structurally equal to g.
    Hypergraph flip() const;

    // Hyperedge ids ordered by size ascending, ties by id ascending.
    // Computed once at construction.
    const std::vector<HyperedgeId>& edges_by_size_ascending() const { return edges_by_size_; }

    bool structurally_equal(const Hypergraph& other) const {
        return edge_offsets_ == other.edge_offsets_ && edge_pins_ == other.edge_pins_ &&
               vertex_offsets_ == other.vertex_offsets_;
    }

private:
    std::vector<std::uint64_t> edge_offsets_{0};    // size m + 1
    std::vector<VertexId> edge_pins_;               // size pin_count
    std::vector<std::uint64_t> vertex_offsets_{0};  // size n + 1
    std::vector<HyperedgeId> vertex_pins_;          // size pin_count
    std::vector<HyperedgeId> edges_by_size_;
};

}  // namespace hype

#endif  // HYPE_HYPERGRAPH_HPP
