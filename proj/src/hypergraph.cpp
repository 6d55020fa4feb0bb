#include "hype/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hype {

namespace {

std::vector<HyperedgeId> sort_edges_by_size(const Hypergraph& g) {
    std::vector<HyperedgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), HyperedgeId{0});
    std::sort(order.begin(), order.end(), [&g](HyperedgeId a, HyperedgeId b) {
        const std::size_t sa = g.edge_size(a);
        const std::size_t sb = g.edge_size(b);
        return sa != sb ? sa < sb : a < b;
    });
    return order;
}

}  // namespace

Hypergraph Hypergraph::build(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges) {
    Hypergraph g;
    g.edge_offsets_.assign(1, 0);
    g.edge_offsets_.reserve(edges.size() + 1);

    std::uint64_t pin_count = 0;
    for (auto& members : edges) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (!members.empty() && members.back() >= num_vertices) {
            throw InvalidParams("hyperedge member " + std::to_string(members.back()) +
                                " out of range [0, " + std::to_string(num_vertices) + ")");
        }
        pin_count += members.size();
    }

    g.edge_pins_.reserve(pin_count);
    for (const auto& members : edges) {
        g.edge_pins_.insert(g.edge_pins_.end(), members.begin(), members.end());
        g.edge_offsets_.push_back(g.edge_pins_.size());
    }

    // Transpose via counting sort. Incident edge ids come out ascending per
    // vertex because edges are visited in id order.
    g.vertex_offsets_.assign(num_vertices + 1, 0);
    for (VertexId v : g.edge_pins_) {
        ++g.vertex_offsets_[v + 1];
    }
    std::partial_sum(g.vertex_offsets_.begin(), g.vertex_offsets_.end(), g.vertex_offsets_.begin());
    g.vertex_pins_.resize(pin_count);
    std::vector<std::uint64_t> cursor(g.vertex_offsets_.begin(), g.vertex_offsets_.end() - 1);
    for (HyperedgeId e = 0; e < g.num_edges(); ++e) {
        for (VertexId v : g.edge_members(e)) {
            g.vertex_pins_[cursor[v]++] = e;
        }
    }

    g.edges_by_size_ = sort_edges_by_size(g);
    return g;
}

std::vector<VertexId> Hypergraph::neighbors(VertexId v) const {
    if (v >= num_vertices()) {
        throw InvalidParams("vertex id " + std::to_string(v) + " out of range");
    }
    std::vector<VertexId> result;
    for (HyperedgeId e : vertex_edges(v)) {
        const auto members = edge_members(e);
        result.insert(result.end(), members.begin(), members.end());
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    const auto self = std::lower_bound(result.begin(), result.end(), v);
    if (self != result.end() && *self == v) {
        result.erase(self);
    }
    return result;
}

Hypergraph Hypergraph::flip() const {
    Hypergraph g;
    g.edge_offsets_ = vertex_offsets_;
    g.edge_pins_ = vertex_pins_;
    g.vertex_offsets_ = edge_offsets_;
    g.vertex_pins_ = edge_pins_;
    g.edges_by_size_ = sort_edges_by_size(g);
    return g;
}

}  // namespace hype
