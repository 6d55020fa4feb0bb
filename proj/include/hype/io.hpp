// io.hpp - hypergraph file formats, partition files, label sidecars
#ifndef HYPE_IO_HPP
#define HYPE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hype/hypergraph.hpp"
#include "hype/types.hpp"

namespace hype {

// Plain (unweighted) hMETIS format: header "m n", then m lines of
// 1-indexed vertex ids. Lines starting with '%' are comments. Duplicate
// ids within a line are dropped; weighted variants are rejected.
Hypergraph load_hmetis(std::istream& in);
void write_hmetis(const Hypergraph& g, std::ostream& out);

// Bipartite pair format: one "hyperedge_label vertex_label" pin per line,
// labels densified in first-appearance order.
struct EdgeListResult {
    Hypergraph graph;
    std::vector<std::string> edge_labels;    // dense HyperedgeId -> label
    std::vector<std::string> vertex_labels;  // dense VertexId -> label
};
EdgeListResult load_edge_list(std::istream& in);

// Sidecar dictionary: one "dense_id label" line per id.
void write_label_dictionary(const std::vector<std::string>& labels, std::ostream& out);

// Partition file: line i holds the 0-indexed partition id of item i.
void write_partition(const Assignment& a, std::ostream& out);

// Reads a partition file; num_partitions becomes max id + 1 (0 if empty).
Assignment read_partition(std::istream& in);

}  // namespace hype

#endif  // HYPE_IO_HPP
