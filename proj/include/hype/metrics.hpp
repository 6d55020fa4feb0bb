// metrics.hpp - partition quality and balance metrics
#ifndef HYPE_METRICS_HPP
#define HYPE_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hype/hypergraph.hpp"
#include "hype/types.hpp"

namespace hype {

struct MetricsReport {
    std::uint64_t k1_cut = 0;
    std::uint64_t hyperedge_cut = 0;
    std::uint64_t soed = 0;
    std::vector<std::uint64_t> partition_sizes;
    double imbalance = 0.0;
    double runtime_ms = 0.0;

    // Single-line JSON object.
    std::string to_json() const;

    // CSV row, field order: k1_cut, hyperedge_cut, soed, imbalance,
    // runtime_ms, then one size per partition. Numbers match to_json().
    std::string to_csv() const;
    std::string csv_header() const;
};

// Sum over hyperedges of (number of partitions spanned - 1).
std::uint64_t k1_cut(const Hypergraph& g, const Assignment& a);

// Number of hyperedges spanning more than one partition.
std::uint64_t hyperedge_cut(const Hypergraph& g, const Assignment& a);

// Sum of spans over hyperedges spanning more than one partition;
// equals k1_cut + hyperedge_cut.
std::uint64_t soed(const Hypergraph& g, const Assignment& a);

// (max size - min size) / max size over partition sizes, empty partitions
// counting as 0. Requires at least one partition and a non-empty maximum.
double vertex_imbalance(const Assignment& a);

// True iff max size < lambda * min size; false if any partition is empty.
// lambda must be > 1.
bool check_balance(const Assignment& a, double lambda);

// All of the above in one incidence pass, plus the caller-measured runtime.
MetricsReport compute_metrics(const Hypergraph& g, const Assignment& a, double runtime_ms = 0.0);

}  // namespace hype

#endif  // HYPE_METRICS_HPP
