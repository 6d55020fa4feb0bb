#include "hype/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hype {

namespace {

// Shortest round-trip formatting, shared by the JSON and CSV emitters so
// both report identical numbers.
std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void require_total(const Assignment& a, std::size_t expected_items) {
    if (a.parts.size() != expected_items) {
        throw InvalidParams("assignment covers " + std::to_string(a.parts.size()) +
                            " items, hypergraph has " + std::to_string(expected_items));
    }
    for (PartitionId p : a.parts) {
        if (p >= a.num_partitions) {
            throw InvalidParams("unassigned vertex encountered");
        }
    }
}

// Distinct partitions spanned per hyperedge, accumulated into the three cut
// metrics. Span of an empty hyperedge is 0; it contributes nothing.
struct CutTotals {
    std::uint64_t k1 = 0;
    std::uint64_t cut = 0;
    std::uint64_t soed = 0;
};

CutTotals accumulate_cuts(const Hypergraph& g, const Assignment& a) {
    CutTotals totals;
    std::vector<std::uint32_t> seen(a.num_partitions, 0);
    std::uint32_t stamp = 0;
    for (HyperedgeId e = 0; e < g.num_edges(); ++e) {
        ++stamp;
        std::uint64_t span = 0;
        for (VertexId v : g.edge_members(e)) {
            const PartitionId p = a.parts[v];
            if (seen[p] != stamp) {
                seen[p] = stamp;
                ++span;
            }
        }
        if (span > 0) {
            totals.k1 += span - 1;
        }
        if (span > 1) {
            ++totals.cut;
            totals.soed += span;
        }
    }
    return totals;
}

}  // namespace

std::uint64_t k1_cut(const Hypergraph& g, const Assignment& a) {
    require_total(a, g.num_vertices());
    return accumulate_cuts(g, a).k1;
}

std::uint64_t hyperedge_cut(const Hypergraph& g, const Assignment& a) {
    require_total(a, g.num_vertices());
    return accumulate_cuts(g, a).cut;
}

std::uint64_t soed(const Hypergraph& g, const Assignment& a) {
    require_total(a, g.num_vertices());
    return accumulate_cuts(g, a).soed;
}

double vertex_imbalance(const Assignment& a) {
    if (a.num_partitions == 0) {
        throw InvalidParams("vertex_imbalance needs at least one partition");
    }
    const auto sizes = a.partition_sizes();
    const auto [min_it, max_it] = std::minmax_element(sizes.begin(), sizes.end());
    if (*max_it == 0) {
        throw InvalidParams("vertex_imbalance needs a non-empty partition");
    }
    return static_cast<double>(*max_it - *min_it) / static_cast<double>(*max_it);
}

bool check_balance(const Assignment& a, double lambda) {
    if (lambda <= 1.0) {
        throw InvalidParams("balance factor lambda must be > 1");
    }
    const auto sizes = a.partition_sizes();
    if (sizes.empty()) {
        throw InvalidParams("check_balance needs at least one partition");
    }
    const auto [min_it, max_it] = std::minmax_element(sizes.begin(), sizes.end());
    if (*min_it == 0) {
        return false;
    }
    return static_cast<double>(*max_it) < lambda * static_cast<double>(*min_it);
}

MetricsReport compute_metrics(const Hypergraph& g, const Assignment& a, double runtime_ms) {
    require_total(a, g.num_vertices());
    MetricsReport report;
    const CutTotals totals = accumulate_cuts(g, a);
    report.k1_cut = totals.k1;
    report.hyperedge_cut = totals.cut;
    report.soed = totals.soed;
    report.partition_sizes = a.partition_sizes();
    report.imbalance = a.num_partitions > 0 ? vertex_imbalance(a) : 0.0;
    report.runtime_ms = runtime_ms;
    return report;
}

std::string MetricsReport::to_json() const {
    std::ostringstream out;
    out << "{\"k1_cut\":" << k1_cut << ",\"hyperedge_cut\":" << hyperedge_cut
        << ",\"soed\":" << soed << ",\"imbalance\":" << format_double(imbalance)
        << ",\"runtime_ms\":" << format_double(runtime_ms) << ",\"partition_sizes\":[";
    for (std::size_t i = 0; i < partition_sizes.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << partition_sizes[i];
    }
    out << "]}";
    return out.str();
}

std::string MetricsReport::to_csv() const {
    std::ostringstream out;
    out << k1_cut << ',' << hyperedge_cut << ',' << soed << ',' << format_double(imbalance)
        << ',' << format_double(runtime_ms);
    for (const std::uint64_t size : partition_sizes) {
        out << ',' << size;
    }
    return out.str();
}

std::string MetricsReport::csv_header() const {
    std::ostringstream out;
    out << "k1_cut,hyperedge_cut,soed,imbalance,runtime_ms";
    for (std::size_t i = 0; i < partition_sizes.size(); ++i) {
        out << ",size_" << i;
    }
    return out.str();
}

}  // namespace hype
