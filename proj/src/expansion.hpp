// expansion.hpp - core/fringe/universe state machine behind partition()
#ifndef HYPE_SRC_EXPANSION_HPP
#define HYPE_SRC_EXPANSION_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hype/hypergraph.hpp"
#include "hype/partitioner.hpp"
#include "hype/rng.hpp"
#include "hype/types.hpp"

namespace hype::detail {

struct FringeEntry {
    std::uint64_t score;
    VertexId vertex;

    // score ascending, ties by smaller vertex id
    friend bool operator<(const FringeEntry& a, const FringeEntry& b) {
        return a.score != b.score ? a.score < b.score : a.vertex < b.vertex;
    }
};

// Working state for one partitioning run over one hypergraph. The universe
// (unassigned vertices outside the fringe), the fringe, and the cores stay
// pairwise disjoint. Per-partition state (fringe membership, score cache,
// active edge set) is invalidated wholesale by bumping the epoch at every
// partition boundary, so no O(n) clearing happens between partitions.
class ExpansionState {
public:
    ExpansionState(const Hypergraph& g, const HypeParams& params);

    // Housekeeping for partition i: fresh epoch, then a random universe
    // vertex seeds the core.
    void begin_partition(std::uint32_t i);

    // Pulls up to r candidate vertices from the smallest hyperedges incident
    // to the current core, scores the ones missing from the cache, keeps the
    // s best of fringe + candidates, and falls back to a random universe
    // vertex if the fringe stayed empty.
    void update_fringe();

    // Moves the minimal-score fringe vertex (ties: smallest id) into the
    // current core. The assignment is final. Throws on an empty fringe.
    VertexId update_core();

    // |N(v) \ fringe| against the current fringe, optionally also dropping
    // neighbors already in the current core.
    std::uint64_t external_score(VertexId v);

    // Returns the remaining fringe vertices to the universe.
    void release_fringe();

    // Hands every still-unassigned vertex to partition i (the forced
    // remainder of the run; skips per-edge bookkeeping).
    void assign_remainder(std::uint32_t i);

    bool fringe_empty() const { return fringe_.empty(); }
    bool universe_empty() const { return universe_.empty(); }
    std::uint64_t core_size() const { return core_size_; }
    std::uint64_t core_weight() const { return core_weight_; }
    std::uint64_t assigned_total() const { return assigned_total_; }
    const std::vector<FringeEntry>& fringe() const { return fringe_; }
    const std::vector<VertexId>& last_candidates() const { return candidates_; }
    const std::vector<PartitionId>& assignment() const { return assignment_; }
    std::vector<PartitionId> take_assignment() { return std::move(assignment_); }

    // Instrumentation hook: force a vertex from the universe into the
    // fringe with a fixed cached score.
    void inject_fringe_entry(VertexId v, std::uint64_t score);

    // Validates the disjointness and bookkeeping invariants; throws
    // std::logic_error on violation. Driven by property tests.
    void check_state_invariants() const;

private:
    void commit_assignment(VertexId v);
    void remove_from_universe(VertexId v);
    void add_to_universe(VertexId v);
    void select_candidates();
    std::uint64_t cached_score(VertexId v);

    static constexpr std::uint64_t kNotInUniverse = static_cast<std::uint64_t>(-1);

    const Hypergraph& g_;
    HypeParams params_;
    Rng rng_;

    std::vector<PartitionId> assignment_;
    std::uint64_t assigned_total_ = 0;

    std::vector<VertexId> universe_;
    std::vector<std::uint64_t> universe_pos_;

    std::uint32_t current_ = 0;
    std::uint32_t epoch_ = 0;  // current partition + 1; 0 = never touched
    std::uint64_t core_size_ = 0;
    std::uint64_t core_weight_ = 0;

    std::vector<std::uint32_t> fringe_epoch_;  // v in fringe iff == epoch_
    std::vector<std::uint32_t> cache_epoch_;   // cache valid iff == epoch_
    std::vector<std::uint64_t> cache_score_;
    std::vector<FringeEntry> fringe_;          // sorted by (score, vertex)

    std::vector<std::uint32_t> consumed_;      // per edge: members assigned so far
    std::vector<std::uint32_t> active_epoch_;  // edge in active set iff == epoch_
    std::set<std::pair<std::uint32_t, HyperedgeId>> active_edges_;  // (size, id)

    std::vector<VertexId> candidates_;

    std::vector<std::uint64_t> seen_;  // scratch for distinct-neighbor counting
    std::uint64_t seen_stamp_ = 0;
};

}  // namespace hype::detail

#endif  // HYPE_SRC_EXPANSION_HPP
