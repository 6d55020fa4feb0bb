#include "expansion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hype::detail {

ExpansionState::ExpansionState(const Hypergraph& g, const HypeParams& params)
    : g_(g),
      params_(params),
      rng_(params.seed),
      assignment_(g.num_vertices(), kUnassigned),
      universe_(g.num_vertices()),
      universe_pos_(g.num_vertices()),
      fringe_epoch_(g.num_vertices(), 0),
      cache_epoch_(g.num_vertices(), 0),
      cache_score_(g.num_vertices(), 0),
      consumed_(g.num_edges(), 0),
      active_epoch_(g.num_edges(), 0),
      seen_(g.num_vertices(), 0) {
    std::iota(universe_.begin(), universe_.end(), VertexId{0});
    std::iota(universe_pos_.begin(), universe_pos_.end(), std::uint64_t{0});
}

void ExpansionState::remove_from_universe(VertexId v) {
    const std::uint64_t pos = universe_pos_[v];
    const VertexId last = universe_.back();
    universe_[pos] = last;
    universe_pos_[last] = pos;
    universe_.pop_back();
    universe_pos_[v] = kNotInUniverse;
}

void ExpansionState::add_to_universe(VertexId v) {
    universe_pos_[v] = universe_.size();
    universe_.push_back(v);
}

void ExpansionState::begin_partition(std::uint32_t i) {
    current_ = i;
    epoch_ = i + 1;
    fringe_.clear();
    active_edges_.clear();
    core_size_ = 0;
    core_weight_ = 0;
    const VertexId seed = universe_[rng_.next_below(universe_.size())];
    remove_from_universe(seed);
    commit_assignment(seed);
}

void ExpansionState::commit_assignment(VertexId v) {
    assignment_[v] = current_;
    ++assigned_total_;
    ++core_size_;
    core_weight_ += 1 + g_.vertex_degree(v);
    for (const HyperedgeId e : g_.vertex_edges(v)) {
        const auto size = static_cast<std::uint32_t>(g_.edge_size(e));
        ++consumed_[e];
        if (consumed_[e] == size) {
            // Exhausted: every member is in some core. Drop it for good.
            if (active_epoch_[e] == epoch_) {
                active_edges_.erase({size, e});
                active_epoch_[e] = 0;
            }
        } else if (active_epoch_[e] != epoch_) {
            active_epoch_[e] = epoch_;
            active_edges_.insert({size, e});
        }
    }
}

void ExpansionState::select_candidates() {
    candidates_.clear();
    const std::uint32_t r = params_.fringe_candidates;
    for (auto it = active_edges_.begin(); it != active_edges_.end() && candidates_.size() < r; ++it) {
        for (const VertexId v : g_.edge_members(it->second)) {
            if (assignment_[v] != kUnassigned || fringe_epoch_[v] == epoch_) {
                continue;
            }
            if (std::find(candidates_.begin(), candidates_.end(), v) != candidates_.end()) {
                continue;
            }
            candidates_.push_back(v);
            if (candidates_.size() == r) {
                break;
            }
        }
    }
}

std::uint64_t ExpansionState::cached_score(VertexId v) {
    if (!params_.cache_enabled || cache_epoch_[v] != epoch_) {
        cache_score_[v] = external_score(v);
        cache_epoch_[v] = epoch_;
    }
    return cache_score_[v];
}

void ExpansionState::update_fringe() {
    select_candidates();
    for (const VertexId v : candidates_) {
        fringe_.push_back({cached_score(v), v});
    }
    std::sort(fringe_.begin(), fringe_.end());
    if (fringe_.size() > params_.fringe_size) {
        for (std::size_t j = params_.fringe_size; j < fringe_.size(); ++j) {
            const VertexId v = fringe_[j].vertex;
            if (fringe_epoch_[v] == epoch_) {
                // Evicted member; candidates that never made it in simply
                // stay in the universe.
                fringe_epoch_[v] = 0;
                add_to_universe(v);
            }
        }
        fringe_.resize(params_.fringe_size);
    }
    for (const FringeEntry& entry : fringe_) {
        if (fringe_epoch_[entry.vertex] != epoch_) {
            fringe_epoch_[entry.vertex] = epoch_;
            remove_from_universe(entry.vertex);
        }
    }
    if (fringe_.empty() && !universe_.empty()) {
        const VertexId v = universe_[rng_.next_below(universe_.size())];
        fringe_.push_back({cached_score(v), v});
        fringe_epoch_[v] = epoch_;
        remove_from_universe(v);
    }
}

VertexId ExpansionState::update_core() {
    if (fringe_.empty()) {
        throw InvalidParams("update_core requires a non-empty fringe");
    }
    const FringeEntry best = fringe_.front();
    fringe_.erase(fringe_.begin());
    fringe_epoch_[best.vertex] = 0;
    commit_assignment(best.vertex);
    return best.vertex;
}

std::uint64_t ExpansionState::external_score(VertexId v) {
    ++seen_stamp_;
    std::uint64_t count = 0;
    for (const HyperedgeId e : g_.vertex_edges(v)) {
        for (const VertexId u : g_.edge_members(e)) {
            if (u == v || seen_[u] == seen_stamp_) {
                continue;
            }
            seen_[u] = seen_stamp_;
            if (fringe_epoch_[u] == epoch_) {
                continue;
            }
            if (params_.score_excludes_core && assignment_[u] == current_) {
                continue;
            }
            ++count;
        }
    }
    return count;
}

void ExpansionState::release_fringe() {
    for (const FringeEntry& entry : fringe_) {
        fringe_epoch_[entry.vertex] = 0;
        add_to_universe(entry.vertex);
    }
    fringe_.clear();
}

void ExpansionState::assign_remainder(std::uint32_t i) {
    for (VertexId v = 0; v < assignment_.size(); ++v) {
        if (assignment_[v] == kUnassigned) {
            assignment_[v] = i;
            ++assigned_total_;
        }
    }
}

void ExpansionState::inject_fringe_entry(VertexId v, std::uint64_t score) {
    remove_from_universe(v);
    fringe_epoch_[v] = epoch_;
    cache_epoch_[v] = epoch_;
    cache_score_[v] = score;
    const FringeEntry entry{score, v};
    fringe_.insert(std::upper_bound(fringe_.begin(), fringe_.end(), entry), entry);
}

void ExpansionState::check_state_invariants() const {
    if (fringe_.size() > params_.fringe_size) {
        throw std::logic_error("fringe exceeds s");
    }
    if (!std::is_sorted(fringe_.begin(), fringe_.end())) {
        throw std::logic_error("fringe not sorted by (score, id)");
    }
    std::uint64_t in_fringe = 0;
    for (const FringeEntry& entry : fringe_) {
        if (fringe_epoch_[entry.vertex] != epoch_) {
            throw std::logic_error("fringe entry without membership mark");
        }
        if (cache_epoch_[entry.vertex] != epoch_) {
            throw std::logic_error("fringe entry without cache entry");
        }
        if (assignment_[entry.vertex] != kUnassigned) {
            throw std::logic_error("fringe entry already assigned");
        }
        ++in_fringe;
    }
    for (std::uint64_t pos = 0; pos < universe_.size(); ++pos) {
        const VertexId v = universe_[pos];
        if (universe_pos_[v] != pos) {
            throw std::logic_error("universe position table corrupt");
        }
        if (assignment_[v] != kUnassigned || fringe_epoch_[v] == epoch_) {
            throw std::logic_error("universe overlaps a core or the fringe");
        }
    }
    if (assigned_total_ + in_fringe + universe_.size() != assignment_.size()) {
        throw std::logic_error("universe, fringe, and cores do not partition V");
    }
}

}  // namespace hype::detail
