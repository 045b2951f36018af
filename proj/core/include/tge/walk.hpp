#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tge/rng.hpp"
#include "tge/temporal_graph.hpp"

namespace tge {

enum class SamplingKind {
    kUniform,              // equal probability over the valid neighborhood
    kTemporalBiased,       // rank-linear preference for the temporally nearest valid edge
    kWeightBiased,         // rank-linear preference for the largest transaction amount
    kTemporalWeightBiased, // geometric blend of the two, exponent alpha
    kStaticUniform,        // ignores timestamps entirely (static-walk baseline)
};

struct Strategy {
    SamplingKind kind = SamplingKind::kUniform;
    double alpha = 0.5;  // blend exponent, only read by kTemporalWeightBiased

    static Strategy uniform() { return {SamplingKind::kUniform, 0.5}; }
    static Strategy tbs() { return {SamplingKind::kTemporalBiased, 0.5}; }
    static Strategy wbs() { return {SamplingKind::kWeightBiased, 0.5}; }
    static Strategy tbs_wbs(double alpha = 0.5) { return {SamplingKind::kTemporalWeightBiased, alpha}; }
    static Strategy static_uniform() { return {SamplingKind::kStaticUniform, 0.5}; }

    std::string name() const;
};

// Parses "uniform", "tbs", "wbs", "tbs+wbs" (alias "tbs-wbs"), "static".
Strategy parse_strategy(const std::string& text, double alpha = 0.5);

struct WalkConfig {
    uint32_t walk_length = 10;    // l
    uint32_t walks_per_node = 4;  // r
    uint64_t seed = 1;
};

struct Walk {
    std::vector<uint32_t> nodes;     // v_1 .. v_m, m <= walk_length
    std::vector<uint32_t> edge_ids;  // e_i connects nodes[i] -> nodes[i+1]
};

struct WalkCorpus {
    std::vector<Walk> walks;
    std::vector<uint64_t> node_frequencies;  // per node index, sums to total occurrences
};

// Tied ranks with arithmetic-mean averaging over equal keys; every rank > 0.
// Ascending: keys sorted ascending receive 1..n (largest key -> largest rank).
// Descending: keys sorted ascending receive n..1 (smallest key -> largest rank).
// Averaging makes the ranks, and everything downstream, invariant under
// permutation of the input.
std::vector<double> tied_ranks_ascending(std::span<const double> keys);
std::vector<double> tied_ranks_descending(std::span<const double> keys);

// Rank of each neighborhood edge by timestamp, soonest edge largest.
std::vector<double> rank_descending_time(const TemporalGraph& graph,
                                         std::span<const uint32_t> neighborhood);

// Rank of each neighborhood edge by weight, largest amount largest.
std::vector<double> rank_ascending_weight(const TemporalGraph& graph,
                                          std::span<const uint32_t> neighborhood);

// Per-edge selection probability over a non-empty neighborhood. Sums to 1,
// all entries strictly positive. The blend at alpha = 0 or 1 falls back to
// the pure single-domain computation so the reductions are exact.
std::vector<double> edge_probabilities(const TemporalGraph& graph,
                                       std::span<const uint32_t> neighborhood,
                                       const Strategy& strategy);

// One walk from start_node. The time floor starts unset (every out-edge is
// valid), then tracks the timestamp of each traversed edge, so consecutive
// edge timestamps never decrease. Stops at walk_length nodes or at a node
// with an empty valid neighborhood. kStaticUniform never sets the floor.
Walk temporal_walk(const TemporalGraph& graph, uint32_t start_node, const WalkConfig& config,
                   const Strategy& strategy, Rng& rng);

// r rounds over all nodes, node order reshuffled per round. Every
// (round, start node) pair draws from its own stream derived from the seed,
// so the corpus is identical for any worker count.
WalkCorpus generate_corpus(const TemporalGraph& graph, const WalkConfig& config,
                           const Strategy& strategy, unsigned workers = 1);

// One walk per line, space-separated external node ids.
void save_corpus(const WalkCorpus& corpus, const TemporalGraph& graph, const std::string& path);

struct LoadedCorpus {
    WalkCorpus corpus;
    std::vector<std::string> names;  // dense token id -> external id, first-seen order
};

LoadedCorpus load_corpus(const std::string& path);

}  // namespace tge
