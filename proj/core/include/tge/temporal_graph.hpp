#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tge {

// A transaction edge: src pays dst `weight` at `timestamp`.
struct TemporalEdge {
    uint32_t src = 0;
    uint32_t dst = 0;
    double weight = 0.0;
    int64_t timestamp = 0;
};

struct SubgraphSpec {
    std::vector<uint32_t> centers;
    uint32_t k_in = 1;
    uint32_t k_out = 3;
};

// Directed multigraph with weighted, timestamped edges. Nodes are interned
// account strings; node indices are dense 0..|V|-1. Per-node out-adjacency is
// kept sorted by (timestamp, edge id) so that time-floor neighborhood queries
// are a binary search. Writers are single-threaded; once construction stops,
// concurrent readers are safe.
class TemporalGraph {
public:
    // Sentinel time floor that admits every out-edge.
    static constexpr int64_t kNoTimeFloor = std::numeric_limits<int64_t>::min();

    TemporalGraph() = default;

    // Interns the endpoints on first sight and appends one edge. Parallel
    // edges and self-loops are permitted. Returns the new edge id.
    uint32_t add_edge(std::string_view src_external, std::string_view dst_external,
                      double weight, int64_t timestamp);

    // Interns an account with no edges yet; returns its index.
    uint32_t intern_node(std::string_view external) { return intern(external); }

    size_t node_count() const { return external_ids_.size(); }
    size_t edge_count() const { return edge_src_.size(); }

    const std::string& external_id(uint32_t node) const { return external_ids_.at(node); }

    // Index of an interned account, or throws LookupError.
    uint32_t node_index(std::string_view external) const;
    bool has_node(std::string_view external) const;

    uint32_t edge_src(uint32_t e) const { return edge_src_[e]; }
    uint32_t edge_dst(uint32_t e) const { return edge_dst_[e]; }
    double edge_weight(uint32_t e) const { return edge_weight_[e]; }
    int64_t edge_time(uint32_t e) const { return edge_time_[e]; }

    // Full out-adjacency of `node`, ascending (timestamp, edge id).
    std::span<const uint32_t> out_edges(uint32_t node) const;

    // Out-edges of `node` with timestamp >= t, ascending (timestamp, edge id).
    // O(log deg) lower bound into the sorted adjacency.
    std::span<const uint32_t> temporal_edge_neighborhood(uint32_t node, int64_t t) const;

    // Induced subgraph on nodes within spec.k_out hops along edge direction
    // from any center, union nodes within spec.k_in hops against edge
    // direction. In- and out-expansions are independent frontiers from the
    // centers. Every edge of this graph between retained nodes is kept with
    // its weight and timestamp; external ids are preserved, indices re-interned.
    TemporalGraph k_order_subgraph(const SubgraphSpec& spec) const;

private:
    uint32_t intern(std::string_view external);
    void check_node(uint32_t node) const;

    std::vector<std::string> external_ids_;
    std::unordered_map<std::string, uint32_t> index_of_;
    std::vector<uint32_t> edge_src_;
    std::vector<uint32_t> edge_dst_;
    std::vector<double> edge_weight_;
    std::vector<int64_t> edge_time_;
    std::vector<std::vector<uint32_t>> out_adj_;
};

// Node-wise and edge-wise union keyed by external id and edge content
// (src, dst, weight, timestamp). Content-identical edges contributed by
// overlapping parts are merged: the result keeps, per content key, the
// maximum multiplicity seen in any single part, so genuinely parallel
// duplicates survive while re-extracted copies of the same transaction
// do not double up.
TemporalGraph splice(const std::vector<const TemporalGraph*>& parts);

}  // namespace tge
