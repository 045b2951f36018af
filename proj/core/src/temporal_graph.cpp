#include "tge/temporal_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "tge/error.hpp"

namespace tge {

uint32_t TemporalGraph::intern(std::string_view external) {
    auto it = index_of_.find(std::string(external));
    if (it != index_of_.end()) return it->second;
    uint32_t idx = static_cast<uint32_t>(external_ids_.size());
    external_ids_.emplace_back(external);
    index_of_.emplace(external_ids_.back(), idx);
    out_adj_.emplace_back();
    return idx;
}

uint32_t TemporalGraph::add_edge(std::string_view src_external, std::string_view dst_external,
                                 double weight, int64_t timestamp) {
    if (!(weight >= 0.0)) {
        throw ValidationError("edge weight must be non-negative, got " + std::to_string(weight));
    }
    uint32_t src = intern(src_external);
    uint32_t dst = intern(dst_external);
    uint32_t id = static_cast<uint32_t>(edge_src_.size());
    edge_src_.push_back(src);
    edge_dst_.push_back(dst);
    edge_weight_.push_back(weight);
    edge_time_.push_back(timestamp);

    // The fresh id is larger than every existing id, so inserting after all
    // edges with time <= timestamp keeps (timestamp, id) order.
    auto& adj = out_adj_[src];
    auto pos = std::upper_bound(adj.begin(), adj.end(), timestamp,
                                [this](int64_t t, uint32_t e) { return t < edge_time_[e]; });
    adj.insert(pos, id);
    return id;
}

uint32_t TemporalGraph::node_index(std::string_view external) const {
    auto it = index_of_.find(std::string(external));
    if (it == index_of_.end()) {
        throw LookupError("unknown node: " + std::string(external));
    }
    return it->second;
}

bool TemporalGraph::has_node(std::string_view external) const {
    return index_of_.count(std::string(external)) > 0;
}

void TemporalGraph::check_node(uint32_t node) const {
    if (node >= external_ids_.size()) {
        throw LookupError("node index out of range: " + std::to_string(node));
    }
}

std::span<const uint32_t> TemporalGraph::out_edges(uint32_t node) const {
    check_node(node);
    return out_adj_[node];
}

std::span<const uint32_t> TemporalGraph::temporal_edge_neighborhood(uint32_t node, int64_t t) const {
    check_node(node);
    const auto& adj = out_adj_[node];
    auto first = std::lower_bound(adj.begin(), adj.end(), t,
                                  [this](uint32_t e, int64_t floor) { return edge_time_[e] < floor; });
    return {adj.data() + (first - adj.begin()), static_cast<size_t>(adj.end() - first)};
}

TemporalGraph TemporalGraph::k_order_subgraph(const SubgraphSpec& spec) const {
    for (uint32_t c : spec.centers) check_node(c);

    std::vector<char> keep(node_count(), 0);
    for (uint32_t c : spec.centers) keep[c] = 1;

    // Outward BFS along edge direction, depth-limited by k_out.
    {
        std::vector<uint32_t> frontier(spec.centers.begin(), spec.centers.end());
        std::vector<char> seen = keep;
        for (uint32_t hop = 0; hop < spec.k_out && !frontier.empty(); ++hop) {
            std::vector<uint32_t> next;
            for (uint32_t u : frontier) {
                for (uint32_t e : out_adj_[u]) {
                    uint32_t v = edge_dst_[e];
                    if (!seen[v]) {
                        seen[v] = 1;
                        keep[v] = 1;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    // Inward BFS against edge direction, depth-limited by k_in.
    if (spec.k_in > 0) {
        std::vector<std::vector<uint32_t>> in_adj(node_count());
        for (size_t e = 0; e < edge_src_.size(); ++e) {
            in_adj[edge_dst_[e]].push_back(edge_src_[e]);
        }
        std::vector<uint32_t> frontier(spec.centers.begin(), spec.centers.end());
        std::vector<char> seen(node_count(), 0);
        for (uint32_t c : spec.centers) seen[c] = 1;
        for (uint32_t hop = 0; hop < spec.k_in && !frontier.empty(); ++hop) {
            std::vector<uint32_t> next;
            for (uint32_t u : frontier) {
                for (uint32_t p : in_adj[u]) {
                    if (!seen[p]) {
                        seen[p] = 1;
                        keep[p] = 1;
                        next.push_back(p);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    TemporalGraph sub;
    for (uint32_t u = 0; u < node_count(); ++u) {
        if (keep[u]) sub.intern(external_ids_[u]);
    }
    for (size_t e = 0; e < edge_src_.size(); ++e) {
        if (keep[edge_src_[e]] && keep[edge_dst_[e]]) {
            sub.add_edge(external_ids_[edge_src_[e]], external_ids_[edge_dst_[e]],
                         edge_weight_[e], edge_time_[e]);
        }
    }
    return sub;
}

TemporalGraph splice(const std::vector<const TemporalGraph*>& parts) {
    using Key = std::tuple<std::string_view, std::string_view, double, int64_t>;
    struct Mult {
        size_t needed = 0;
        size_t emitted = 0;
    };
    std::map<Key, Mult> edges;

    for (const TemporalGraph* g : parts) {
        std::map<Key, size_t> local;
        for (uint32_t e = 0; e < g->edge_count(); ++e) {
            Key key{g->external_id(g->edge_src(e)), g->external_id(g->edge_dst(e)),
                    g->edge_weight(e), g->edge_time(e)};
            ++local[key];
        }
        for (const auto& [key, count] : local) {
            auto& m = edges[key];
            m.needed = std::max(m.needed, count);
        }
    }

    TemporalGraph result;
    for (const TemporalGraph* g : parts) {
        for (uint32_t u = 0; u < g->node_count(); ++u) {
            result.intern_node(g->external_id(u));
        }
        for (uint32_t e = 0; e < g->edge_count(); ++e) {
            Key key{g->external_id(g->edge_src(e)), g->external_id(g->edge_dst(e)),
                    g->edge_weight(e), g->edge_time(e)};
            auto& m = edges.at(key);
            if (m.emitted < m.needed) {
                ++m.emitted;
                result.add_edge(std::get<0>(key), std::get<1>(key),
                                g->edge_weight(e), g->edge_time(e));
            }
        }
    }
    return result;
}

}  // namespace tge
