#include "tge/walk.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "tge/error.hpp"

namespace tge {

std::string Strategy::name() const {
    switch (kind) {
        case SamplingKind::kUniform: return "uniform";
        case SamplingKind::kTemporalBiased: return "tbs";
        case SamplingKind::kWeightBiased: return "wbs";
        case SamplingKind::kTemporalWeightBiased: return "tbs+wbs";
        case SamplingKind::kStaticUniform: return "static";
    }
    return "?";
}

Strategy parse_strategy(const std::string& text, double alpha) {
    if (text == "uniform") return Strategy::uniform();
    if (text == "tbs") return Strategy::tbs();
    if (text == "wbs") return Strategy::wbs();
    if (text == "tbs+wbs" || text == "tbs-wbs" || text == "tbs_wbs") return Strategy::tbs_wbs(alpha);
    if (text == "static") return Strategy::static_uniform();
    throw ValidationError("unknown strategy: " + text +
                          " (expected uniform|tbs|wbs|tbs+wbs|static)");
}

namespace {

// Mean-of-span ranks in ascending key order; O(n log n) argsort plus one pass.
std::vector<double> tied_ranks(std::span<const double> keys, bool ascending) {
    if (keys.empty()) throw ValidationError("tied ranks require a non-empty key list");
    const size_t n = keys.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return keys[a] < keys[b]; });

    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && keys[order[j + 1]] == keys[order[i]]) ++j;
        // ascending rank of sorted position p is p+1; the group [i..j] shares the mean
        double mean_asc = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        double rank = ascending ? mean_asc : static_cast<double>(n + 1) - mean_asc;
        for (size_t p = i; p <= j; ++p) ranks[order[p]] = rank;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> normalized(std::vector<double> values) {
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    for (double& v : values) v /= sum;
    return values;
}

}  // namespace

std::vector<double> tied_ranks_ascending(std::span<const double> keys) {
    return tied_ranks(keys, true);
}

std::vector<double> tied_ranks_descending(std::span<const double> keys) {
    return tied_ranks(keys, false);
}

std::vector<double> rank_descending_time(const TemporalGraph& graph,
                                         std::span<const uint32_t> neighborhood) {
    if (neighborhood.empty()) throw ValidationError("empty neighborhood has no time ranks");
    std::vector<double> times(neighborhood.size());
    for (size_t i = 0; i < neighborhood.size(); ++i) {
        times[i] = static_cast<double>(graph.edge_time(neighborhood[i]));
    }
    return tied_ranks(times, false);
}

std::vector<double> rank_ascending_weight(const TemporalGraph& graph,
                                          std::span<const uint32_t> neighborhood) {
    if (neighborhood.empty()) throw ValidationError("empty neighborhood has no weight ranks");
    std::vector<double> weights(neighborhood.size());
    for (size_t i = 0; i < neighborhood.size(); ++i) {
        weights[i] = graph.edge_weight(neighborhood[i]);
    }
    return tied_ranks(weights, true);
}

std::vector<double> edge_probabilities(const TemporalGraph& graph,
                                       std::span<const uint32_t> neighborhood,
                                       const Strategy& strategy) {
    if (neighborhood.empty()) {
        throw ValidationError("edge probabilities require a non-empty neighborhood");
    }
    if (!(strategy.alpha >= 0.0 && strategy.alpha <= 1.0)) {
        throw ValidationError("alpha must lie in [0, 1]");
    }
    const size_t n = neighborhood.size();
    switch (strategy.kind) {
        case SamplingKind::kUniform:
        case SamplingKind::kStaticUniform:
            return std::vector<double>(n, 1.0 / static_cast<double>(n));
        case SamplingKind::kTemporalBiased:
            return normalized(rank_descending_time(graph, neighborhood));
        case SamplingKind::kWeightBiased:
            return normalized(rank_ascending_weight(graph, neighborhood));
        case SamplingKind::kTemporalWeightBiased: {
            // Exact single-domain reductions at the exponent boundaries.
            if (strategy.alpha == 1.0) return normalized(rank_descending_time(graph, neighborhood));
            if (strategy.alpha == 0.0) return normalized(rank_ascending_weight(graph, neighborhood));
            std::vector<double> p_time = normalized(rank_descending_time(graph, neighborhood));
            std::vector<double> p_weight = normalized(rank_ascending_weight(graph, neighborhood));
            // Geometric blend in log space; the max shift guards exp underflow.
            std::vector<double> logp(n);
            double max_logp = -HUGE_VAL;
            for (size_t i = 0; i < n; ++i) {
                logp[i] = strategy.alpha * std::log(p_time[i]) +
                          (1.0 - strategy.alpha) * std::log(p_weight[i]);
                max_logp = std::max(max_logp, logp[i]);
            }
            std::vector<double> blended(n);
            for (size_t i = 0; i < n; ++i) blended[i] = std::exp(logp[i] - max_logp);
            return normalized(std::move(blended));
        }
    }
    throw ValidationError("unhandled sampling kind");
}

namespace {

size_t sample_index(std::span<const double> probabilities, double u) {
    double acc = 0.0;
    for (size_t i = 0; i < probabilities.size(); ++i) {
        acc += probabilities[i];
        if (u < acc) return i;
    }
    return probabilities.size() - 1;
}

}  // namespace

Walk temporal_walk(const TemporalGraph& graph, uint32_t start_node, const WalkConfig& config,
                   const Strategy& strategy, Rng& rng) {
    Walk walk;
    walk.nodes.push_back(start_node);
    (void)graph.out_edges(start_node);  // range-checks the start node

    const bool is_static = strategy.kind == SamplingKind::kStaticUniform;
    int64_t floor = TemporalGraph::kNoTimeFloor;
    uint32_t current = start_node;
    while (walk.nodes.size() < config.walk_length) {
        std::span<const uint32_t> neighborhood =
            is_static ? graph.out_edges(current)
                      : graph.temporal_edge_neighborhood(current, floor);
        if (neighborhood.empty()) break;  // leaf: return the walk immediately
        std::vector<double> probs = edge_probabilities(graph, neighborhood, strategy);
        uint32_t edge = neighborhood[sample_index(probs, rng.next_double())];
        walk.edge_ids.push_back(edge);
        current = graph.edge_dst(edge);
        walk.nodes.push_back(current);
        if (!is_static) floor = graph.edge_time(edge);
    }
    return walk;
}

WalkCorpus generate_corpus(const TemporalGraph& graph, const WalkConfig& config,
                           const Strategy& strategy, unsigned workers) {
    if (config.walk_length < 1 || config.walks_per_node < 1) {
        throw ValidationError("walk_length and walks_per_node must be >= 1");
    }
    const size_t n = graph.node_count();
    const uint32_t rounds = config.walks_per_node;
    WalkCorpus corpus;
    corpus.walks.resize(n * rounds);
    corpus.node_frequencies.assign(n, 0);
    if (n == 0) return corpus;

    // Stream coordinate reserved for the per-round shuffle; node indices are
    // 32-bit so it cannot collide with a (round, node) stream.
    constexpr uint64_t kShuffleStream = ~uint64_t{0};

    std::vector<uint32_t> order(n);
    for (uint32_t round = 0; round < rounds; ++round) {
        std::iota(order.begin(), order.end(), 0);
        Rng shuffle_rng(derive_seed(config.seed, round, kShuffleStream));
        shuffle_rng.shuffle(std::span<uint32_t>(order));

        auto run_range = [&](size_t begin, size_t end) {
            for (size_t pos = begin; pos < end; ++pos) {
                uint32_t start = order[pos];
                Rng rng(derive_seed(config.seed, round, start));
                corpus.walks[static_cast<size_t>(round) * n + pos] =
                    temporal_walk(graph, start, config, strategy, rng);
            }
        };

        unsigned used = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
        if (used == 1) {
            run_range(0, n);
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (n + used - 1) / used;
            for (unsigned w = 0; w < used; ++w) {
                size_t begin = w * chunk;
                size_t end = std::min(n, begin + chunk);
                if (begin >= end) break;
                pool.emplace_back(run_range, begin, end);
            }
            for (auto& t : pool) t.join();
        }
    }

    for (const Walk& walk : corpus.walks) {
        for (uint32_t v : walk.nodes) ++corpus.node_frequencies[v];
    }
    return corpus;
}

void save_corpus(const WalkCorpus& corpus, const TemporalGraph& graph, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open corpus file for writing: " + path);
    for (const Walk& walk : corpus.walks) {
        for (size_t i = 0; i < walk.nodes.size(); ++i) {
            if (i) out << ' ';
            out << graph.external_id(walk.nodes[i]);
        }
        out << '\n';
    }
    if (!out) throw FormatError("failed writing corpus file: " + path);
}

LoadedCorpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open corpus file: " + path);
    LoadedCorpus loaded;
    std::unordered_map<std::string, uint32_t> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Walk walk;
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            auto [it, inserted] = ids.emplace(token, static_cast<uint32_t>(loaded.names.size()));
            if (inserted) loaded.names.push_back(token);
            walk.nodes.push_back(it->second);
        }
        loaded.corpus.walks.push_back(std::move(walk));
    }
    loaded.corpus.node_frequencies.assign(loaded.names.size(), 0);
    for (const Walk& walk : loaded.corpus.walks) {
        for (uint32_t v : walk.nodes) ++loaded.corpus.node_frequencies[v];
    }
    if (loaded.corpus.walks.empty()) throw FormatError("corpus file has no walks: " + path);
    return loaded;
}

}  // namespace tge
