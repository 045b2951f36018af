#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tge/huffman.hpp"
#include "tge/walk.hpp"

namespace tge {

struct TrainConfig {
    uint32_t dim = 128;       // d
    uint32_t window = 4;      // k, symmetric on each side, no shrinking
    uint32_t epochs = 5;
    double initial_lr = 0.025;
    double final_lr = 1e-4;   // linear decay target over all (epoch, pair) steps
    uint64_t seed = 1;
    unsigned workers = 1;     // >1 trades determinism for throughput (lost updates tolerated)
};

// Node vectors (the embedding) plus one vector per Huffman internal node.
// Input vectors start uniform in [-0.5/dim, +0.5/dim], inner vectors at zero.
class EmbeddingModel {
public:
    EmbeddingModel(size_t vocab, uint32_t dim, uint64_t seed);

    size_t vocab_size() const { return vocab_; }
    uint32_t dim() const { return dim_; }

    std::span<double> input(uint32_t v) { return {input_.data() + size_t(v) * dim_, dim_}; }
    std::span<const double> input(uint32_t v) const { return {input_.data() + size_t(v) * dim_, dim_}; }
    std::span<double> inner(uint32_t b) { return {inner_.data() + size_t(b) * dim_, dim_}; }
    std::span<const double> inner(uint32_t b) const { return {inner_.data() + size_t(b) * dim_, dim_}; }

private:
    size_t vocab_;
    uint32_t dim_;
    std::vector<double> input_;  // vocab x dim
    std::vector<double> inner_;  // (vocab - 1) x dim
};

// Probability of emitting leaf `target` given the input vector of `center`:
// the product of sigmoid branch decisions along target's Huffman path.
// Summed over all leaves this is exactly 1.
double path_probability(const EmbeddingModel& model, const HuffmanTree& tree,
                        uint32_t center, uint32_t target);

// -log path_probability, evaluated in softplus form so it stays finite.
double path_loss(const EmbeddingModel& model, const HuffmanTree& tree,
                 uint32_t center, uint32_t target);

// One SGD pass per (center, context) pair per epoch: every walk position i
// pairs with every in-range j, |j - i| <= window, j != i. The learning rate
// decays linearly from initial_lr to final_lr over all steps. Single-worker
// runs are bitwise reproducible for a fixed (corpus, config, seed).
EmbeddingModel train(const WalkCorpus& corpus, const HuffmanTree& tree, const TrainConfig& config);

// Max relative error between analytic gradients of path_loss (w.r.t. the
// center input vector and every inner vector on the path) and central finite
// differences with step h. Errors are absolute where the gradients vanish.
double gradient_check(const EmbeddingModel& model, const HuffmanTree& tree,
                      uint32_t center, uint32_t target, double h);

// Text format: "<node_count> <dim>" header, then one line per node:
// external id and dim components, single-space separated. Components are
// printed with max_digits10 so a reload is bit-exact.
void save_embedding(const EmbeddingModel& model, std::span<const std::string> names,
                    const std::string& path);

struct LoadedEmbedding {
    uint32_t dim = 0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> vectors;
    std::unordered_map<std::string, uint32_t> index;

    const std::vector<double>* find(const std::string& name) const {
        auto it = index.find(name);
        return it == index.end() ? nullptr : &vectors[it->second];
    }
};

LoadedEmbedding load_embedding(const std::string& path);

}  // namespace tge
