#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tge {

// Binary prefix-code tree over node frequencies. Leaf v's probability under
// the hierarchical softmax factors into one sigmoid branch decision per
// internal node on its root path.
struct HuffmanTree {
    // Per leaf, root-to-leaf: branch bits (0 = first-merged child) and the
    // internal node ids whose vectors parameterize each decision.
    // codes[v].size() == paths[v].size() == code length of leaf v.
    std::vector<std::vector<uint8_t>> codes;
    std::vector<std::vector<uint32_t>> paths;

    size_t leaf_count() const { return codes.size(); }
    size_t internal_count() const { return codes.empty() ? 0 : codes.size() - 1; }
};

// Greedy two-minimum merge. Ties are broken by (frequency, smallest leaf id
// contained in the subtree), which pins a unique tree for equal-frequency
// vocabularies. Requires >= 2 leaves and at least one positive frequency;
// zero-frequency leaves are allowed and end up deepest.
HuffmanTree build_huffman(std::span<const uint64_t> frequencies);

// Frequency-weighted total code length: sum_v freq[v] * |code(v)|.
uint64_t weighted_code_length(const HuffmanTree& tree, std::span<const uint64_t> frequencies);

}  // namespace tge
