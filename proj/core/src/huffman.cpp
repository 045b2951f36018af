#include "tge/huffman.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "tge/error.hpp"

namespace tge {

HuffmanTree build_huffman(std::span<const uint64_t> frequencies) {
    const size_t n = frequencies.size();
    if (n < 2) {
        throw ValidationError("degenerate vocabulary: huffman tree needs at least 2 leaves, got " +
                              std::to_string(n));
    }
    if (std::all_of(frequencies.begin(), frequencies.end(), [](uint64_t f) { return f == 0; })) {
        throw ValidationError("degenerate vocabulary: all frequencies are zero");
    }

    // Tree nodes: 0..n-1 leaves, n..2n-2 merge-ordered internal nodes.
    const size_t total = 2 * n - 1;
    std::vector<uint64_t> freq(total, 0);
    std::vector<uint32_t> min_leaf(total, 0);
    std::vector<uint32_t> parent(total, 0);
    std::vector<uint8_t> branch(total, 0);

    using Entry = std::tuple<uint64_t, uint32_t, uint32_t>;  // (freq, min leaf, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (size_t v = 0; v < n; ++v) {
        freq[v] = frequencies[v];
        min_leaf[v] = static_cast<uint32_t>(v);
        heap.emplace(freq[v], min_leaf[v], static_cast<uint32_t>(v));
    }

    for (size_t m = 0; m + 1 < n; ++m) {
        auto [fa, ta, a] = heap.top();
        heap.pop();
        auto [fb, tb, b] = heap.top();
        heap.pop();
        uint32_t node = static_cast<uint32_t>(n + m);
        freq[node] = fa + fb;
        min_leaf[node] = std::min(ta, tb);
        parent[a] = node;
        branch[a] = 0;
        parent[b] = node;
        branch[b] = 1;
        heap.emplace(freq[node], min_leaf[node], node);
    }

    const uint32_t root = static_cast<uint32_t>(total - 1);
    HuffmanTree tree;
    tree.codes.resize(n);
    tree.paths.resize(n);
    for (size_t v = 0; v < n; ++v) {
        std::vector<uint8_t>& code = tree.codes[v];
        std::vector<uint32_t>& path = tree.paths[v];
        for (uint32_t cur = static_cast<uint32_t>(v); cur != root; cur = parent[cur]) {
            code.push_back(branch[cur]);
            path.push_back(parent[cur] - static_cast<uint32_t>(n));  // internal ids 0..n-2
        }
        std::reverse(code.begin(), code.end());
        std::reverse(path.begin(), path.end());
    }
    return tree;
}

uint64_t weighted_code_length(const HuffmanTree& tree, std::span<const uint64_t> frequencies) {
    uint64_t total = 0;
    for (size_t v = 0; v < tree.leaf_count(); ++v) {
        total += frequencies[v] * tree.codes[v].size();
    }
    return total;
}

}  // namespace tge
