#pragma once

#include <cstdint>
#include <vector>

namespace chordalkit::detail {

// Visit the size-k index subsets of [0, n) in lexicographic order; the
// visitor receives indices into the caller's pool. Return false to stop.
template <typename F>
bool for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

// Lexicographic unranking: the rank-th size-k subset of [0, n).
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> idx(k);
    int value = 0;
    for (int slot = 0; slot < k; ++slot) {
        while (true) {
            std::uint64_t block = binomial(n - value - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
            ++value;
        }
        idx[slot] = value++;
    }
    return idx;
}

// Advance to the next combination in lexicographic order; false at the end.
inline bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

} // namespace chordalkit::detail
