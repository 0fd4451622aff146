#include "bnsi/combinatorics.hpp"

#include <limits>

namespace bnsi {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        // r * num / i is exact at every step; guard the multiply
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

void for_each_combination_lex(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

void for_each_combination_colex(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        fn(c);
        // colex successor: bump the lowest position that can move without
        // passing its right neighbour, resetting everything below it
        int i = 0;
        while (i < k) {
            int limit = (i + 1 < k) ? c[i + 1] : n;
            if (c[i] + 1 < limit) break;
            ++i;
        }
        if (i == k) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
    }
}

void for_each_set_partition(int n, const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
    if (n <= 0) return;
    std::vector<int> rgs(n, 0);   // rgs[0] = 0 always
    std::vector<int> maxv(n, 0);  // maxv[i] = max(rgs[0..i])
    std::vector<std::vector<int>> blocks;
    while (true) {
        int nb = maxv[n - 1] + 1;
        blocks.assign(nb, {});
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
        if (!fn(blocks)) return;
        // lexicographic RGS successor
        int i = n - 1;
        while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
}

void for_each_subset_desc_size(int n, const std::function<bool(std::uint32_t)>& fn) {
    for (int size = n; size >= 0; --size) {
        bool go = true;
        for_each_combination_lex(n, size, [&](const std::vector<int>& c) {
            if (!go) return;
            std::uint32_t mask = 0;
            for (int i : c) mask |= (1u << i);
            if (!fn(mask)) go = false;
        });
        if (!go) return;
    }
}

}  // namespace bnsi
