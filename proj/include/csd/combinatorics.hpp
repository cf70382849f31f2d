#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace csd {

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
/// f returns false to stop early. Returns false iff stopped early.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f)
{
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        if (k == 0) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Calls f(choice) for every element of sizes[0] x sizes[1] x ... in
/// lexicographic order (last position varies fastest). Early stop as above.
template <typename F>
bool for_each_product(const std::vector<std::size_t>& sizes, F&& f)
{
    for (auto s : sizes) {
        if (s == 0) return true;
    }
    std::vector<std::size_t> choice(sizes.size(), 0);
    while (true) {
        if (!f(static_cast<const std::vector<std::size_t>&>(choice))) return false;
        std::size_t i = sizes.size();
        while (i > 0) {
            --i;
            if (++choice[i] < sizes[i]) break;
            choice[i] = 0;
            if (i == 0) return true;
        }
        if (sizes.empty()) return true;
    }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace csd
