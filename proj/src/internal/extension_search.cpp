#include "internal/extension_search.hpp"

#include <cstdint>

namespace sccomp::internal {

namespace {

struct CountWalkSearch {
    const Digraph& quotient;
    const std::vector<int>& target;
    int t;
    std::vector<int> radix;        // radix[i] = target[i] + 1
    std::vector<std::uint32_t> stride;
    std::vector<char> dead;        // failed (counts, last) states
    std::vector<int> used;
    std::vector<int> walk;
    int remaining = 0;

    CountWalkSearch(const Digraph& q, const std::vector<int>& counts)
        : quotient(q), target(counts), t(static_cast<int>(counts.size())) {
        radix.resize(t);
        stride.resize(t);
        std::uint32_t prod = 1;
        for (int i = 0; i < t; ++i) {
            radix[i] = counts[i] + 1;
            stride[i] = prod;
            prod *= static_cast<std::uint32_t>(radix[i]);
            remaining += counts[i];
        }
        dead.assign(static_cast<size_t>(prod) * t, 0);
        used.assign(t, 0);
    }

    std::uint32_t code(int last) const {
        std::uint32_t c = 0;
        for (int i = 0; i < t; ++i) c += stride[i] * static_cast<std::uint32_t>(used[i]);
        return c * t + last;
    }

    // close_to >= 0 demands an arc from the final house back to it (cycle)
    bool extend(int last, int close_to) {
        if (remaining == 0)
            return close_to < 0 || quotient.has_arc(last, close_to);
        std::uint32_t key = code(last);
        if (dead[key]) return false;
        for (int h : quotient.out_neighbors(last)) {
            if (used[h] == target[h]) continue;
            ++used[h];
            --remaining;
            walk.push_back(h);
            if (extend(h, close_to)) return true;
            walk.pop_back();
            ++remaining;
            --used[h];
        }
        dead[key] = 1;
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> extension_cycle_exact(const Digraph& quotient,
                                                      const std::vector<int>& counts) {
    int total = 0, anchor = -1;
    for (size_t i = 0; i < counts.size(); ++i) {
        total += counts[i];
        if (anchor < 0 && counts[i] > 0) anchor = static_cast<int>(i);
    }
    if (total < 2) return std::nullopt;
    CountWalkSearch s(quotient, counts);
    s.used[anchor] = 1;
    s.remaining = total - 1;
    s.walk = {anchor};
    if (s.extend(anchor, anchor)) return s.walk;
    return std::nullopt;
}

std::optional<std::vector<int>> extension_path_exact(const Digraph& quotient,
                                                     const std::vector<int>& counts) {
    int total = 0;
    for (int c : counts) total += c;
    if (total == 0) return std::nullopt;
    CountWalkSearch s(quotient, counts);
    for (int start = 0; start < s.t; ++start) {
        if (counts[start] == 0) continue;
        s.used.assign(s.t, 0);
        s.used[start] = 1;
        s.remaining = total - 1;
        s.walk = {start};
        if (s.extend(start, -1)) return s.walk;
    }
    return std::nullopt;
}

}  // namespace sccomp::internal
