#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hodgeprobe {

// Multi-indices are bitmasks over positions 0..63; bit p set means the
// strictly increasing tuple contains p. Ambient dimension is capped at 64.

inline int popcount(uint64_t m) { return std::popcount(m); }

/// Sign of sorting the concatenation (A, B) of two disjoint increasing
/// tuples into one increasing tuple; 0 if the masks overlap.
inline int merge_sign(uint64_t a, uint64_t b) {
    if (a & b) return 0;
    int inversions = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        if (j < 63) inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

/// Number of set bits of mask strictly below position p.
inline int bits_below(uint64_t mask, int p) {
    return p == 0 ? 0 : std::popcount(mask & ((uint64_t(1) << p) - 1));
}

inline uint64_t mask_of(std::initializer_list<int> positions) {
    uint64_t m = 0;
    for (int p : positions) m |= uint64_t(1) << p;
    return m;
}

inline std::vector<int> positions_of(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

/// All k-subsets of {0, ..., m-1} as masks in ascending numeric order
/// (Gosper's hack). The canonical basis enumeration of degree-k indices.
inline std::vector<uint64_t> subset_masks(int m, int k) {
    std::vector<uint64_t> out;
    if (k < 0 || k > m) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    uint64_t v = (uint64_t(1) << k) - 1;
    uint64_t limit = (m == 64) ? ~uint64_t(0) : (uint64_t(1) << m) - 1;
    while (v <= limit) {
        out.push_back(v);
        uint64_t t = v | (v - 1);
        if (t == ~uint64_t(0)) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

/// 1-based comma-separated index list, e.g. mask {0,2,3} -> "1,3,4".
inline std::string mask_to_text(uint64_t mask) {
    if (mask == 0) return "()";
    std::string s;
    for (int p : positions_of(mask)) {
        if (!s.empty()) s += ",";
        s += std::to_string(p + 1);
    }
    return s;
}

} // namespace hodgeprobe
