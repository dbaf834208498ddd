#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qk/labels.hpp"

// Closed-form product rules.  Both are multiplicity-free; the weyl oracle
// cross-checks them in the test suite.

namespace qk::fusion {

// Lambda^c_0 E (x) Lambda^d_0 E = sum of L(a,b) over all n >= a >= b >= 0
// with  a+b = c+d (mod 2),  a+b <= c+d,  |c-d| <= a-b <= 2n-c-d,
// each exactly once.  Returned as (a,b) pairs, lexicographically descending.
inline std::vector<std::pair<int, int>> fuse_exterior(QuatDim n, int c, int d) {
    if (c < 0 || d < 0 || c > n.value() || d > n.value())
        throw std::invalid_argument("primitive exterior degree out of range");
    std::vector<std::pair<int, int>> out;
    int lo_diff = c > d ? c - d : d - c;
    int hi_diff = 2 * n.value() - c - d;
    for (int a = n.value(); a >= 0; --a)
        for (int b = a; b >= 0; --b) {
            if ((a + b) % 2 != (c + d) % 2)
                continue;
            if (a + b > c + d)
                continue;
            int diff = a - b;
            if (diff < lo_diff || diff > hi_diff)
                continue;
            out.emplace_back(a, b);
        }
    return out;
}

// Sym^k H (x) Sym^l H = sum of Sym^j H, j = k+l, k+l-2, ..., |k-l|.
inline std::vector<int> fuse_sp1(int k, int l) {
    if (k < 0 || l < 0)
        throw std::invalid_argument("Sym^k H exponent must be nonnegative");
    std::vector<int> out;
    int lo = k > l ? k - l : l - k;
    for (int j = k + l; j >= lo; j -= 2)
        out.push_back(j);
    return out;
}

} // namespace qk::fusion
