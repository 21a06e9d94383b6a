#pragma once

#include <cstdint>
#include <string>

#include "skewinv/errors.hpp"

namespace skewinv {

// Variable x_ij(k): 1 <= i < j <= n, 1 <= k <= d.  The total order puts
// x_ij(k) above x_pq(l) iff k < l, or k = l and (i,j) precedes (p,q)
// lexicographically.  Variables are stored by a flat index in which index 0
// is the largest variable x_12(1).
struct Variable {
    int i, j, k;
};

struct Ctx {
    int n = 0;
    int d = 0;

    int pairs() const { return n * (n - 1) / 2; }
    int nvars() const { return d * pairs(); }

    int pair_offset(int i, int j) const {
        return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
    }

    int var_index(int i, int j, int k) const {
        if (!(1 <= i && i < j && j <= n && 1 <= k && k <= d))
            fail(ErrorKind::Usage, "variable x_" + std::to_string(i) + std::to_string(j) + "(" +
                                       std::to_string(k) + ") out of range");
        return (k - 1) * pairs() + pair_offset(i, j);
    }

    Variable var_of_index(int idx) const {
        int s = pairs();
        int k = idx / s + 1;
        int off = idx % s;
        int i = 1;
        while (off >= n - i) {
            off -= n - i;
            ++i;
        }
        return {i, i + off + 1, k};
    }

    std::string var_name(int idx) const {
        Variable v = var_of_index(idx);
        return "x_" + std::to_string(v.i) + std::to_string(v.j) + "(" + std::to_string(v.k) + ")";
    }
};

inline bool operator==(const Ctx& a, const Ctx& b) { return a.n == b.n && a.d == b.d; }

} // namespace skewinv
