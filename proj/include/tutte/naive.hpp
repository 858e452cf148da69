#pragma once

// Literal subset-sum Tutte polynomial:
//   T(x,y) = sum over subsets B of (x-1)^{rk A - rk B} (y-1)^{|B| - rk B}.
// Exponential in the hyperplane count; guarded.

#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace tutte {

template <class O>
Poly naive_tutte(const O& arr) {
    int count = arr.size();
    if (count > 22) throw std::invalid_argument("naive engine limited to 22 hyperplanes");
    int full = arr.ambient_rank();
    // tally subsets by (rank, size); expand once at the end
    std::vector<std::vector<Int>> tally(full + 1, std::vector<Int>(count + 1, Int(0)));
    std::vector<int> subset;
    for (std::uint64_t mask = 0; mask < (1ull << count); ++mask) {
        subset.clear();
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1) subset.push_back(i);
        int r = arr.rank(subset);
        ++tally[r][subset.size()];
    }
    Poly total;
    for (int r = 0; r <= full; ++r)
        for (int s = 0; s <= count; ++s) {
            if (tally[r][s] == 0) continue;
            total += (pow_xm1(full - r) * pow_ym1(s - r)).scaled(tally[r][s]);
        }
    return total;
}

}  // namespace tutte
