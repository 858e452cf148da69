#pragma once

// Closed form for an essential rank-2 arrangement of c pairwise-independent
// hyperplanes (every irreducible rank-2 reflection arrangement is one):
//   T(x,y) = x^2 + (c-2) x + sum_{i=2}^{c-1} (c-i) y^{i-1}.

#include <stdexcept>

#include "poly.hpp"

namespace tutte {

inline Poly tutte_rank2(int hyperplane_count) {
    if (hyperplane_count < 2)
        throw std::invalid_argument("rank-2 formula needs at least 2 hyperplanes");
    int c = hyperplane_count;
    Poly t = Poly::term(2, 0, Int(1));
    if (c > 2) t.add_term(1, 0, Int(c - 2));
    for (int i = 2; i < c; ++i) t.add_term(0, i - 1, Int(c - i));
    return t;
}

}  // namespace tutte
