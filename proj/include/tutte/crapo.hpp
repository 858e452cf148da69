#pragma once

// Tutte polynomial by basis enumeration with activities:
//   T(x,y) = sum over bases B of x^{#internally active} y^{#externally active}.
// Activities are taken with respect to a linear order on the hyperplanes.
// The total is order-invariant even though individual terms are not.
//
// K in B is internally active iff every earlier H outside B fails to respan
// B \ {K}; H outside B is externally active iff H is spanned by the elements
// of B that come after it. Bases are visited as lexicographic r-subsets with
// prefix-independence pruning.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "poly.hpp"

namespace tutte {

namespace detail {

// Positions refer to slots in `order`; rank queries translate back to
// hyperplane indices.
template <class O>
class PosRank {
public:
    PosRank(const O& arr, const std::vector<int>& order) : arr_(&arr), order_(&order) {}
    int rank(const std::vector<int>& positions) const {
        scratch_.clear();
        for (int p : positions) scratch_.push_back((*order_)[p]);
        return arr_->rank(scratch_);
    }

private:
    const O* arr_;
    const std::vector<int>* order_;
    mutable std::vector<int> scratch_;
};

template <class O>
void crapo_basis_term(const PosRank<O>& pr, const std::vector<int>& basis, int count,
                      int full_rank, Poly& out) {
    int r = full_rank;
    std::vector<char> in_basis(count, 0);
    for (int p : basis) in_basis[p] = 1;

    int internal = 0;
    std::vector<int> probe;
    probe.reserve(r + 1);
    for (int t = 0; t < r; ++t) {
        int K = basis[t];
        // B \ {K}
        std::vector<int> rest;
        rest.reserve(r);
        for (int u = 0; u < r; ++u)
            if (u != t) rest.push_back(basis[u]);
        bool active = true;
        for (int h = 0; h < K && active; ++h) {
            if (in_basis[h]) continue;
            probe = rest;
            probe.push_back(h);
            if (pr.rank(probe) == r) active = false;  // h respans
        }
        if (active) ++internal;
    }

    int external = 0;
    // suffix_rank[t] = rank of basis[t..r-1]
    std::vector<int> suffix_rank(r + 1, 0);
    for (int t = r - 1; t >= 0; --t) {
        std::vector<int> tail(basis.begin() + t, basis.end());
        suffix_rank[t] = pr.rank(tail);
    }
    for (int h = 0, t = 0; h < count; ++h) {
        if (in_basis[h]) continue;
        while (t < r && basis[t] < h) ++t;
        std::vector<int> tail(basis.begin() + t, basis.end());
        tail.push_back(h);
        if (pr.rank(tail) == suffix_rank[t]) ++external;
    }

    out.add_term(internal, external, Int(1));
}

// DFS over lexicographic r-subsets; a dependent prefix kills its subtree.
// first_filter(p) selects which first elements this call owns (for striping).
template <class O, class F>
void crapo_enumerate(const PosRank<O>& pr, int count, int full_rank, F&& first_filter,
                     Poly& out) {
    std::vector<int> cur;
    cur.reserve(full_rank);
    auto dfs = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == full_rank) {
            crapo_basis_term(pr, cur, count, full_rank, out);
            return;
        }
        int need = full_rank - static_cast<int>(cur.size());
        for (int p = start; p + need <= count; ++p) {
            if (cur.empty() && !first_filter(p)) continue;
            cur.push_back(p);
            if (pr.rank(cur) == static_cast<int>(cur.size())) self(self, p + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
}

}  // namespace detail

template <class O>
Poly tutte_crapo_ordered(const O& arr, const std::vector<int>& order) {
    int count = arr.size();
    if (static_cast<int>(order.size()) != count)
        throw std::invalid_argument("order must be a permutation of all hyperplanes");
    detail::PosRank<O> pr(arr, order);
    std::vector<int> all(count);
    std::iota(all.begin(), all.end(), 0);
    int full = pr.rank(all);
    if (full == 0) return Poly::one();
    Poly out;
    detail::crapo_enumerate(pr, count, full, [](int) { return true; }, out);
    return out;
}

template <class O>
Poly tutte_crapo(const O& arr) {
    std::vector<int> order(arr.size());
    std::iota(order.begin(), order.end(), 0);
    return tutte_crapo_ordered(arr, order);
}

// Identical output for any worker count: the enumeration tree is partitioned
// by first element round-robin; partial sums merge by polynomial addition.
template <class O>
Poly tutte_crapo_parallel(const O& arr, const std::vector<int>& order, int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (workers == 1) return tutte_crapo_ordered(arr, order);
    int count = arr.size();
    if (static_cast<int>(order.size()) != count)
        throw std::invalid_argument("order must be a permutation of all hyperplanes");
    std::vector<int> all(count);
    std::iota(all.begin(), all.end(), 0);
    detail::PosRank<O> pr0(arr, order);
    int full = pr0.rank(all);
    if (full == 0) return Poly::one();

    std::vector<Poly> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            detail::PosRank<O> pr(arr, order);
            detail::crapo_enumerate(
                pr, count, full, [&](int p) { return p % workers == w; }, parts[w]);
        });
    }
    for (auto& t : pool) t.join();
    Poly total;
    for (auto& p : parts) total += p;
    return total;
}

}  // namespace tutte
