#pragma once

// Combinatorial model of the reflection arrangement of G(m,p,n): coordinate
// hyperplanes x_i = 0 (present iff p != m) and gain edges x_i = zeta^k x_j.
// Rank is computed by union-find over vertex gains in Z/m: a connected
// component contributes its full vertex count when it carries a coordinate
// hyperplane or an inconsistent gain cycle, one less otherwise.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace tutte {

struct Hyperplane {
    // j < 0 encodes the coordinate hyperplane x_i = 0; otherwise the edge
    // x_i = zeta^k x_j with i < j, 0 <= k < m
    int i = 0, j = -1, k = 0;
    bool is_coord() const { return j < 0; }
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class GainArrangement {
public:
    // p must divide m; p != m adds the n coordinate hyperplanes.
    // Canonical order: coord 0..n-1 first, then edges sorted by (i, j, k).
    static GainArrangement make(int m, int p, int n) {
        if (m < 1 || n < 0 || p < 1 || m % p != 0)
            throw std::invalid_argument("bad G(m,p,n) parameters");
        GainArrangement a;
        a.n_ = n;
        a.m_ = m;
        a.coords_ = (p != m);
        if (a.coords_)
            for (int i = 0; i < n; ++i) a.hs_.push_back({i, -1, 0});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < m; ++k) a.hs_.push_back({i, j, k});
        return a;
    }

    // m pairwise-distinct gains on two vertices: a generic rank-2 line
    // arrangement with m hyperplanes
    static GainArrangement synthetic_rank2(int m) { return make(m, m, 2); }

    int size() const { return static_cast<int>(hs_.size()); }
    int dimension() const { return n_; }
    int modulus() const { return m_; }
    bool has_coordinate_hyperplanes() const { return coords_; }
    const Hyperplane& at(int idx) const { return hs_.at(idx); }
    const std::vector<Hyperplane>& hyperplanes() const { return hs_; }

    int rank(const std::vector<int>& subset) const {
        Uf uf(n_, m_);
        for (int idx : subset) apply(uf, hs_.at(idx));
        return n_ - uf.balanced_components();
    }

    int ambient_rank() const {
        std::vector<int> all(hs_.size());
        std::iota(all.begin(), all.end(), 0);
        return rank(all);
    }

    void dump(std::ostream& os) const {
        for (const auto& h : hs_) {
            if (h.is_coord())
                os << "coord " << h.i << "\n";
            else
                os << "edge " << h.i << " " << h.j << " " << h.k << "\n";
        }
    }

private:
    struct Uf {
        std::vector<int> parent, rankh, gain;  // gain of v relative to parent
        std::vector<char> unbal;
        int m;
        Uf(int n, int modulus) : parent(n), rankh(n, 0), gain(n, 0), unbal(n, 0), m(modulus) {
            std::iota(parent.begin(), parent.end(), 0);
        }
        // root and cumulative gain of v relative to it
        std::pair<int, int> find(int v) {
            int g = 0, r = v;
            while (parent[r] != r) {
                g = (g + gain[r]) % m;
                r = parent[r];
            }
            // path compression, re-rooting gains
            int cur = v, acc = g;
            while (parent[cur] != cur) {
                int next = parent[cur], step = gain[cur];
                parent[cur] = r;
                gain[cur] = acc;
                acc = (acc - step % m + m) % m;
                cur = next;
            }
            return {r, g};
        }
        void mark_unbalanced(int v) { unbal[find(v).first] = 1; }
        // relation gain(i) - gain(j) == k (mod m)
        void join(int i, int j, int k) {
            auto [ri, gi] = find(i);
            auto [rj, gj] = find(j);
            if (ri == rj) {
                if (((gi - gj) % m + m) % m != ((k % m) + m) % m) unbal[ri] = 1;
                return;
            }
            if (rankh[ri] < rankh[rj]) {
                std::swap(ri, rj);
                std::swap(gi, gj);
                k = -k;
            }
            // attach rj under ri: gain(rj) relative to ri
            parent[rj] = ri;
            gain[rj] = ((gi - k - gj) % m + m) % m;
            unbal[ri] |= unbal[rj];
            if (rankh[ri] == rankh[rj]) ++rankh[ri];
        }
        int balanced_components() {
            int c = 0;
            for (int v = 0; v < static_cast<int>(parent.size()); ++v)
                if (find(v).first == v && !unbal[v]) ++c;
            return c;
        }
    };

    static void apply(Uf& uf, const Hyperplane& h) {
        if (h.is_coord())
            uf.mark_unbalanced(h.i);
        else
            uf.join(h.i, h.j, h.k);
    }

    int n_ = 0, m_ = 1;
    bool coords_ = false;
    std::vector<Hyperplane> hs_;
};

// ----- independent finite-field oracle -----

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// the three smallest primes q == 1 (mod m) with q > 100 m
inline std::array<std::uint64_t, 3> oracle_primes(int m) {
    std::array<std::uint64_t, 3> out{};
    std::uint64_t q = 100ull * m + 1;
    if (std::uint64_t r = q % m; r != 1 % m) q += (1 % m + m - r) % m;
    int got = 0;
    for (; got < 3; q += m)
        if (is_prime_u64(q)) out[got++] = q;
    return out;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    b %= q;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % q;
        b = (__uint128_t)b * b % q;
        e >>= 1;
    }
    return r;
}

// an element of multiplicative order exactly m in F_q (requires q == 1 mod m)
inline std::uint64_t root_of_unity(int m, std::uint64_t q) {
    if ((q - 1) % m != 0) throw std::invalid_argument("q != 1 mod m");
    if (m == 1) return 1;
    for (std::uint64_t a = 2; a < q; ++a) {
        std::uint64_t z = pow_mod(a, (q - 1) / m, q);
        if (z == 1) continue;
        bool exact = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && pow_mod(z, d, q) == 1) {
                exact = false;
                break;
            }
        if (exact) return z;
    }
    throw std::runtime_error("no root of unity found");
}

// Matrix rank over F_q of the normal vectors of the chosen hyperplanes:
// coord i -> e_i, edge (i,j,k) -> e_i - zeta^k e_j.
inline int finite_field_rank(const GainArrangement& a, const std::vector<int>& subset,
                             std::uint64_t q) {
    if ((q - 1) % a.modulus() != 0) throw std::invalid_argument("q != 1 mod m");
    std::uint64_t zeta = root_of_unity(a.modulus(), q);
    int n = a.dimension();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(subset.size());
    for (int idx : subset) {
        const Hyperplane& h = a.at(idx);
        std::vector<std::uint64_t> row(n, 0);
        if (h.is_coord()) {
            row[h.i] = 1;
        } else {
            row[h.i] = 1;
            row[h.j] = q - pow_mod(zeta, h.k, q);
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        std::uint64_t inv = pow_mod(rows[rank][col], q - 2, q);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            std::uint64_t f = (__uint128_t)rows[r][col] * inv % q;
            for (int c = col; c < n; ++c) {
                std::uint64_t sub = (__uint128_t)f * rows[rank][c] % q;
                rows[r][c] = (rows[r][c] + q - sub) % q;
            }
        }
        ++rank;
    }
    return rank;
}

// Restriction of any rank oracle to a sublist of its hyperplanes, exposing
// local indices 0..size-1. Used to compute invariants of a flat.
template <class O>
class SubsetOracle {
public:
    SubsetOracle(const O& base, std::vector<int> picks)
        : base_(&base), picks_(std::move(picks)) {}
    int size() const { return static_cast<int>(picks_.size()); }
    int rank(const std::vector<int>& local) const {
        std::vector<int> global;
        global.reserve(local.size());
        for (int idx : local) global.push_back(picks_.at(idx));
        return base_->rank(global);
    }
    int ambient_rank() const {
        std::vector<int> all(picks_.size());
        std::iota(all.begin(), all.end(), 0);
        return rank(all);
    }

private:
    const O* base_;
    std::vector<int> picks_;
};

}  // namespace tutte
