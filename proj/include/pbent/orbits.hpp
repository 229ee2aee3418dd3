#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core.hpp"

namespace pbent {

struct GlElement {
    int p = 2, n = 1;
    std::vector<int> m;  // row-major n x n

    int operator()(int i, int j) const { return m[i * n + j]; }
    friend bool operator==(const GlElement&, const GlElement&) = default;
};

inline int det_mod_p(const GlElement& g) {
    std::vector<Vec> rows(g.n, Vec(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) rows[i][j] = g(i, j);
    // Gaussian elimination keeping track of the determinant
    long long det = 1;
    const int p = g.p;
    for (int c = 0; c < g.n; ++c) {
        int piv = c;
        while (piv < g.n && mod(rows[piv][c], p) == 0) ++piv;
        if (piv == g.n) return 0;
        if (piv != c) {
            std::swap(rows[piv], rows[c]);
            det = -det;
        }
        det = mod(det * rows[c][c], p);
        int inv = inv_mod(rows[c][c], p);
        for (int r = c + 1; r < g.n; ++r) {
            int f = mod(static_cast<long long>(rows[r][c]) * inv, p);
            for (int k = c; k < g.n; ++k) rows[r][k] = mod(rows[r][k] - static_cast<long long>(f) * rows[c][k], p);
        }
    }
    return mod(det, p);
}

inline std::uint64_t gl_order(int n, int p) {
    std::uint64_t q = ipow(p, n), r = 1;
    for (int i = 0; i < n; ++i) r *= q - ipow(p, i);
    return r;
}

inline std::vector<GlElement> enumerate_gl(int n, int p, std::uint64_t guard = 50'000'000) {
    check_field(p, n);
    const std::uint64_t total = ipow(p, n * n);
    if (total > guard) throw unsupported("GL enumeration exceeds size guard");
    std::vector<GlElement> out;
    out.reserve(gl_order(n, p));
    GlElement g{p, n, std::vector<int>(n * n, 0)};
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& x : g.m) {
            x = static_cast<int>(c % p);
            c /= p;
        }
        if (det_mod_p(g)) out.push_back(g);
    }
    return out;
}

inline GlElement transpose(const GlElement& g) {
    GlElement t = g;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) t.m[i * g.n + j] = g(j, i);
    return t;
}

inline GlElement inverse(const GlElement& g) {
    const int n = g.n, p = g.p;
    std::vector<Vec> a(n, Vec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = g(i, j);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && mod(a[piv][c], p) == 0) ++piv;
        if (piv == n) throw invalid_input("singular matrix");
        std::swap(a[piv], a[c]);
        int inv = inv_mod(a[c][c], p);
        for (auto& x : a[c]) x = mod(static_cast<long long>(x) * inv, p);
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            int f = a[r][c];
            for (int k = 0; k < 2 * n; ++k) a[r][k] = mod(a[r][k] - static_cast<long long>(f) * a[c][k], p);
        }
    }
    GlElement inv{p, n, std::vector<int>(n * n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.m[i * n + j] = a[i][n + j];
    return inv;
}

inline Vec apply(const GlElement& g, const Vec& x) {
    Vec y(g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        long long s = 0;
        for (int j = 0; j < g.n; ++j) s += static_cast<long long>(g(i, j)) * x[j];
        y[i] = mod(s, g.p);
    }
    return y;
}

// perm[i] = index of g * x_i
inline std::vector<std::uint32_t> index_permutation(const GlElement& g) {
    const Space& S = space(g.p, g.n);
    std::vector<std::uint32_t> perm(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) perm[i] = static_cast<std::uint32_t>(vector_index(apply(g, S.vec(i)), g.p));
    return perm;
}

// (g . f)(x) = f(g x)
inline PAryFunction act(const GlElement& g, const PAryFunction& f) {
    if (g.p != f.p || g.n != f.n) throw invalid_input("arity mismatch between matrix and function");
    if (!det_mod_p(g)) throw invalid_input("singular matrix");
    auto perm = index_permutation(g);
    std::vector<std::uint8_t> vals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) vals[i] = f.values[perm[i]];
    return PAryFunction(f.p, f.n, std::move(vals));
}

// Permutations for a whole group, cached per (p, n).
inline const std::vector<std::vector<std::uint32_t>>& gl_permutations(int p, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::vector<std::uint32_t>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, n}];
    if (slot.empty())
        for (const auto& g : enumerate_gl(n, p)) slot.push_back(index_permutation(g));
    return slot;
}

inline PAryFunction canonical_form(const PAryFunction& f) {
    std::vector<std::uint8_t> best = f.values, cur(f.size());
    for (const auto& perm : gl_permutations(f.p, f.n)) {
        for (std::size_t i = 0; i < f.size(); ++i) cur[i] = f.values[perm[i]];
        if (cur < best) best = cur;
    }
    return PAryFunction(f.p, f.n, std::move(best));
}

struct Orbit {
    PAryFunction representative;  // lexicographically least member
    std::vector<std::size_t> members;  // indices into the input set
    std::size_t size() const { return members.size(); }
};

struct OrbitPartition {
    std::vector<Orbit> orbits;  // sorted by representative
    std::vector<std::size_t> orbit_of;
    bool closed = true;
    std::optional<std::pair<std::size_t, PAryFunction>> closure_witness;  // member and image outside S

    std::optional<std::size_t> find(const PAryFunction& f) const;
};

namespace detail {
struct TableHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : v) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};
}  // namespace detail

// Sweeps each unassigned function's full orbit; images are looked up within their signature bucket.
inline OrbitPartition orbit_partition(const std::vector<PAryFunction>& S, int p, int n) {
    OrbitPartition part;
    part.orbit_of.assign(S.size(), static_cast<std::size_t>(-1));
    std::map<std::vector<std::size_t>, std::unordered_map<std::vector<std::uint8_t>, std::size_t, detail::TableHash>> buckets;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i].p != p || S[i].n != n) throw invalid_input("function arity mismatch in orbit partition");
        buckets[signature(S[i])].emplace(S[i].values, i);
    }
    const auto& perms = gl_permutations(p, n);
    std::vector<std::uint8_t> cur;
    std::vector<Orbit> orbits;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (part.orbit_of[i] != static_cast<std::size_t>(-1)) continue;
        const std::size_t id = orbits.size();
        Orbit o;
        const auto& bucket = buckets[signature(S[i])];
        cur.resize(S[i].size());
        for (const auto& perm : perms) {
            for (std::size_t x = 0; x < cur.size(); ++x) cur[x] = S[i].values[perm[x]];
            auto it = bucket.find(cur);
            if (it == bucket.end()) {
                if (part.closed) part.closure_witness = {{i, PAryFunction(p, n, cur)}};
                part.closed = false;
                continue;
            }
            if (part.orbit_of[it->second] == static_cast<std::size_t>(-1)) {
                part.orbit_of[it->second] = id;
                o.members.push_back(it->second);
            }
        }
        std::sort(o.members.begin(), o.members.end());
        o.representative = S[o.members.front()];
        for (auto m : o.members) o.representative = std::min(o.representative, S[m]);
        orbits.push_back(std::move(o));
    }
    std::vector<std::size_t> order(orbits.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return orbits[a].representative < orbits[b].representative; });
    std::vector<std::size_t> rank(orbits.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        part.orbits.push_back(std::move(orbits[order[r]]));
    }
    for (auto& o : part.orbit_of)
        if (o != static_cast<std::size_t>(-1)) o = rank[o];
    return part;
}

inline std::optional<std::size_t> OrbitPartition::find(const PAryFunction& f) const {
    PAryFunction c = canonical_form(f);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].representative == c) return i;
    return std::nullopt;
}

// rel[o][a-1] = orbit holding a * rep(o), or nullopt when a * rep lies outside the set
inline std::vector<std::vector<std::optional<std::size_t>>> scalar_relations(const OrbitPartition& part) {
    std::vector<std::vector<std::optional<std::size_t>>> rel;
    for (const auto& o : part.orbits) {
        std::vector<std::optional<std::size_t>> row;
        for (int a = 1; a < o.representative.p; ++a) row.push_back(part.find(scaled(o.representative, a)));
        rel.push_back(std::move(row));
    }
    return rel;
}

}  // namespace pbent
