#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "core.hpp"
#include "graph.hpp"

namespace pbent {

using Rational = boost::rational<std::int64_t>;

struct PdsParams {
    std::int64_t v = 0, k = 0, lambda = 0;
    std::optional<std::int64_t> mu;  // absent when D is every nonzero element
    bool schur_identity = false;     // D*D = k*1 + lambda*D + mu*D' as formal sums
};

// D as vector indices in GF(p)^n.
inline std::optional<PdsParams> is_pds(int p, int n, const std::vector<std::size_t>& D) {
    const Space& S = space(p, n);
    std::vector<char> in(S.size(), 0);
    for (auto d : D) {
        if (d == 0) throw invalid_input("partial difference set must not contain the identity");
        in.at(d) = 1;
    }
    std::vector<std::int64_t> diff(S.size(), 0), sum(S.size(), 0);
    for (auto a : D)
        for (auto b : D) {
            ++diff[S.sub(a, b)];
            ++sum[S.add(a, b)];
        }
    std::optional<std::int64_t> lam, mu;
    for (std::size_t x = 1; x < S.size(); ++x) {
        auto& slot = in[x] ? lam : mu;
        if (slot && *slot != diff[x]) return std::nullopt;
        slot = diff[x];
    }
    PdsParams r;
    r.v = static_cast<std::int64_t>(S.size());
    r.k = static_cast<std::int64_t>(D.size());
    r.lambda = lam.value_or(0);
    r.mu = mu;
    r.schur_identity = sum[0] == r.k;
    for (std::size_t x = 1; x < S.size(); ++x)
        if (sum[x] != (in[x] ? r.lambda : r.mu.value_or(0))) r.schur_identity = false;
    return r;
}

struct ComplementParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
    bool mu_relation_holds = false;  // mu' = k'(1 - mu/k), tested as mu'*k == k'*(k - mu)
};

inline ComplementParams complement_pds_params(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
    ComplementParams c;
    c.v = v;
    c.k = v - k - 1;
    c.lambda = v - 2 * k - 2 + mu;
    c.mu = v - 2 * k + lambda;
    c.mu_relation_holds = k != 0 && c.mu * k == c.k * (k - mu);
    return c;
}

// D_0 = {0}, D_i = f^{-1}(i) \ {0} for 0 < i < p, D_p = f^{-1}(0) \ {0}
struct LevelCurves {
    int p = 2, n = 1;
    std::vector<std::vector<std::size_t>> D;
    std::vector<int> cls;  // class of each vector
    bool symmetric = false;

    std::size_t classes() const { return D.size(); }
};

inline LevelCurves level_curves(const PAryFunction& f) {
    LevelCurves c;
    c.p = f.p;
    c.n = f.n;
    c.D.assign(f.p + 1, {});
    c.cls.assign(f.size(), 0);
    c.D[0].push_back(0);
    for (std::size_t x = 1; x < f.size(); ++x) {
        int k = f.values[x] ? f.values[x] : f.p;
        c.D[k].push_back(x);
        c.cls[x] = k;
    }
    const Space& S = space(f.p, f.n);
    c.symmetric = true;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (c.cls[x] != c.cls[S.neg(x)]) c.symmetric = false;
    return c;
}

// tables[k][i][j] = observed values of #{(a,b) in D_i x D_j : a + b = x} over x in D_k
using PTable = std::vector<std::vector<ValueSet>>;

inline std::vector<PTable> intersection_numbers_direct(const LevelCurves& c) {
    const Space& S = space(c.p, c.n);
    const std::size_t r = c.classes();
    std::vector<PTable> t(r, PTable(r, std::vector<ValueSet>(r)));
    std::vector<std::int64_t> cnt(S.size());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (auto a : c.D[i])
                for (auto b : c.D[j]) ++cnt[S.add(a, b)];
            for (std::size_t x = 0; x < S.size(); ++x) t[c.cls[x]][i][j].insert(cnt[x]);
        }
    return t;
}

struct WpdsReport {
    int p = 2;
    std::vector<std::size_t> sizes;  // |D_0|, ..., |D_p|
    // differences a - b with a in D_i, b in D_j
    std::map<std::array<int, 3>, ValueSet> lambda;  // landing in D_l, 1 <= l < p
    std::map<std::pair<int, int>, ValueSet> mu;      // landing in D_p
    std::map<std::pair<int, int>, std::int64_t> alpha;  // landing on 0
    bool symmetric = false;
    bool is_weighted_pds = false;
    std::vector<PTable> p_tables;
    // collapse to an ordinary PDS when sum_{i,j} lambda_{i,j,l} does not depend on l
    std::optional<PdsParams> unweighted;
};

inline WpdsReport is_weighted_pds(const LevelCurves& c) {
    const Space& S = space(c.p, c.n);
    WpdsReport rep;
    rep.p = c.p;
    rep.symmetric = c.symmetric;
    for (const auto& d : c.D) rep.sizes.push_back(d.size());
    std::vector<std::int64_t> cnt(S.size());
    for (int i = 1; i < c.p; ++i)
        for (int j = 1; j < c.p; ++j) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (auto a : c.D[i])
                for (auto b : c.D[j]) ++cnt[S.sub(a, b)];
            rep.alpha[{i, j}] = cnt[0];
            for (std::size_t x = 1; x < S.size(); ++x) {
                int l = c.cls[x];
                if (l == c.p) rep.mu[{i, j}].insert(cnt[x]);
                else rep.lambda[{i, j, l}].insert(cnt[x]);
            }
        }
    bool constant = true;
    for (const auto& [key, s] : rep.lambda) constant = constant && s.size() == 1;
    for (const auto& [key, s] : rep.mu) constant = constant && s.size() == 1;
    rep.is_weighted_pds = constant && c.symmetric;
    rep.p_tables = intersection_numbers_direct(c);
    if (constant) {
        std::optional<std::int64_t> lam;
        bool ok = true;
        for (int l = 1; l < c.p; ++l) {
            if (c.D[l].empty()) continue;
            std::int64_t t = 0;
            for (int i = 1; i < c.p; ++i)
                for (int j = 1; j < c.p; ++j) t += *rep.lambda[{i, j, l}].begin();
            if (lam && *lam != t) ok = false;
            lam = t;
        }
        if (ok) {
            std::vector<std::size_t> D;
            for (int i = 1; i < c.p; ++i) D.insert(D.end(), c.D[i].begin(), c.D[i].end());
            std::sort(D.begin(), D.end());
            rep.unweighted = is_pds(c.p, c.n, D);
        }
    }
    return rep;
}

struct TraceTables {
    // p[k][i][j] = Tr(A_i A_j A_k) / (p^n |D_k|); empty optional when D_k is empty
    std::vector<std::vector<std::vector<std::optional<Rational>>>> p;
    std::vector<std::vector<std::vector<std::int64_t>>> traces;  // Tr(A_i A_j A_k) as [k][i][j]
    bool all_integral = true;
    std::vector<std::array<int, 3>> non_integral;  // (k, i, j)
};

inline TraceTables intersection_numbers_trace(const WeightedCayleyGraph& g, const LevelCurves& c) {
    const std::size_t r = c.classes();
    std::vector<IntMatrix> A;
    for (std::size_t i = 0; i < r; ++i) A.push_back(g.slice(static_cast<int>(i)));
    TraceTables t;
    t.p.assign(r, std::vector<std::vector<std::optional<Rational>>>(r, std::vector<std::optional<Rational>>(r)));
    t.traces.assign(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            IntMatrix AB = A[i] * A[j];
            for (std::size_t k = 0; k < r; ++k) {
                // Tr(AB * A_k) without forming the product
                std::int64_t tr = 0;
                for (std::size_t x = 0; x < g.N; ++x)
                    for (std::size_t y = 0; y < g.N; ++y) tr += AB(x, y) * A[k](y, x);
                t.traces[k][i][j] = tr;
                if (c.D[k].empty()) continue;
                Rational v(tr, static_cast<std::int64_t>(g.N * c.D[k].size()));
                t.p[k][i][j] = v;
                if (v.denominator() != 1) {
                    t.all_integral = false;
                    t.non_integral.push_back({static_cast<int>(k), static_cast<int>(i), static_cast<int>(j)});
                }
            }
        }
    return t;
}

struct AssociationScheme {
    std::size_t classes = 0;  // number of nonempty relations minus one
    bool reduced = false;     // D_p empty
    bool valid = false;       // p_ij(x,y) constant on every relation
    bool derived_identities = false;
    std::vector<std::vector<std::vector<std::int64_t>>> p;  // p[k][i][j]
};

// Relations R_i = {(x,y) : x - y in D_i}.
inline AssociationScheme build_association_scheme(const LevelCurves& c) {
    auto rep = is_weighted_pds(c);
    if (!rep.is_weighted_pds) throw unsupported("level curves do not form a weighted PDS");
    const Space& S = space(c.p, c.n);
    const std::size_t r = c.classes();
    AssociationScheme as;
    as.reduced = c.D[c.p].empty();
    for (const auto& d : c.D) as.classes += !d.empty();
    as.classes -= 1;
    as.p.assign(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, -1)));
    as.valid = true;
    for (std::size_t x = 0; x < S.size(); ++x)
        for (std::size_t y = 0; y < S.size(); ++y) {
            const int k = c.cls[S.sub(x, y)];
            std::vector<std::int64_t> cnt(r * r, 0);
            for (std::size_t z = 0; z < S.size(); ++z) ++cnt[c.cls[S.sub(x, z)] * r + c.cls[S.sub(z, y)]];
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    auto& slot = as.p[k][i][j];
                    if (slot >= 0 && slot != cnt[i * r + j]) as.valid = false;
                    slot = cnt[i * r + j];
                }
        }
    // identities expressing the complement class through k, lambda, mu
    const int R = c.p;  // index of the complement class
    auto k_ = [&](int i) { return static_cast<std::int64_t>(c.D[i].size()); };
    auto lam = [&](int i, int j, int l) { return *rep.lambda.at({i, j, l}).begin(); };
    auto mu = [&](int i, int j) { return *rep.mu.at({i, j}).begin(); };
    bool ok = true;
    for (int i = 1; i < R; ++i) {
        if (c.D[i].empty()) continue;
        for (int l = 1; l < R; ++l) {
            if (c.D[l].empty()) continue;
            std::int64_t v = k_(i) - (i == l);
            for (int j = 1; j < R; ++j) v -= lam(i, j, l);
            ok = ok && as.p[l][i][R] == v;
        }
        if (!as.reduced) {
            std::int64_t v = k_(i);
            for (int j = 1; j < R; ++j) v -= mu(i, j);
            ok = ok && as.p[R][i][R] == v;
        }
    }
    if (!as.reduced) {
        std::int64_t v = k_(R) - 1;
        for (int i = 1; i < R; ++i) {
            v -= k_(i);
            for (int j = 1; j < R; ++j) v += mu(i, j);
        }
        ok = ok && as.p[R][R][R] == v;
    }
    as.derived_identities = ok;
    return as;
}

struct LatinSolution {
    std::int64_t N = 0, R = 0;
    bool negative = false;
    friend bool operator==(const LatinSolution&, const LatinSolution&) = default;
};

// (N^2, R(N-1), N + R^2 - 3R, R^2 - R) with N, R both positive or both negative.
inline std::vector<LatinSolution> latin_square_type(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                                    std::int64_t mu) {
    std::vector<LatinSolution> out;
    std::int64_t s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    if (s * s != v || s == 0) return out;
    for (std::int64_t N : {s, -s}) {
        if (N == 1 || k % (N - 1) != 0) continue;
        std::int64_t R = k / (N - 1);
        if ((N > 0) != (R > 0) || R == 0) continue;
        if (lambda == N + R * R - 3 * R && mu == R * R - R) out.push_back({N, R, N < 0});
    }
    return out;
}

}  // namespace pbent
