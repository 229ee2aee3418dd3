#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "cyclotomic.hpp"
#include "transforms.hpp"

namespace pbent {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols != y.rows) throw invalid_input("matrix shape mismatch");
        IntMatrix r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                const std::int64_t v = x(i, k);
                if (!v) continue;
                for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend IntMatrix operator+(IntMatrix x, const IntMatrix& y) {
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
        return x;
    }
    friend IntMatrix operator-(IntMatrix x, const IntMatrix& y) {
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
        return x;
    }
    friend IntMatrix operator*(std::int64_t s, IntMatrix x) {
        for (auto& v : x.a) v *= s;
        return x;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
        return t;
    }
};

struct WeightedCayleyGraph {
    int p = 2, n = 1;
    std::size_t N = 0;
    std::vector<std::uint8_t> weights;  // row-major, weights[i*N+j] = f(x_i - x_j)
    bool self_loop_warning = false;     // f(0) != 0

    int weight(std::size_t i, std::size_t j) const { return weights[i * N + j]; }

    IntMatrix weight_matrix() const {
        IntMatrix m(N, N);
        for (std::size_t i = 0; i < N * N; ++i) m.a[i] = weights[i];
        return m;
    }

    // 0/1 matrix of the unweighted graph (off-diagonal nonzero weights)
    IntMatrix adjacency() const {
        IntMatrix m(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m(i, j) = (i != j && weight(i, j) != 0);
        return m;
    }

    // A_0 = I, A_w (1 <= w < p) weight-w entries off the diagonal, A_p the rest
    IntMatrix slice(int w) const {
        if (w < 0 || w > p) throw invalid_input("slice index out of range");
        IntMatrix m(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                bool on;
                if (w == 0) on = i == j;
                else if (w == p) on = i != j && weight(i, j) == 0;
                else on = i != j && weight(i, j) == w;
                m(i, j) = on;
            }
        return m;
    }
};

inline WeightedCayleyGraph build_cayley_graph(const PAryFunction& f) {
    const Space& S = space(f.p, f.n);
    WeightedCayleyGraph g;
    g.p = f.p;
    g.n = f.n;
    g.N = f.size();
    g.weights.resize(g.N * g.N);
    for (std::size_t i = 0; i < g.N; ++i)
        for (std::size_t j = 0; j < g.N; ++j) g.weights[i * g.N + j] = f.values[S.sub(i, j)];
    g.self_loop_warning = f.values[0] != 0;
    return g;
}

struct Components {
    std::size_t count = 0;
    std::vector<std::size_t> component_of;
    int span_rank = 0;
    std::size_t formula_count = 0;  // p^{n - dim Span(supp f)}
};

inline Components connected_components(const WeightedCayleyGraph& g) {
    Components c;
    c.component_of.assign(g.N, static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < g.N; ++s) {
        if (c.component_of[s] != static_cast<std::size_t>(-1)) continue;
        std::deque<std::size_t> q{s};
        c.component_of[s] = c.count;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            for (std::size_t w = 0; w < g.N; ++w)
                if (w != v && g.weight(v, w) && c.component_of[w] == static_cast<std::size_t>(-1)) {
                    c.component_of[w] = c.count;
                    q.push_back(w);
                }
        }
        ++c.count;
    }
    std::vector<Vec> supp;
    const Space& S = space(g.p, g.n);
    for (std::size_t j = 1; j < g.N; ++j)
        if (g.weight(0, j)) supp.push_back(S.vec(j));
    c.span_rank = rank_mod_p(supp, g.p);
    c.formula_count = ipow(g.p, g.n - c.span_rank);
    return c;
}

struct SpectrumResult {
    std::vector<CycInt> eigenvalues;  // indexed by a: fhat(-a)
    bool eigen_relation_holds = false;
};

// Eigenvalues of the weighted (or, if unweighted, 0/1) Cayley matrix of an even f.
// Checks F v_a = fhat(-a) v_a exactly with v_a = (zeta^{-<a,x>})_x.
inline SpectrumResult spectrum_via_fourier(const PAryFunction& f, bool unweighted = false) {
    if (!is_even(f)) throw unsupported("spectrum via Fourier transform needs an even function");
    PAryFunction h = f;
    if (unweighted) {
        // the 0/1 support indicator read as integers; entries stay below p for p >= 2
        for (auto& v : h.values) v = v ? 1 : 0;
    }
    const Space& S = space(f.p, f.n);
    const int p = f.p;
    Spectrum F = fourier_transform(h);
    SpectrumResult r;
    r.eigen_relation_holds = true;
    std::vector<std::int64_t> cnt(p);
    for (std::size_t a = 0; a < f.size(); ++a) {
        const CycInt lam = F[S.neg(a)];
        r.eigenvalues.push_back(lam);
        for (std::size_t i = 0; i < f.size() && r.eigen_relation_holds; ++i) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::size_t j = 0; j < f.size(); ++j) cnt[mod(-S.dot(a, j), p)] += h.values[S.sub(i, j)];
            CycInt lhs = CycInt::from_redundant(p, cnt.data());
            if (!(lhs == lam * CycInt::zeta(p, -S.dot(a, i)))) r.eigen_relation_holds = false;
        }
    }
    return r;
}

struct SrgParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Classical SRG test on the unweighted Cayley graph; complete, empty and disconnected graphs give nullopt.
inline std::optional<SrgParams> is_strongly_regular_unweighted(const WeightedCayleyGraph& g) {
    auto A = g.adjacency();
    std::int64_t k = -1;
    for (std::size_t i = 0; i < g.N; ++i) {
        std::int64_t d = 0;
        for (std::size_t j = 0; j < g.N; ++j) d += A(i, j);
        if (k >= 0 && d != k) return std::nullopt;
        k = d;
    }
    if (k <= 0 || k == static_cast<std::int64_t>(g.N) - 1) return std::nullopt;
    if (connected_components(g).count != 1) return std::nullopt;
    auto A2 = A * A;
    std::optional<std::int64_t> lam, mu;
    for (std::size_t i = 0; i < g.N; ++i)
        for (std::size_t j = 0; j < g.N; ++j) {
            if (i == j) continue;
            auto& slot = A(i, j) ? lam : mu;
            if (slot && *slot != A2(i, j)) return std::nullopt;
            slot = A2(i, j);
        }
    SrgParams s{static_cast<std::int64_t>(g.N), k, lam.value_or(0), mu.value_or(0)};
    if (s.k * s.k - s.k != s.k * s.lambda + (s.v - s.k - 1) * s.mu)
        throw std::logic_error("SRG parameter identity violated");
    return s;
}

using ValueSet = std::set<std::int64_t>;

inline std::string to_string(const ValueSet& s) {
    if (s.size() == 1) return std::to_string(*s.begin());
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ", ") + std::to_string(*it);
    return out + "}";
}

struct WeightedSrgVerdict {
    int p = 2;
    std::map<std::pair<int, int>, ValueSet> k;          // same vertex
    std::map<std::array<int, 3>, ValueSet> lambda;      // u1 - u2 has weight a3
    std::map<std::pair<int, int>, ValueSet> mu;         // distinct non-neighbours
    bool is_edge_weighted_srg = false;
    bool complete = false;  // unweighted graph is complete
};

// Cells |N(u1,a1) ∩ N(u2,a2)| with N(u,a) = {w : f(w-u) = a}, split by the relation of u1 and u2.
inline WeightedSrgVerdict weighted_srg_verdict(const WeightedCayleyGraph& g) {
    WeightedSrgVerdict v;
    v.p = g.p;
    const int p = g.p;
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(p * p));
    for (std::size_t u1 = 0; u1 < g.N; ++u1)
        for (std::size_t u2 = 0; u2 < g.N; ++u2) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::size_t w = 0; w < g.N; ++w) ++cnt[g.weight(w, u1) * p + g.weight(w, u2)];
            const int rel = g.weight(u1, u2);
            for (int a1 = 1; a1 < p; ++a1)
                for (int a2 = 1; a2 < p; ++a2) {
                    const std::int64_t c = cnt[a1 * p + a2];
                    if (u1 == u2) v.k[{a1, a2}].insert(c);
                    else if (rel) v.lambda[{a1, a2, rel}].insert(c);
                    else v.mu[{a1, a2}].insert(c);
                }
        }
    v.complete = v.mu.empty();
    auto single = [](const auto& m) {
        for (const auto& [key, s] : m)
            if (s.size() != 1) return false;
        return true;
    };
    v.is_edge_weighted_srg = single(v.k) && single(v.lambda) && single(v.mu);
    return v;
}

// Summed weighted cells; defined when each sum is single valued.
inline std::optional<SrgParams> collapse_weighted(const WeightedSrgVerdict& v, std::int64_t order) {
    if (!v.is_edge_weighted_srg) return std::nullopt;
    SrgParams s{order, 0, 0, 0};
    for (const auto& [key, c] : v.k)
        if (key.first == key.second) s.k += *c.begin();
    std::optional<std::int64_t> lam;
    for (int a3 = 1; a3 < v.p; ++a3) {
        std::int64_t t = 0;
        bool seen = false;
        for (const auto& [key, c] : v.lambda)
            if (key[2] == a3) {
                t += *c.begin();
                seen = true;
            }
        if (!seen) continue;
        if (lam && *lam != t) return std::nullopt;
        lam = t;
    }
    for (const auto& [key, c] : v.mu) s.mu += *c.begin();
    s.lambda = lam.value_or(0);
    return s;
}

struct DistanceRegularity {
    bool all_distance_regular = false;
    std::size_t components = 0;
    int diameter = 0;
    // intersection array {b_0,...,b_{d-1}; c_1,...,c_d} and a_k
    std::vector<std::int64_t> b, c, a;
};

inline DistanceRegularity distance_regularity_check(const WeightedCayleyGraph& g) {
    DistanceRegularity r;
    r.all_distance_regular = true;
    std::vector<std::optional<std::int64_t>> bs, cs, as;
    auto put = [&](std::vector<std::optional<std::int64_t>>& vec, std::size_t k, std::int64_t val) {
        if (vec.size() <= k) vec.resize(k + 1);
        if (vec[k] && *vec[k] != val) r.all_distance_regular = false;
        vec[k] = val;
    };
    std::vector<int> dist(g.N);
    for (std::size_t s = 0; s < g.N; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            auto v = q.front();
            q.pop_front();
            for (std::size_t w = 0; w < g.N; ++w)
                if (w != v && g.weight(v, w) && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
        }
        for (std::size_t w = 0; w < g.N; ++w) {
            if (dist[w] < 0) continue;
            std::int64_t cb = 0, cc = 0, ca = 0;
            for (std::size_t x = 0; x < g.N; ++x) {
                if (x == w || !g.weight(w, x) || dist[x] < 0) continue;
                if (dist[x] == dist[w] - 1) ++cc;
                else if (dist[x] == dist[w]) ++ca;
                else if (dist[x] == dist[w] + 1) ++cb;
            }
            const auto k = static_cast<std::size_t>(dist[w]);
            put(bs, k, cb);
            put(as, k, ca);
            if (k > 0) put(cs, k, cc);
            r.diameter = std::max(r.diameter, dist[w]);
        }
    }
    r.components = connected_components(g).count;
    for (int k = 0; k < r.diameter; ++k) r.b.push_back(bs[k].value_or(0));
    for (int k = 1; k <= r.diameter; ++k) r.c.push_back(cs[k].value_or(0));
    for (int k = 0; k <= r.diameter; ++k) r.a.push_back(as[k].value_or(0));
    return r;
}

inline IntMatrix matrix_walk_counts(const WeightedCayleyGraph& g, const std::vector<int>& seq) {
    IntMatrix m = IntMatrix::identity(g.N);
    for (int w : seq) m = m * g.slice(w);
    return m;
}

inline std::string matrix_dump(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

inline std::string to_dot(const WeightedCayleyGraph& g) {
    bool sym = true;
    for (std::size_t i = 0; i < g.N; ++i)
        for (std::size_t j = 0; j < g.N; ++j)
            if (g.weight(i, j) != g.weight(j, i)) sym = false;
    std::ostringstream os;
    os << (sym ? "graph" : "digraph") << " cayley {\n";
    for (std::size_t i = 0; i < g.N; ++i) os << "  " << i << ";\n";
    for (std::size_t i = 0; i < g.N; ++i)
        for (std::size_t j = sym ? i + 1 : 0; j < g.N; ++j)
            if (i != j && g.weight(i, j))
                os << "  " << i << (sym ? " -- " : " -> ") << j << " [label=" << g.weight(i, j) << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace pbent
