#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "combinatorics.hpp"
#include "core.hpp"
#include "graph.hpp"
#include "orbits.hpp"
#include "transforms.hpp"

namespace pbent {

// Even functions with f(0) = 0: one free value per {v, -v} pair of nonzero vectors.
struct EvenSpace {
    int p = 3, n = 2;
    std::size_t N = 0;
    std::vector<std::vector<std::size_t>> slots;  // members of each pair, ordered by smallest index
    std::uint64_t count = 0;

    PAryFunction decode(std::uint64_t ordinal) const {
        std::vector<std::uint8_t> vals(N, 0);
        for (const auto& s : slots) {
            const auto a = static_cast<std::uint8_t>(ordinal % p);
            ordinal /= p;
            for (auto x : s) vals[x] = a;
        }
        return PAryFunction(p, n, std::move(vals));
    }

    std::uint64_t encode(const PAryFunction& f) const {
        std::uint64_t o = 0;
        for (std::size_t s = slots.size(); s-- > 0;) o = o * p + f.values[slots[s][0]];
        return o;
    }
};

inline EvenSpace even_space(int p, int n) {
    const Space& S = space(p, n);
    EvenSpace e;
    e.p = p;
    e.n = n;
    e.N = S.size();
    for (std::size_t x = 1; x < S.size(); ++x) {
        const std::size_t y = S.neg(x);
        if (y < x) continue;
        e.slots.push_back(y == x ? std::vector<std::size_t>{x} : std::vector<std::size_t>{x, y});
    }
    e.count = ipow(p, static_cast<int>(e.slots.size()));
    return e;
}

namespace detail {

// Bentness of W = sum_k c_k zeta^k from the exponent counts c (sum N): |W|^2 = sum_d R(d) zeta^d with
// R the cyclic autocorrelation, which equals the rational N iff R(d) = R(1) for d >= 1 and R(0) - R(1) = N.
inline bool counts_bent(const std::int64_t* c, int p, std::int64_t N) {
    std::int64_t R1 = 0, R0 = 0;
    for (int k = 0; k < p; ++k) {
        R0 += c[k] * c[k];
        R1 += c[k] * c[(k + 1) % p];
    }
    if (R0 - R1 != N) return false;
    for (int d = 2; d < p; ++d) {
        std::int64_t R = 0;
        for (int k = 0; k < p; ++k) R += c[k] * c[(k + d) % p];
        if (R != R1) return false;
    }
    return true;
}

// Packs exponent counts as sum_{k < p-1} c_k (N+1)^k; c_{p-1} is implied by the total N.
class BentOracle {
public:
    BentOracle(int p, std::size_t N) : p_(p), N_(static_cast<std::int64_t>(N)), base_(N + 1) {
        weight_.resize(p);
        std::uint64_t w = 1;
        for (int k = 0; k < p - 1; ++k) {
            weight_[k] = w;
            w *= base_;
        }
        weight_[p - 1] = 0;
        span_ = w;
        if (span_ <= (1ULL << 26)) {
            table_.assign(span_, 0);
            std::vector<std::int64_t> c(p);
            for (std::uint64_t idx = 0; idx < span_; ++idx) {
                if (unpack(idx, c.data())) table_[idx] = counts_bent(c.data(), p, N_);
            }
        }
    }

    std::uint64_t weight(int k) const { return weight_[mod(k, p_)]; }

    bool bent(std::uint64_t idx) const {
        if (!table_.empty()) return table_[idx];
        std::int64_t c[64];
        return unpack(idx, c) && counts_bent(c, p_, N_);
    }

private:
    bool unpack(std::uint64_t idx, std::int64_t* c) const {
        std::int64_t s = 0;
        for (int k = 0; k < p_ - 1; ++k) {
            c[k] = static_cast<std::int64_t>(idx % base_);
            idx /= base_;
            s += c[k];
        }
        c[p_ - 1] = N_ - s;
        return c[p_ - 1] >= 0;
    }

    int p_;
    std::int64_t N_;
    std::uint64_t base_, span_ = 0;
    std::vector<std::uint64_t> weight_;
    std::vector<std::uint8_t> table_;
};

}  // namespace detail

struct EnumerationResult {
    int p = 3, n = 2;
    std::string mode;  // "even" or "degree<=d"
    std::uint64_t candidates = 0;
    std::vector<PAryFunction> bent;  // sorted
    std::uint64_t chunks_total = 0, chunks_resumed = 0;
    double seconds = 0;
};

struct EnumerateOptions {
    unsigned jobs = 0;               // 0: hardware concurrency
    std::string checkpoint;          // empty: none
    double checkpoint_interval = 5;  // seconds
    std::function<void(std::uint64_t, std::uint64_t)> progress;  // (chunks done, chunks total)
};

// All bent even functions with f(0) = 0.
inline EnumerationResult enumerate_bent_even(int p, int n, const EnumerateOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const EvenSpace E = even_space(p, n);
    const Space& S = space(p, n);
    const std::size_t N = E.N;
    const std::size_t m = E.slots.size();
    detail::BentOracle oracle(p, N);

    // inner block: the lowest b slots, tabulated for every u
    std::size_t b = 0;
    while (b < m && ipow(p, static_cast<int>(b + 1)) <= 20000) ++b;
    const std::uint64_t inner = ipow(p, static_cast<int>(b));
    const std::uint64_t outer = ipow(p, static_cast<int>(m - b));

    // contrib[(s*p + a)*N + u]: packed counts added by giving pair s the value a
    std::vector<std::uint64_t> contrib(m * p * N, 0);
    for (std::size_t s = 0; s < m; ++s)
        for (int a = 0; a < p; ++a)
            for (std::size_t u = 0; u < N; ++u) {
                std::uint64_t w = 0;
                for (auto x : E.slots[s]) w += oracle.weight(a - S.dot(u, x));
                contrib[(s * p + a) * N + u] = w;
            }
    std::vector<std::uint64_t> I(N * inner, 0);
    for (std::size_t u = 0; u < N; ++u)
        for (std::uint64_t c = 0; c < inner; ++c) {
            std::uint64_t acc = 0, cc = c;
            for (std::size_t s = 0; s < b; ++s) {
                acc += contrib[(s * p + cc % p) * N + u];
                cc /= p;
            }
            I[u * inner + c] = acc;
        }

    EnumerationResult res;
    res.p = p;
    res.n = n;
    res.mode = "even";
    res.candidates = E.count;
    res.chunks_total = outer;

    std::vector<char> done(outer, 0);
    std::vector<std::vector<std::uint64_t>> found(outer);
    if (!opt.checkpoint.empty()) {
        std::ifstream in(opt.checkpoint);
        if (in) {
            auto j = nlohmann::json::parse(in);
            if (j.at("p") != p || j.at("n") != n || j.at("chunks") != outer)
                throw invalid_input("checkpoint does not match this run");
            for (std::uint64_t c : j.at("done")) {
                done.at(c) = 1;
                ++res.chunks_resumed;
            }
            for (std::uint64_t o : j.at("bent")) found.at(o / inner).push_back(o);
        }
    }

    std::mutex mu;
    auto last_save = clock::now();
    std::uint64_t completed = res.chunks_resumed;
    auto save = [&] {
        nlohmann::json j;
        j["p"] = p;
        j["n"] = n;
        j["chunks"] = outer;
        std::vector<std::uint64_t> d, bb;
        for (std::uint64_t c = 0; c < outer; ++c)
            if (done[c]) {
                d.push_back(c);
                bb.insert(bb.end(), found[c].begin(), found[c].end());
            }
        j["done"] = d;
        j["bent"] = bb;
        const std::string tmp = opt.checkpoint + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::rename(tmp.c_str(), opt.checkpoint.c_str());
    };

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        std::vector<std::uint64_t> O(N);
        std::vector<std::uint64_t> local;
        while (true) {
            const std::uint64_t oc = next.fetch_add(1);
            if (oc >= outer) break;
            if (done[oc]) continue;
            local.clear();
            for (std::size_t u = 0; u < N; ++u) {
                std::uint64_t acc = oracle.weight(0);  // x = 0 contributes zeta^0
                std::uint64_t cc = oc;
                for (std::size_t s = b; s < m; ++s) {
                    acc += contrib[(s * p + cc % p) * N + u];
                    cc /= p;
                }
                O[u] = acc;
            }
            const std::uint64_t* I0 = I.data();
            for (std::uint64_t c = 0; c < inner; ++c) {
                if (!oracle.bent(O[0] + I0[c])) continue;
                std::size_t u = 1;
                while (u < N && oracle.bent(O[u] + I[u * inner + c])) ++u;
                if (u == N) local.push_back(oc * inner + c);
            }
            std::lock_guard<std::mutex> lock(mu);
            found[oc] = local;
            done[oc] = 1;
            ++completed;
            if (opt.progress) opt.progress(completed, outer);
            if (!opt.checkpoint.empty() &&
                std::chrono::duration<double>(clock::now() - last_save).count() >= opt.checkpoint_interval) {
                save();
                last_save = clock::now();
            }
        }
    };
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, outer));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (!opt.checkpoint.empty()) save();

    for (const auto& chunk : found)
        for (auto o : chunk) res.bent.push_back(E.decode(o));
    std::sort(res.bent.begin(), res.bent.end());
    res.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return res;
}

// Monomials of even total degree 2..bound with exponents <= p-1.
inline std::vector<Vec> even_monomials(int p, int n, int bound) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < ipow(p, n); ++i) {
        Vec e = index_vector(i, p, n);
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (d >= 2 && d <= bound && d % 2 == 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
        return da != db ? da < db : a > b;
    });
    return out;
}

// Bent functions among sum c_j m_j over the even monomials of degree <= bound (p odd: exactly the even
// functions of that degree with f(0) = 0).
inline EnumerationResult enumerate_bent_degree_bounded(int p, int n, int bound, const EnumerateOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const Space& S = space(p, n);
    const std::size_t N = S.size();
    const auto monos = even_monomials(p, n, bound);
    const std::size_t M = monos.size();
    std::vector<std::vector<std::uint8_t>> table(M);
    for (std::size_t j = 0; j < M; ++j) {
        Anf a{p, n, {{monos[j], 1}}};
        table[j] = evaluate_anf(a, p, n).values;
    }
    detail::BentOracle oracle(p, N);

    EnumerationResult res;
    res.p = p;
    res.n = n;
    res.mode = "degree<=" + std::to_string(bound);
    res.candidates = ipow(p, static_cast<int>(M));

    // split on the top coefficients so workers own disjoint odometer ranges
    std::size_t top = 0;
    while (top < M && ipow(p, static_cast<int>(top + 1)) <= 4096 && M - top > 1) ++top;
    const std::uint64_t chunks = ipow(p, static_cast<int>(top));
    const std::size_t low = M - top;
    res.chunks_total = chunks;

    std::vector<std::vector<PAryFunction>> found(chunks);
    std::atomic<std::uint64_t> next{0};
    std::mutex mu;
    std::uint64_t completed = 0;
    auto worker = [&] {
        std::vector<std::uint8_t> f(N);
        std::vector<int> digit(low);
        std::vector<std::uint64_t> idx(N);
        while (true) {
            const std::uint64_t ch = next.fetch_add(1);
            if (ch >= chunks) break;
            std::fill(f.begin(), f.end(), 0);
            std::uint64_t cc = ch;
            for (std::size_t t = 0; t < top; ++t) {
                const int c = static_cast<int>(cc % p);
                cc /= p;
                for (std::size_t x = 0; x < N; ++x) f[x] = static_cast<std::uint8_t>((f[x] + c * table[low + t][x]) % p);
            }
            std::fill(digit.begin(), digit.end(), 0);
            std::vector<PAryFunction> local;
            while (true) {
                bool bent = true;
                for (std::size_t u = 0; u < N && bent; ++u) {
                    std::uint64_t acc = 0;
                    for (std::size_t x = 0; x < N; ++x) acc += oracle.weight(f[x] - S.dot(u, x));
                    bent = oracle.bent(acc);
                }
                if (bent) local.emplace_back(p, n, f);
                // odometer step: every digit that changes adds its monomial once (p-1 -> 0 included)
                std::size_t j = 0;
                for (; j < low; ++j) {
                    for (std::size_t x = 0; x < N; ++x) {
                        int v = f[x] + table[j][x];
                        f[x] = static_cast<std::uint8_t>(v >= p ? v - p : v);
                    }
                    if (++digit[j] < p) break;
                    digit[j] = 0;
                }
                if (j == low) break;
            }
            std::lock_guard<std::mutex> lock(mu);
            found[ch] = std::move(local);
            ++completed;
            if (opt.progress) opt.progress(completed, chunks);
        }
    };
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& ch : found)
        for (auto& f : ch) res.bent.push_back(std::move(f));
    std::sort(res.bent.begin(), res.bent.end());
    res.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return res;
}

struct OrbitAttributes {
    std::size_t size = 0;
    PAryFunction representative;
    std::string anf;
    int degree = 0;
    bool homogeneous = false;
    std::vector<std::size_t> signature;
    std::size_t support_size = 0;
    bool bent = false, regular = false, weakly_regular = false;
    std::string mu;
    bool weighted_pds = false;
    bool weighted_srg = false;
    bool complete = false;
    std::optional<SrgParams> unweighted_srg;
    bool invariants_constant = true;  // checked on sampled members
};

struct ClassificationReport {
    EnumerationResult enumeration;
    OrbitPartition partition;
    std::vector<OrbitAttributes> orbits;
    std::vector<std::vector<std::optional<std::size_t>>> scalar_relations;
};

inline OrbitAttributes orbit_attributes(const PAryFunction& rep) {
    OrbitAttributes a;
    a.representative = rep;
    Anf anf = to_anf(rep);
    a.anf = to_string(anf);
    a.degree = degree(anf);
    a.homogeneous = is_homogeneous(anf);
    a.signature = signature(rep);
    a.support_size = support(rep).size();
    auto prof = classify_regularity(rep);
    a.bent = prof.is_bent;
    a.regular = prof.is_regular;
    a.weakly_regular = prof.is_weakly_regular;
    a.mu = prof.mu_description;
    auto curves = level_curves(rep);
    a.weighted_pds = is_weighted_pds(curves).is_weighted_pds;
    auto g = build_cayley_graph(rep);
    auto v = weighted_srg_verdict(g);
    a.weighted_srg = v.is_edge_weighted_srg;
    a.complete = v.complete;
    a.unweighted_srg = is_strongly_regular_unweighted(g);
    return a;
}

inline ClassificationReport classify_bent_set(EnumerationResult en, std::size_t sample = 100) {
    ClassificationReport rep;
    rep.partition = orbit_partition(en.bent, en.p, en.n);
    for (const auto& o : rep.partition.orbits) {
        OrbitAttributes a = orbit_attributes(o.representative);
        a.size = o.size();
        const std::size_t step = std::max<std::size_t>(1, o.size() / sample);
        for (std::size_t i = 0; i < o.size(); i += step) {
            const PAryFunction& f = en.bent[o.members[i]];
            auto prof = classify_regularity(f);
            auto g = build_cayley_graph(f);
            bool same = signature(f) == a.signature && prof.is_bent == a.bent && prof.is_regular == a.regular &&
                        prof.is_weakly_regular == a.weakly_regular && support(f).size() == a.support_size &&
                        is_strongly_regular_unweighted(g) == a.unweighted_srg;
            a.invariants_constant = a.invariants_constant && same;
        }
        rep.orbits.push_back(std::move(a));
    }
    rep.scalar_relations = scalar_relations(rep.partition);
    rep.enumeration = std::move(en);
    return rep;
}

}  // namespace pbent
