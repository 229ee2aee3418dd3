#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "core.hpp"
#include "transforms.hpp"

namespace pbent {

struct NoBentFunction : std::runtime_error {
    NoBentFunction() : std::runtime_error("no bent function below this node") {}
};

struct TraceStep {
    std::size_t vector = 0;  // index in GF(2)^n
    int bit = 0;
    std::vector<int> W;      // running Walsh sums after the assignment, in index order
};

struct SearchResult {
    PAryFunction f;
    std::vector<TraceStep> trace;  // root first
    std::uint64_t nodes = 0;
};

namespace detail {

inline std::int64_t bent_weight_bound(int n) { return (1LL << (n - 1)) - (1LL << (n / 2 - 1)); }

// Some target +-2^{n/2} still reachable from every W[u] with `left` unassigned values.
inline bool walsh_window_ok(const std::vector<int>& W, int left, int n) {
    const int t = 1 << (n / 2);
    for (int w : W) {
        const int lo = w - left, hi = w + left;
        if (!((lo <= t && t <= hi) || (lo <= -t && -t <= hi))) return false;
    }
    return true;
}

}  // namespace detail

// Randomised depth-first search for a Boolean bent function with running Walsh bounds.
inline SearchResult search_bent(int n, std::uint64_t seed) {
    if (n < 2 || n % 2) throw unsupported("bent search needs even n >= 2");
    if (n > 12) throw unsupported("bent search limited to n <= 12");
    const Space& S = space(2, n);
    const std::size_t N = S.size();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::size_t> B(N);
    std::iota(B.begin(), B.end(), 0);
    std::shuffle(B.begin(), B.end(), rng);

    struct Frame {
        std::size_t v;
        int vals[2];
        int tried;
        std::vector<int> W_in, W_out;
        std::int64_t wgt;
    };
    std::vector<int> A(N, -1);
    std::vector<Frame> stack;
    SearchResult res;
    const std::int64_t bound = detail::bent_weight_bound(n);

    // entering a level pops the next vector from the back of B and flips the coin
    auto enter = [&](std::size_t level, std::vector<int> W, std::int64_t wgt) -> bool {
        ++res.nodes;
        if (level == N) return true;
        if (wgt > bound) return false;
        int cf = unit(rng) > 0.5 ? 1 : 0;
        stack.push_back(Frame{B[N - 1 - level], {cf, 1 - cf}, 0, std::move(W), {}, wgt});
        return false;
    };

    bool done = enter(0, std::vector<int>(N, 0), 0);
    while (!done) {
        if (stack.empty()) throw NoBentFunction();
        Frame& fr = stack.back();
        if (fr.tried == 2) {
            A[fr.v] = -1;
            stack.pop_back();
            continue;
        }
        const int a = fr.vals[fr.tried++];
        A[fr.v] = a;
        std::vector<int> W = fr.W_in;
        for (std::size_t u = 0; u < N; ++u) W[u] += ((a + S.dot(u, fr.v)) & 1) ? -1 : 1;
        const std::size_t level = stack.size();
        if (!detail::walsh_window_ok(W, static_cast<int>(N - level), n)) continue;
        fr.W_out = W;
        done = enter(level, std::move(W), fr.wgt + a);
    }
    for (const auto& fr : stack) res.trace.push_back(TraceStep{fr.v, A[fr.v], fr.W_out});
    std::vector<std::uint8_t> vals(N);
    for (std::size_t i = 0; i < N; ++i) vals[i] = static_cast<std::uint8_t>(A[i]);
    res.f = PAryFunction(2, n, std::move(vals));
    if (!is_bent(res.f)) throw std::logic_error("search returned a non-bent function");
    return res;
}

struct ExploreOptions {
    bool prune_walsh = true;
    bool prune_weight = true;
};

// Deterministic exhaustive variant over a fixed assignment order (values 0 then 1).
// on_leaf receives complete tables; on_cut receives the partial assignment (-1 = unassigned) of each pruned node.
inline void explore_bent_tree(int n, const std::vector<std::size_t>& order, const ExploreOptions& opt,
                              const std::function<void(const std::vector<int>&)>& on_leaf,
                              const std::function<void(const std::vector<int>&)>& on_cut) {
    const Space& S = space(2, n);
    const std::size_t N = S.size();
    std::vector<int> A(N, -1);
    const std::int64_t bound = detail::bent_weight_bound(n);
    std::function<void(std::size_t, const std::vector<int>&, std::int64_t)> rec =
        [&](std::size_t level, const std::vector<int>& W, std::int64_t wgt) {
            if (level == N) {
                on_leaf(A);
                return;
            }
            if (opt.prune_weight && wgt > bound) {
                if (on_cut) on_cut(A);
                return;
            }
            const std::size_t v = order[level];
            for (int a : {0, 1}) {
                A[v] = a;
                std::vector<int> W2 = W;
                for (std::size_t u = 0; u < N; ++u) W2[u] += ((a + S.dot(u, v)) & 1) ? -1 : 1;
                if (opt.prune_walsh && !detail::walsh_window_ok(W2, static_cast<int>(N - level - 1), n)) {
                    if (on_cut) on_cut(A);
                    continue;
                }
                rec(level + 1, W2, wgt + a);
            }
            A[v] = -1;
        };
    rec(0, std::vector<int>(N, 0), 0);
}

}  // namespace pbent
