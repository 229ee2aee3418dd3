#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "cyclotomic.hpp"

namespace pbent {

using Spectrum = std::vector<CycInt>;

// W_f(u) = sum_x zeta^{f(x) - <u,x>}
inline Spectrum walsh_transform(const PAryFunction& f) {
    const Space& S = space(f.p, f.n);
    const int p = f.p;
    Spectrum W;
    W.reserve(f.size());
    std::vector<std::int64_t> cnt(p);
    for (std::size_t u = 0; u < f.size(); ++u) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::size_t x = 0; x < f.size(); ++x) ++cnt[mod(f.values[x] - S.dot(u, x), p)];
        W.push_back(CycInt::from_redundant(p, cnt.data()));
    }
    return W;
}

// fhat(y) = sum_x f_C(x) zeta^{-<x,y>}
inline Spectrum fourier_transform(const PAryFunction& f) {
    const Space& S = space(f.p, f.n);
    const int p = f.p;
    Spectrum F;
    F.reserve(f.size());
    std::vector<std::int64_t> cnt(p);
    for (std::size_t y = 0; y < f.size(); ++y) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::size_t x = 0; x < f.size(); ++x) cnt[mod(-S.dot(x, y), p)] += f.values[x];
        F.push_back(CycInt::from_redundant(p, cnt.data()));
    }
    return F;
}

inline bool is_bent_spectrum(const Spectrum& W, int p, int n) {
    const CycInt target(p, static_cast<std::int64_t>(ipow(p, n)));
    for (const auto& w : W)
        if (!(norm_sq(w) == target)) return false;
    return true;
}

inline bool is_bent(const PAryFunction& f) { return is_bent_spectrum(walsh_transform(f), f.p, f.n); }

// Exact stand-in for p^{n/2}: the integer itself for even n, p^{(n-1)/2} times the Gauss sum for odd n.
inline CycInt half_power(int p, int n) {
    if (n % 2 == 0) return CycInt(p, static_cast<std::int64_t>(ipow(p, n / 2)));
    if (p == 2) throw unsupported("2^{n/2} is not in Z for odd n");
    return static_cast<std::int64_t>(ipow(p, (n - 1) / 2)) * gauss_sum(p);
}

// w / p^{n/2} = sign * zeta^exponent, times i when quarter_turn.
struct UnitForm {
    int sign = 1;
    int exponent = 0;
    bool quarter_turn = false;

    friend bool operator==(const UnitForm&, const UnitForm&) = default;
};

inline std::optional<UnitForm> unit_form(const CycInt& w, int n) {
    const int p = w.p();
    if (p == 2 && n % 2) return std::nullopt;
    const CycInt B = half_power(p, n);
    // for odd n and p = 3 mod 4 the Gauss sum is i*sqrt(p), so w/p^{n/2} picks up a factor i
    const bool qt = (n % 2 == 1) && (p % 4 == 3);
    for (int s : {1, -1}) {
        auto j = as_root_of_unity_multiple(w, static_cast<std::int64_t>(s) * B);
        if (j) return UnitForm{s, *j, qt};
    }
    return std::nullopt;
}

inline std::string describe_unit(const UnitForm& u) {
    std::string out = u.sign < 0 ? "-" : "";
    if (u.quarter_turn) out += "i";
    if (u.exponent) {
        if (u.quarter_turn) out += "*";
        out += "zeta^" + std::to_string(u.exponent);
    } else if (!u.quarter_turn) {
        out += "1";
    }
    return out;
}

struct BentProfile {
    bool is_bent = false;
    bool is_weakly_regular = false;
    bool is_regular = false;
    std::optional<PAryFunction> dual;
    // mu * p^{n/2} as an exact element, i.e. W_f(0) * zeta^{-f*(0)}
    std::optional<CycInt> mu_scaled;
    std::optional<UnitForm> mu;
    std::string mu_description;
    // KSW decomposition W_f(u) / p^{n/2} for every u (bent only)
    std::vector<UnitForm> ksw;
};

// Dual normalisation: regular f folds the exponent of W_f(0) into f* (mu = 1);
// otherwise f*(0) = 0 and mu = W_f(0) / p^{n/2}.
inline BentProfile classify_regularity(const PAryFunction& f, const Spectrum& W) {
    BentProfile prof;
    if (!is_bent_spectrum(W, f.p, f.n)) return prof;
    prof.is_bent = true;
    for (const auto& w : W) {
        auto uf = unit_form(w, f.n);
        if (!uf) throw std::logic_error("bent value without KSW unit form: " + to_string(w));
        prof.ksw.push_back(*uf);
    }
    std::vector<std::uint8_t> j(f.size());
    for (std::size_t u = 0; u < f.size(); ++u) {
        auto e = as_root_of_unity_multiple(W[u], W[0]);
        if (!e) return prof;
        j[u] = static_cast<std::uint8_t>(*e);
    }
    prof.is_weakly_regular = true;
    const UnitForm w0 = prof.ksw[0];
    prof.is_regular = w0.sign == 1 && !w0.quarter_turn;
    const int offset = prof.is_regular ? w0.exponent : 0;
    for (auto& x : j) x = static_cast<std::uint8_t>((x + offset) % f.p);
    prof.dual = PAryFunction(f.p, f.n, std::move(j));
    prof.mu_scaled = W[0] * CycInt::zeta(f.p, -offset);
    prof.mu = unit_form(*prof.mu_scaled, f.n);
    prof.mu_description = describe_unit(*prof.mu);
    return prof;
}

inline BentProfile classify_regularity(const PAryFunction& f) { return classify_regularity(f, walsh_transform(f)); }

inline PAryFunction dual_function(const PAryFunction& f) {
    auto prof = classify_regularity(f);
    if (!prof.is_weakly_regular) throw unsupported("dual needs a weakly regular bent function");
    return *prof.dual;
}

// f** compared with x -> f(-x); returns the constant offset f**(x) - f(-x) if it is constant.
inline std::optional<int> dual_roundtrip_offset(const PAryFunction& f) {
    PAryFunction dd = dual_function(dual_function(f));
    PAryFunction r = reflected(f);
    int off = mod(dd.values[0] - r.values[0], f.p);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (mod(dd.values[i] - r.values[i], f.p) != off) return std::nullopt;
    return off;
}

inline bool derivative_is_balanced(const PAryFunction& f, std::size_t b) {
    const Space& S = space(f.p, f.n);
    std::vector<std::size_t> cnt(f.p, 0);
    for (std::size_t x = 0; x < f.size(); ++x) ++cnt[mod(f.values[S.add(x, b)] - f.values[x], f.p)];
    const std::size_t target = f.size() / f.p;
    for (auto c : cnt)
        if (c != target) return false;
    return true;
}

// M = (zeta^{f(x_i - x_j)}); tests M * conj(M)^T == p^n I
inline bool is_butson(const PAryFunction& f) {
    const Space& S = space(f.p, f.n);
    const std::size_t N = f.size();
    std::vector<std::int64_t> cnt(f.p);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::size_t j = 0; j < N; ++j)
                ++cnt[mod(f.values[S.sub(i, j)] - f.values[S.sub(k, j)], f.p)];
            CycInt e = CycInt::from_redundant(f.p, cnt.data());
            if (!(e == CycInt(f.p, i == k ? static_cast<std::int64_t>(N) : 0))) return false;
        }
    }
    return true;
}

// sigma_k(W_f(u)) == W_{kf}(ku) for all u
inline bool galois_covariance_holds(const PAryFunction& f, int k) {
    if (mod(k, f.p) == 0) throw invalid_input("k must be a unit mod p");
    const Space& S = space(f.p, f.n);
    Spectrum W = walsh_transform(f);
    Spectrum Wk = walsh_transform(scaled(f, k));
    for (std::size_t u = 0; u < f.size(); ++u)
        if (!(W[u].galois(k) == Wk[S.scale(k, u)])) return false;
    return true;
}

struct RationalW0Check {
    std::int64_t w0 = 0;
    bool equal_nonzero_levels = false;  // |S_1| = ... = |S_{p-1}|
    bool value_identity = false;        // W_f(0) = |S_0| - |S_1|
    bool bent = false;
    bool n_even_if_bent = true;
};

inline RationalW0Check rational_w0_signature_check(const PAryFunction& f) {
    Spectrum W = walsh_transform(f);
    auto r = is_rational(W[0]);
    if (!r) throw not_applicable("W_f(0) is not rational");
    RationalW0Check c;
    c.w0 = *r;
    auto sig = signature(f);
    c.equal_nonzero_levels = std::all_of(sig.begin() + 1, sig.end(), [&](std::size_t s) { return s == sig[1]; });
    c.value_identity =
        c.w0 == static_cast<std::int64_t>(sig[0]) - static_cast<std::int64_t>(f.p > 1 ? sig[1] : 0);
    c.bent = is_bent_spectrum(W, f.p, f.n);
    c.n_even_if_bent = !c.bent || f.n % 2 == 0;
    return c;
}

// one line per u: "u=<index> W=[a0,...] |W|^2=<rational>"
inline std::string spectrum_dump(const Spectrum& W) {
    std::ostringstream os;
    for (std::size_t u = 0; u < W.size(); ++u) {
        os << "u=" << u << " W=[";
        const auto& c = W[u].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
        os << "] |W|^2=";
        CycInt ns = norm_sq(W[u]);
        if (auto r = is_rational(ns)) os << *r;
        else os << to_string(ns);
        os << "\n";
    }
    return os.str();
}

}  // namespace pbent
