#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbent {

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported : std::logic_error {
    using std::logic_error::logic_error;
};

struct not_applicable : std::logic_error {
    using std::logic_error::logic_error;
};

struct parse_error : invalid_input {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : invalid_input(msg + " at position " + std::to_string(pos)), position(pos) {}
};

constexpr bool is_prime(int p) noexcept {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) throw std::overflow_error("ipow overflow");
    }
    return r;
}

constexpr int mod(long long a, int p) noexcept {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline int inv_mod(int a, int p) {
    a = mod(a, p);
    if (a == 0) throw invalid_input("zero has no inverse mod " + std::to_string(p));
    // p is small; Fermat by repeated multiplication
    int r = 1;
    for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

inline void check_field(int p, int n) {
    if (!is_prime(p)) throw invalid_input("p=" + std::to_string(p) + " is not prime");
    if (n < 1) throw invalid_input("n must be positive");
}

using Vec = std::vector<int>;

// index = sum v_i p^i, coordinate 0 varies fastest
inline std::size_t vector_index(const Vec& v, int p) {
    std::size_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < 0 || v[i] >= p)
            throw invalid_input("coordinate " + std::to_string(v[i]) + " out of range for p=" +
                                std::to_string(p));
        idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(v[i]);
    }
    return idx;
}

inline Vec index_vector(std::size_t idx, int p, int n) {
    Vec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    if (idx != 0) throw invalid_input("index out of range");
    return v;
}

// Rank of a list of vectors over GF(p).
inline int rank_mod_p(std::vector<Vec> rows, int p) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        int inv = inv_mod(rows[rank][c], p);
        for (auto& x : rows[rank]) x = mod(static_cast<long long>(x) * inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            int f = mod(rows[r][c], p);
            if (f == 0) continue;
            for (std::size_t k = 0; k < cols; ++k)
                rows[r][k] = mod(rows[r][k] - static_cast<long long>(f) * rows[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

// Index-level arithmetic tables for GF(p)^n.
class Space {
public:
    Space(int p, int n) : p_(p), n_(n) {
        check_field(p, n);
        N_ = ipow(p, n);
        if (N_ > 4096) throw unsupported("GF(p)^n too large for table arithmetic");
        vecs_.reserve(N_);
        for (std::size_t i = 0; i < N_; ++i) vecs_.push_back(index_vector(i, p, n));
        add_.resize(N_ * N_);
        dot_.resize(N_ * N_);
        neg_.resize(N_);
        Vec w(n);
        for (std::size_t i = 0; i < N_; ++i) {
            for (int k = 0; k < n; ++k) w[k] = mod(-vecs_[i][k], p);
            neg_[i] = static_cast<std::uint32_t>(vector_index(w, p));
            for (std::size_t j = 0; j < N_; ++j) {
                int d = 0;
                for (int k = 0; k < n; ++k) {
                    w[k] = (vecs_[i][k] + vecs_[j][k]) % p;
                    d += vecs_[i][k] * vecs_[j][k];
                }
                add_[i * N_ + j] = static_cast<std::uint32_t>(vector_index(w, p));
                dot_[i * N_ + j] = static_cast<std::uint8_t>(d % p);
            }
        }
    }

    int p() const { return p_; }
    int n() const { return n_; }
    std::size_t size() const { return N_; }
    const Vec& vec(std::size_t i) const { return vecs_[i]; }
    std::size_t add(std::size_t i, std::size_t j) const { return add_[i * N_ + j]; }
    std::size_t neg(std::size_t i) const { return neg_[i]; }
    std::size_t sub(std::size_t i, std::size_t j) const { return add_[i * N_ + neg_[j]]; }
    int dot(std::size_t i, std::size_t j) const { return dot_[i * N_ + j]; }
    std::size_t scale(int a, std::size_t i) const {
        Vec w = vecs_[i];
        for (auto& x : w) x = mod(static_cast<long long>(a) * x, p_);
        return vector_index(w, p_);
    }

private:
    int p_, n_;
    std::size_t N_ = 0;
    std::vector<Vec> vecs_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint8_t> dot_;
};

inline const Space& space(int p, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Space>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, n}];
    if (!slot) slot = std::make_unique<Space>(p, n);
    return *slot;
}

struct PAryFunction {
    int p = 2;
    int n = 1;
    std::vector<std::uint8_t> values;

    PAryFunction() = default;
    PAryFunction(int p_, int n_, std::vector<std::uint8_t> vals) : p(p_), n(n_), values(std::move(vals)) {
        check_field(p, n);
        if (values.size() != ipow(p, n))
            throw invalid_input("expected " + std::to_string(ipow(p, n)) + " values, got " +
                                std::to_string(values.size()));
        for (auto v : values)
            if (v >= p) throw invalid_input("value " + std::to_string(v) + " not below p");
    }

    static PAryFunction zero(int p, int n) {
        return PAryFunction(p, n, std::vector<std::uint8_t>(ipow(p, n), 0));
    }

    template <class F>
    static PAryFunction from_fn(int p, int n, F&& fn) {
        std::vector<std::uint8_t> vals(ipow(p, n));
        for (std::size_t i = 0; i < vals.size(); ++i)
            vals[i] = static_cast<std::uint8_t>(mod(fn(index_vector(i, p, n)), p));
        return PAryFunction(p, n, std::move(vals));
    }

    std::size_t size() const { return values.size(); }
    int operator[](std::size_t i) const { return values[i]; }
    int at(const Vec& v) const { return values[vector_index(v, p)]; }

    friend bool operator==(const PAryFunction&, const PAryFunction&) = default;
    friend auto operator<=>(const PAryFunction& a, const PAryFunction& b) {
        if (auto c = a.p <=> b.p; c != 0) return c;
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.values <=> b.values;
    }
};

inline PAryFunction scaled(const PAryFunction& f, int a) {
    auto vals = f.values;
    for (auto& v : vals) v = static_cast<std::uint8_t>(mod(static_cast<long long>(a) * v, f.p));
    return PAryFunction(f.p, f.n, std::move(vals));
}

// x -> f(-x)
inline PAryFunction reflected(const PAryFunction& f) {
    const Space& S = space(f.p, f.n);
    auto vals = f.values;
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f.values[S.neg(i)];
    return PAryFunction(f.p, f.n, std::move(vals));
}

inline bool is_even(const PAryFunction& f) {
    const Space& S = space(f.p, f.n);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.values[i] != f.values[S.neg(i)]) return false;
    return true;
}

inline std::vector<std::size_t> signature(const PAryFunction& f) {
    std::vector<std::size_t> s(f.p, 0);
    for (auto v : f.values) ++s[v];
    return s;
}

inline std::vector<std::size_t> support(const PAryFunction& f) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.values[i] != 0) s.push_back(i);
    return s;
}

// ---- function literals: "p=3,n=2" header line plus comma separated values

inline std::string values_csv(const PAryFunction& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.values[i]);
    }
    return out;
}

inline std::string to_literal(const PAryFunction& f) {
    return "p=" + std::to_string(f.p) + ",n=" + std::to_string(f.n) + "\n" + values_csv(f);
}

inline PAryFunction parse_values(int p, int n, const std::string& csv) {
    std::vector<std::uint8_t> vals;
    std::size_t i = 0;
    while (i < csv.size()) {
        while (i < csv.size() && (std::isspace(static_cast<unsigned char>(csv[i])) || csv[i] == ',' ||
                                  csv[i] == '[' || csv[i] == ']'))
            ++i;
        if (i >= csv.size()) break;
        std::size_t start = i;
        bool neg = false;
        if (csv[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= csv.size() || !std::isdigit(static_cast<unsigned char>(csv[i])))
            throw parse_error("expected integer", start);
        long long v = 0;
        while (i < csv.size() && std::isdigit(static_cast<unsigned char>(csv[i]))) {
            v = v * 10 + (csv[i] - '0');
            if (v > 1000000) throw parse_error("value too large", start);
            ++i;
        }
        vals.push_back(static_cast<std::uint8_t>(mod(neg ? -v : v, p)));
    }
    return PAryFunction(p, n, std::move(vals));
}

inline PAryFunction parse_literal(const std::string& text) {
    auto nl = text.find('\n');
    if (nl == std::string::npos) throw parse_error("missing header line", 0);
    std::string head = text.substr(0, nl);
    int p = 0, n = 0;
    if (std::sscanf(head.c_str(), "p=%d,n=%d", &p, &n) != 2) throw parse_error("bad header", 0);
    return parse_values(p, n, text.substr(nl + 1));
}

// ---- algebraic normal form

struct Anf {
    int p = 2;
    int n = 1;
    std::map<Vec, int> monomials;  // exponent tuple -> nonzero coefficient

    friend bool operator==(const Anf&, const Anf&) = default;
};

namespace detail {

// Dense coefficient array indexed like vectors: exponent tuple e <-> vector_index(e).
inline Anf from_dense(const std::vector<int>& c, int p, int n) {
    Anf a{p, n, {}};
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] % p != 0) a.monomials[index_vector(i, p, n)] = mod(c[i], p);
    return a;
}

inline std::vector<int> to_dense(const Anf& a) {
    std::vector<int> c(ipow(a.p, a.n), 0);
    for (const auto& [e, k] : a.monomials) c[vector_index(e, a.p)] = k;
    return c;
}

// Univariate (p-1)!^{-1} prod_{j=1}^{p-1} (j + v - x) as coefficients of x^0..x^{p-1}.
inline std::vector<int> atomic_univariate(int v, int p) {
    std::vector<int> poly{1};
    for (int j = 1; j < p; ++j) {
        std::vector<int> next(poly.size() + 1, 0);
        int c0 = mod(j + v, p);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] = mod(next[d] + static_cast<long long>(poly[d]) * c0, p);
            next[d + 1] = mod(next[d + 1] - poly[d], p);
        }
        poly = std::move(next);
    }
    int fact = 1;
    for (int j = 2; j < p; ++j) fact = fact * j % p;
    int inv = inv_mod(fact, p);  // == p-1 by Wilson
    for (auto& x : poly) x = mod(static_cast<long long>(x) * inv, p);
    return poly;
}

inline std::vector<std::vector<int>> atomic_table(int p, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
    const std::size_t N = ipow(p, n);
    std::vector<std::vector<int>> uni(p);
    for (int v = 0; v < p; ++v) uni[v] = atomic_univariate(v, p);
    std::vector<std::vector<int>> table(N, std::vector<int>(N, 0));
    for (std::size_t vi = 0; vi < N; ++vi) {
        Vec v = index_vector(vi, p, n);
        for (std::size_t ei = 0; ei < N; ++ei) {
            Vec e = index_vector(ei, p, n);
            long long c = 1;
            for (int k = 0; k < n && c; ++k) c = c * uni[v[k]][e[k]] % p;
            table[vi][ei] = static_cast<int>(c);
        }
    }
    return cache[{p, n}] = std::move(table);
}

}  // namespace detail

inline Anf atomic_anf(const Vec& v, int p) {
    const int n = static_cast<int>(v.size());
    return detail::from_dense(detail::atomic_table(p, n)[vector_index(v, p)], p, n);
}

// g = sum_v g(v) f_v
inline Anf to_anf(const PAryFunction& f) {
    const auto& table = detail::atomic_table(f.p, f.n);
    std::vector<int> c(f.size(), 0);
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (!f.values[v]) continue;
        for (std::size_t e = 0; e < f.size(); ++e) c[e] = (c[e] + f.values[v] * table[v][e]) % f.p;
    }
    return detail::from_dense(c, f.p, f.n);
}

inline PAryFunction evaluate_anf(const Anf& a, int p, int n) {
    if (a.p != p || a.n != n) throw invalid_input("ANF arity or modulus mismatch");
    const std::size_t N = ipow(p, n);
    std::vector<std::uint8_t> vals(N);
    for (std::size_t i = 0; i < N; ++i) {
        Vec x = index_vector(i, p, n);
        long long s = 0;
        for (const auto& [e, k] : a.monomials) {
            long long t = k;
            for (int j = 0; j < n; ++j) {
                if (e[j] > p - 1) throw invalid_input("exponent exceeds p-1");
                for (int r = 0; r < e[j]; ++r) t = t * x[j] % p;
            }
            s += t;
        }
        vals[i] = static_cast<std::uint8_t>(mod(s, p));
    }
    return PAryFunction(p, n, std::move(vals));
}

inline int degree(const Anf& a) {
    int d = 0;
    for (const auto& [e, k] : a.monomials) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

inline bool is_homogeneous(const Anf& a) {
    int d = -1;
    for (const auto& [e, k] : a.monomials) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d >= 0 && t != d) return false;
        d = t;
    }
    return true;
}

// Terms by descending total degree, ties by descending exponent tuple.
inline std::string to_string(const Anf& a) {
    std::vector<std::pair<Vec, int>> terms(a.monomials.begin(), a.monomials.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, k] : terms) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (!e[j]) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(j);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        if (mono.empty()) out += std::to_string(k);
        else if (k == 1) out += mono;
        else out += std::to_string(k) + "*" + mono;
    }
    return out;
}

// Accepts forms like "x0^2+x0*x1", "-2x0^4 + 2*x0^2", "x0x1+2x1^2". Exponents are reduced with x^p = x.
inline Anf parse_anf(const std::string& s, int p, int n) {
    check_field(p, n);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&]() -> long long {
        std::size_t start = i;
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000LL) throw parse_error("integer too large", start);
            ++i;
        }
        if (i == start) throw parse_error("expected integer", start);
        return v;
    };
    auto reduce_exp = [p](long long e) -> int {
        if (e == 0) return 0;
        return static_cast<int>((e - 1) % (p - 1) + 1);
    };
    std::vector<int> dense(ipow(p, n), 0);
    skip();
    if (i >= s.size()) throw parse_error("empty polynomial", i);
    bool first = true;
    while (true) {
        skip();
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw parse_error("expected '+' or '-'", i);
        }
        first = false;
        long long coeff = 1;
        Vec e(n, 0);
        bool any = false;
        while (true) {
            skip();
            if (i >= s.size()) break;
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = coeff * (read_int() % p) % p;
            } else if (s[i] == 'x') {
                std::size_t at = i;
                ++i;
                long long var = read_int();
                if (var >= n) throw parse_error("variable x" + std::to_string(var) + " exceeds arity", at);
                long long ex = 1;
                skip();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    skip();
                    ex = read_int();
                }
                e[var] = reduce_exp(e[var] + ex);
            } else {
                throw parse_error(std::string("unexpected character '") + s[i] + "'", i);
            }
            any = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            if (i < s.size() && (s[i] == 'x' || std::isdigit(static_cast<unsigned char>(s[i])))) continue;
            break;
        }
        if (!any) throw parse_error("empty term", i);
        auto& slot = dense[vector_index(e, p)];
        slot = mod(slot + sign * coeff, p);
    }
    return detail::from_dense(dense, p, n);
}

}  // namespace pbent
