#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace pbent {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
    return r;
}

}  // namespace detail

// Element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(int p, std::int64_t r = 0) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {
        if (!is_prime(p)) throw invalid_input("CycInt modulus must be prime");
        c_[0] = r;
    }

    static CycInt zeta(int p, long long k = 1) {
        CycInt z(p);
        int e = mod(k, p);
        if (e == p - 1) {
            for (auto& x : z.c_) x = -1;
        } else {
            z.c_[e] = 1;
        }
        return z;
    }

    // From sum_{k=0}^{p-1} r_k zeta^k.
    static CycInt from_redundant(int p, const std::int64_t* r) {
        CycInt z(p);
        for (int k = 0; k < p - 1; ++k) z.c_[k] = detail::checked_add(r[k], -r[p - 1]);
        return z;
    }

    // p-1 power-basis coefficients, or p coefficients of 1, zeta, ..., zeta^{p-1}
    static CycInt from_coeffs(int p, std::vector<std::int64_t> c) {
        CycInt z(p);
        if (c.size() == static_cast<std::size_t>(p)) {
            const std::int64_t top = c.back();
            c.pop_back();
            for (auto& x : c) x = detail::checked_add(x, -top);
        }
        if (c.size() != static_cast<std::size_t>(p - 1)) throw invalid_input("CycInt needs p-1 or p coefficients");
        z.c_ = std::move(c);
        return z;
    }

    int p() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    CycInt& operator+=(const CycInt& b) {
        same(b);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = detail::checked_add(c_[k], b.c_[k]);
        return *this;
    }
    CycInt& operator-=(const CycInt& b) {
        same(b);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = detail::checked_add(c_[k], -b.c_[k]);
        return *this;
    }
    CycInt operator-() const {
        CycInt r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.same(b);
        const int p = a.p_;
        std::vector<std::int64_t> r(p, 0);
        for (int i = 0; i < p - 1; ++i) {
            if (!a.c_[i]) continue;
            for (int j = 0; j < p - 1; ++j) {
                if (!b.c_[j]) continue;
                auto& slot = r[(i + j) % p];
                slot = detail::checked_add(slot, detail::checked_mul(a.c_[i], b.c_[j]));
            }
        }
        return from_redundant(p, r.data());
    }
    CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

    friend CycInt operator*(std::int64_t s, CycInt a) {
        for (auto& x : a.c_) x = detail::checked_mul(x, s);
        return a;
    }

    // sigma_k : zeta -> zeta^k
    CycInt galois(int k) const {
        if (mod(k, p_) == 0) throw invalid_input("Galois exponent must be a unit mod p");
        std::vector<std::int64_t> r(p_, 0);
        for (int j = 0; j < p_ - 1; ++j) r[mod(static_cast<long long>(j) * k, p_)] += c_[j];
        return from_redundant(p_, r.data());
    }

    CycInt conj() const { return galois(p_ - 1); }

    bool is_zero() const {
        for (auto x : c_)
            if (x) return false;
        return true;
    }

private:
    void same(const CycInt& b) const {
        if (p_ != b.p_) throw invalid_input("CycInt modulus mismatch");
    }

    int p_ = 2;
    std::vector<std::int64_t> c_ = std::vector<std::int64_t>(1, 0);
};

inline CycInt norm_sq(const CycInt& a) { return a * a.conj(); }

inline std::optional<std::int64_t> is_rational(const CycInt& a) {
    const auto& c = a.coeffs();
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k]) return std::nullopt;
    return c[0];
}

// Some(j) iff a == zeta^j * c.
inline std::optional<int> as_root_of_unity_multiple(const CycInt& a, const CycInt& c) {
    if (c.is_zero()) throw invalid_input("reference value must be nonzero");
    CycInt t = c;
    const CycInt z = CycInt::zeta(c.p());
    for (int j = 0; j < c.p(); ++j) {
        if (t == a) return j;
        t = t * z;
    }
    return std::nullopt;
}

inline CycInt gauss_sum(int p) {
    if (p == 2) throw unsupported("Gauss sum needs odd p");
    CycInt g(p);
    for (int t = 0; t < p; ++t) g += CycInt::zeta(p, static_cast<long long>(t) * t);
    return g;
}

inline std::complex<double> to_complex(const CycInt& a) {
    const double pi = 3.14159265358979323846;
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < a.coeffs().size(); ++k)
        s += static_cast<double>(a.coeffs()[k]) * std::polar(1.0, 2 * pi * static_cast<double>(k) / a.p());
    return s;
}

// "a0 + a1*z + ... + a_{p-2}*z^(p-2)"
inline std::string to_string(const CycInt& a) {
    std::string out;
    const auto& c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += " + ";
        out += std::to_string(c[k]);
        if (k == 1) out += "*z";
        if (k > 1) out += "*z^" + std::to_string(k);
    }
    return out;
}

}  // namespace pbent
