#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/errors.hpp"

namespace cyclosum {

/// Element of Z[zeta], zeta a primitive l^2-th root of unity, as an exact
/// integer coefficient vector in the power basis 1, zeta, ..., zeta^{l(l-1)-1}.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(size_t degree) : c_(degree) {}
    explicit CycInt(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {}

    size_t size() const noexcept { return c_.size(); }
    const BigInt& operator[](size_t i) const { return c_[i]; }
    BigInt& operator[](size_t i) { return c_[i]; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        CycInt out(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }
    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        CycInt out(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
        return out;
    }
    CycInt operator-() const {
        CycInt out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
        return out;
    }

private:
    std::vector<BigInt> c_;
};

/// Coefficient-wise scalar multiple.
inline CycInt scaled(const CycInt& a, const BigInt& c) {
    CycInt out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

/// Result of a capped lambda-adic valuation: either an exact value below the
/// cap, or "at least cap" (which also covers the zero element).
struct LambdaValuation {
    int cap = 0;
    int value = 0;
    bool at_least_cap = false;

    bool at_least(int k) const { return at_least_cap ? cap >= k : value >= k; }
    std::string str() const { return at_least_cap ? "cap" : std::to_string(value); }
};

struct LambdaDigits {
    std::vector<int> digits; // each in {0, ..., l-1}
    CycInt remainder;        // input == sum_t digits[t]*lambda^t + lambda^m * remainder
};

/// Z[zeta_{l^2}] with the reduction rule from the l^2-th cyclotomic polynomial
/// Phi(x) = 1 + x^l + x^{2l} + ... + x^{l(l-1)}, lambda = 1 - zeta, and the
/// precomputed cofactor M with lambda * M = l.
///
/// Order-2l^2 roots embed via zeta_{2l^2} = -zeta^{(l^2+1)/2}, so every value
/// this library touches lives in this one ring.
class CycRing {
public:
    explicit CycRing(int l) : l_(l), l2_(l * l), deg_(l * (l - 1)) {
        if (l < 3 || l % 2 == 0 || !small_prime(l))
            throw NotPrime("l must be an odd prime; got " + std::to_string(l));
        // zeta^{l(l-1)+s} = -(zeta^s + zeta^{l+s} + ... + zeta^{l(l-2)+s})
        high_positions_.resize(l2_ - deg_);
        for (int s = 0; s < l2_ - deg_; ++s) {
            auto& v = high_positions_[s];
            v.reserve(l_ - 1);
            for (int j = 0; j + 1 < l_; ++j) v.push_back(j * l_ + s);
        }
        lambda_ = from_int(1) - zeta_pow(1);
        CycInt m = from_int(1);
        for (int k = 2; k < l2_; ++k)
            if (k % l_ != 0) m = mul(m, from_int(1) - zeta_pow(k));
        m_ = std::move(m);
        if (mul(lambda_, m_) != from_int(l_))
            throw TheoremViolation("lambda * M != l (ring construction is broken)");
    }

    int l() const noexcept { return l_; }
    int l_squared() const noexcept { return l2_; }
    int degree() const noexcept { return deg_; }

    CycInt zero() const { return CycInt(static_cast<size_t>(deg_)); }

    CycInt from_int(long long v) const {
        CycInt out = zero();
        out[0] = BigInt(v);
        return out;
    }

    const CycInt& lambda() const noexcept { return lambda_; }

    /// M = prod over primitive l^2-th roots other than zeta of (1 - root);
    /// satisfies lambda * M = l, making division by lambda an integer op.
    const CycInt& lambda_inverse_numerator() const noexcept { return m_; }

    CycInt zeta_pow(long long k) const {
        int kk = norm_mod(k, l2_);
        CycInt out = zero();
        add_zeta(out, kk, BigInt(1));
        return out;
    }

    /// zeta_{2l^2}^t = (-1)^t * zeta^{t(l^2+1)/2 mod l^2}.
    CycInt zeta_2l2_pow(long long t) const {
        int tt = norm_mod(t, 2 * l2_);
        int e = static_cast<int>((static_cast<long long>(tt) * ((l2_ + 1) / 2)) % l2_);
        CycInt out = zero();
        add_zeta(out, e, BigInt(tt % 2 == 0 ? 1 : -1));
        return out;
    }

    CycInt mul(const CycInt& a, const CycInt& b) const {
        int64_t amax = 0, bmax = 0;
        if (abs_bound(a, amax) && abs_bound(b, bmax)) return mul_fast(a, b);
        return mul_big(a, b);
    }

    /// The ring map zeta -> zeta^k for gcd(k, l) = 1.
    CycInt apply_automorphism(const CycInt& a, long long k) const {
        int kk = norm_mod(k, l2_);
        if (kk % l_ == 0)
            throw NotAUnit("automorphism exponent " + std::to_string(k) + " shares a factor with l");
        CycInt out = zero();
        for (int i = 0; i < deg_; ++i)
            if (!a[i].is_zero())
                add_zeta(out, static_cast<int>((static_cast<long long>(i) * kk) % l2_), a[i]);
        return out;
    }

    CycInt conjugate(const CycInt& a) const { return apply_automorphism(a, l2_ - 1); }

    /// Residue of a modulo lambda under Z[zeta]/(lambda) = F_l, zeta -> 1.
    int residue_mod_lambda(const CycInt& a) const {
        int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s = (s + static_cast<int>(a[i].mod_small(static_cast<uint32_t>(l_)))) % l_;
        return s;
    }

    bool lambda_divisible(const CycInt& a) const { return residue_mod_lambda(a) == 0; }

    /// b with lambda * b = a, via b = (a*M)/l coefficient-wise.
    CycInt exact_div_lambda(const CycInt& a) const {
        CycInt t = mul(a, m_);
        for (size_t i = 0; i < t.size(); ++i)
            if (!t[i].try_divexact_small(static_cast<uint32_t>(l_)))
                throw NotDivisible("element is not divisible by lambda");
        return t;
    }

    LambdaValuation lambda_valuation(const CycInt& a, int cap) const {
        LambdaValuation out;
        out.cap = cap;
        CycInt cur = a;
        for (int v = 0; v < cap; ++v) {
            if (cur.is_zero()) { out.at_least_cap = true; return out; }
            if (!lambda_divisible(cur)) { out.value = v; return out; }
            cur = exact_div_lambda(cur);
        }
        out.at_least_cap = true;
        return out;
    }

    LambdaDigits lambda_digit_expand(const CycInt& a, int m) const {
        LambdaDigits out;
        out.digits.reserve(static_cast<size_t>(m));
        CycInt cur = a;
        for (int t = 0; t < m; ++t) {
            int d = residue_mod_lambda(cur);
            out.digits.push_back(d);
            cur = exact_div_lambda(cur - from_int(d));
        }
        out.remainder = std::move(cur);
        return out;
    }

    /// Text form `c0 + c1*z + ...` with z = zeta; zero terms omitted.
    std::string render(const CycInt& a) const {
        std::string out;
        for (int i = 0; i < deg_; ++i) {
            if (a[i].is_zero()) continue;
            BigInt c = a[i];
            if (out.empty()) {
                if (c.signum() < 0) { out += "-"; c = -c; }
            } else {
                out += c.signum() < 0 ? " - " : " + ";
                if (c.signum() < 0) c = -c;
            }
            if (i == 0) {
                out += c.str();
            } else {
                out += c.str();
                out += i == 1 ? "*z" : "*z^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    int l_, l2_, deg_;
    std::vector<std::vector<int>> high_positions_; // images of zeta^{deg+s}, all coefficients -1
    CycInt lambda_, m_;

    static bool small_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static int norm_mod(long long v, int m) {
        long long r = v % m;
        return static_cast<int>(r < 0 ? r + m : r);
    }

    // out += c * zeta^k, 0 <= k < l^2
    void add_zeta(CycInt& out, int k, const BigInt& c) const {
        if (k < deg_) {
            out[static_cast<size_t>(k)] += c;
        } else {
            for (int pos : high_positions_[static_cast<size_t>(k - deg_)])
                out[static_cast<size_t>(pos)] -= c;
        }
    }

    // true iff every |coeff| < 2^59, the overflow-safe bound for the int128 convolution
    static bool abs_bound(const CycInt& a, int64_t& mx) {
        constexpr int64_t kLimit = 1ll << 59;
        mx = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i].fits_int64()) return false;
            int64_t v = a[i].to_int64();
            int64_t av = v < 0 ? -v : v;
            if (av >= kLimit) return false;
            if (av > mx) mx = av;
        }
        return true;
    }

    CycInt mul_fast(const CycInt& a, const CycInt& b) const {
        const size_t n = static_cast<size_t>(deg_);
        std::vector<int64_t> av(n), bv(n);
        for (size_t i = 0; i < n; ++i) { av[i] = a[i].to_int64(); bv[i] = b[i].to_int64(); }
        std::vector<__int128> acc(2 * n - 1, 0);
        for (size_t i = 0; i < n; ++i) {
            if (av[i] == 0) continue;
            __int128 x = av[i];
            for (size_t j = 0; j < n; ++j)
                if (bv[j] != 0) acc[i + j] += x * bv[j];
        }
        std::vector<__int128> folded(n, 0);
        for (size_t d = 0; d < n; ++d) folded[d] = acc[d];
        for (size_t d = n; d < 2 * n - 1; ++d) {
            if (acc[d] == 0) continue;
            int k = static_cast<int>(d % static_cast<size_t>(l2_));
            if (k < deg_) {
                folded[static_cast<size_t>(k)] += acc[d];
            } else {
                for (int pos : high_positions_[static_cast<size_t>(k - deg_)])
                    folded[static_cast<size_t>(pos)] -= acc[d];
            }
        }
        CycInt out(n);
        for (size_t i = 0; i < n; ++i) out[i] = BigInt::from_i128(folded[i]);
        return out;
    }

    CycInt mul_big(const CycInt& a, const CycInt& b) const {
        const size_t n = static_cast<size_t>(deg_);
        std::vector<BigInt> acc(2 * n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!b[j].is_zero()) acc[i + j] += a[i] * b[j];
        }
        CycInt out(n);
        for (size_t d = 0; d < n; ++d) out[d] = std::move(acc[d]);
        for (size_t d = n; d < 2 * n - 1; ++d) {
            if (acc[d].is_zero()) continue;
            int k = static_cast<int>(d % static_cast<size_t>(l2_));
            if (k < deg_) {
                out[static_cast<size_t>(k)] += acc[d];
            } else {
                for (int pos : high_positions_[static_cast<size_t>(k - deg_)])
                    out[static_cast<size_t>(pos)] -= acc[d];
            }
        }
        return out;
    }
};

} // namespace cyclosum
