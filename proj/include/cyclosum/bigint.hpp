#pragma once

#include <algorithm>
#include <concepts>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclosum {

/// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
///
/// Scope is deliberately small: the ring arithmetic needs exact add/sub/mul
/// with occasional ~200-bit values, digit extraction needs division by small
/// words, and the test-side resultant oracle needs full (exact) division.
/// No gcd, no modular exponentiation, no parsing.
class BigInt {
public:
    BigInt() = default;

    template <std::integral T>
    BigInt(T v) {
        if (v == 0) return;
        unsigned long long mag = 0;
        if constexpr (std::is_signed_v<T>) {
            sign_ = v < 0 ? -1 : 1;
            mag = static_cast<unsigned long long>(v < 0 ? -(static_cast<long long>(v) + 1) : static_cast<long long>(v));
            if (v < 0) mag += 1; // avoids overflow at the minimum value
        } else {
            sign_ = 1;
            mag = static_cast<unsigned long long>(v);
        }
        while (mag) {
            mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
            mag >>= 32;
        }
    }

    static BigInt from_i128(__int128 v) {
        BigInt out;
        if (v == 0) return out;
        out.sign_ = v < 0 ? -1 : 1;
        unsigned __int128 mag = v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        while (mag) {
            out.mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
            mag >>= 32;
        }
        return out;
    }

    bool is_zero() const noexcept { return sign_ == 0; }
    int signum() const noexcept { return sign_; }

    bool fits_int64() const noexcept {
        if (mag_.size() > 2) return false;
        unsigned long long m = mag_ull();
        return sign_ >= 0 ? m <= 0x7fffffffffffffffull : m <= 0x8000000000000000ull;
    }

    int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long m = mag_ull();
        return sign_ >= 0 ? static_cast<int64_t>(m) : -static_cast<int64_t>(m - 1) - 1;
    }

    BigInt operator-() const {
        BigInt out = *this;
        out.sign_ = -out.sign_;
        return out;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt out;
        if (a.sign_ == b.sign_) {
            out.mag_ = add_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
            return out;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return out;
        if (c > 0) {
            out.mag_ = sub_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
        } else {
            out.mag_ = sub_mag(b.mag_, a.mag_);
            out.sign_ = b.sign_;
        }
        return out;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt out;
        if (a.sign_ == 0 || b.sign_ == 0) return out;
        out.sign_ = a.sign_ * b.sign_;
        out.mag_ = mul_mag(a.mag_, b.mag_);
        return out;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    /// Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0 || cmp_mag(a.mag_, b.mag_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        if (b.mag_.size() == 1) {
            uint32_t rem = 0;
            qm = divmod_small_mag(a.mag_, b.mag_[0], rem);
            if (rem) rm.push_back(rem);
        } else {
            divmod_mag(a.mag_, b.mag_, qm, rm);
        }
        q = BigInt();
        r = BigInt();
        if (!qm.empty()) { q.mag_ = std::move(qm); q.sign_ = a.sign_ * b.sign_; }
        if (!rm.empty()) { r.mag_ = std::move(rm); r.sign_ = a.sign_; }
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    /// Mathematical residue of this value in [0, m).
    uint32_t mod_small(uint32_t m) const {
        if (m == 0) throw std::domain_error("BigInt: mod 0");
        uint64_t rem = 0;
        for (size_t i = mag_.size(); i-- > 0;)
            rem = ((rem << 32) | mag_[i]) % m;
        if (sign_ < 0 && rem != 0) rem = m - rem;
        return static_cast<uint32_t>(rem);
    }

    /// Divide by a small word, requiring exactness. Returns false (leaving
    /// *this untouched) if d does not divide the value.
    bool try_divexact_small(uint32_t d) {
        if (d == 0) throw std::domain_error("BigInt: divexact by 0");
        if (sign_ == 0) return true;
        uint32_t rem = 0;
        std::vector<uint32_t> q = divmod_small_mag(mag_, d, rem);
        if (rem != 0) return false;
        mag_ = std::move(q);
        if (mag_.empty()) sign_ = 0;
        return true;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            uint32_t rem = 0;
            m = divmod_small_mag(m, 1000000000u, rem);
            for (int i = 0; i < 9; ++i) {
                out.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (out.size() > 1 && out.back() == '0') out.pop_back();
        if (sign_ < 0) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

    size_t limb_count() const noexcept { return mag_.size(); }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_; // little-endian, no leading zeros

    unsigned long long mag_ull() const noexcept {
        unsigned long long m = mag_.empty() ? 0ull : mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

    static void trim(std::vector<uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<uint32_t> out(hi.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < hi.size(); ++i) {
            uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            out[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        out[hi.size()] = static_cast<uint32_t>(carry);
        trim(out);
        return out;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> out(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            borrow = 0;
            if (s < 0) { s += (1ll << 32); borrow = 1; }
            out[i] = static_cast<uint32_t>(s);
        }
        trim(out);
        return out;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> out(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t s = static_cast<uint64_t>(out[i + j]) + ai * b[j] + carry;
                out[i + j] = static_cast<uint32_t>(s);
                carry = s >> 32;
            }
            out[i + b.size()] = static_cast<uint32_t>(carry);
        }
        trim(out);
        return out;
    }

    static std::vector<uint32_t> divmod_small_mag(const std::vector<uint32_t>& a, uint32_t d, uint32_t& rem) {
        std::vector<uint32_t> q(a.size(), 0);
        uint64_t r = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<uint32_t>(r);
        trim(q);
        return q;
    }

    // Knuth algorithm D; requires b.size() >= 2 and |a| >= |b|.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        const size_t n = b.size();
        const size_t m = a.size() - n;
        const int shift = std::countl_zero(b.back());

        std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
        if (shift == 0) {
            std::copy(a.begin(), a.end(), u.begin());
            v = b;
        } else {
            for (size_t i = a.size(); i-- > 0;) {
                u[i + 1] |= static_cast<uint32_t>((static_cast<uint64_t>(a[i]) << shift) >> 32);
                u[i] = a[i] << shift;
            }
            for (size_t i = n; i-- > 0;) {
                if (i + 1 < n) v[i + 1] |= static_cast<uint32_t>((static_cast<uint64_t>(b[i]) << shift) >> 32);
                v[i] = b[i] << shift;
            }
        }

        q.assign(m + 1, 0);
        const uint64_t base = 1ull << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t top = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = top / v[n - 1];
            uint64_t rhat = top % v[n - 1];
            while (qhat >= base ||
                   static_cast<unsigned __int128>(qhat) * v[n - 2] >
                       ((static_cast<unsigned __int128>(rhat) << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - borrow - static_cast<int64_t>(p & 0xffffffffu);
                borrow = 0;
                if (t < 0) { t += static_cast<int64_t>(base); borrow = 1; }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - borrow - static_cast<int64_t>(carry);
            if (t < 0) {
                // qhat was one too large; add v back
                t += static_cast<int64_t>(base);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<int64_t>(c2);
                t &= static_cast<int64_t>(base - 1);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }

        r.assign(n, 0);
        if (shift == 0) {
            std::copy(u.begin(), u.begin() + static_cast<long>(n), r.begin());
        } else {
            for (size_t i = 0; i < n; ++i) {
                r[i] = u[i] >> shift;
                r[i] |= static_cast<uint32_t>((static_cast<uint64_t>(u[i + 1]) << 32) >> shift);
            }
        }
        trim(q);
        trim(r);
    }
};

} // namespace cyclosum
