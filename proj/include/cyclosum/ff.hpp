#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclosum/errors.hpp"

namespace cyclosum::ff {

/// Element of F_{p^r}, stored as the canonical base-p digit encoding of its
/// coefficient vector (constant digit least significant). For r = 1 the code
/// is simply the residue in [0, p-1].
struct FieldElement {
    uint32_t code = 0;

    friend bool operator==(FieldElement a, FieldElement b) { return a.code == b.code; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.code != b.code; }
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<uint32_t> prime_factors_u32(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline uint32_t pow_mod_u32(uint32_t a, uint32_t e, uint32_t p) {
    uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

// dense polynomial arithmetic over F_p, used only during field construction
using Poly = std::vector<uint32_t>; // little-endian coefficients

inline Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    // f monic
    a = poly_trim(std::move(a));
    while (a.size() >= f.size()) {
        uint64_t c = a.back();
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            uint64_t t = a[shift + i] + static_cast<uint64_t>(p) * p - c * f[i] % p;
            a[shift + i] = static_cast<uint32_t>(t % p);
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(out), f, p);
}

inline Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    Poly r = {1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // make b monic, then reduce
        uint32_t inv = pow_mod_u32(b.back(), p - 2, p);
        for (auto& c : b) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p);
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin test for a monic polynomial x^r + sum coeffs[i] x^i over F_p.
inline bool is_irreducible(const std::vector<uint32_t>& coeffs, uint32_t p) {
    const size_t r = coeffs.size();
    Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    const Poly x = {0, 1};
    // x^{p^j} mod f by iterated p-th powering
    Poly h = x;
    std::vector<Poly> frob(r + 1);
    frob[0] = x;
    for (size_t j = 1; j <= r; ++j) {
        h = poly_powmod(h, p, f, p);
        frob[j] = h;
    }
    if (poly_trim(frob[r]) != poly_trim(Poly(x))) return false;
    for (uint32_t s : prime_factors_u32(static_cast<uint32_t>(r))) {
        Poly diff = frob[r / s];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
        Poly g = poly_gcd(f, poly_trim(std::move(diff)), p);
        if (poly_trim(g).size() != 1) return false;
    }
    return true;
}

} // namespace detail

/// F_q with q = p^r = 2*l^2*k + 1, a fixed deterministic generator gamma, and
/// (for r > 1) the modulus polynomial x^r + sum modulus[i] x^i.
struct FieldSpec {
    uint32_t p = 0;
    int r = 1;
    uint32_t q = 0;
    int l = 0;
    int e_max = 0;              // 2*l^2
    uint32_t k = 0;             // (q-1) / (2*l^2)
    std::vector<uint32_t> modulus; // size r when r > 1, empty otherwise
    FieldElement gamma;

    /// Largest q accepted for O(q) table enumeration.
    static constexpr uint32_t kMaxQ = 1u << 24;

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    /// Image of a small nonnegative rational integer in the prime subfield.
    FieldElement from_uint(uint32_t n) const { return {n % p}; }

    std::vector<uint32_t> coeffs_of(FieldElement x) const {
        std::vector<uint32_t> out(static_cast<size_t>(r));
        uint32_t c = x.code;
        for (int i = 0; i < r; ++i) { out[static_cast<size_t>(i)] = c % p; c /= p; }
        return out;
    }

    FieldElement from_coeffs(const std::vector<uint32_t>& v) const {
        uint32_t code = 0;
        for (size_t i = v.size(); i-- > 0;) code = code * p + v[i] % p;
        return {code};
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (r == 1) return {(a.code + b.code) % p};
        uint32_t out = 0, mul = 1;
        uint32_t ca = a.code, cb = b.code;
        for (int i = 0; i < r; ++i) {
            out += (ca % p + cb % p) % p * mul;
            ca /= p; cb /= p; mul *= p;
        }
        return {out};
    }

    FieldElement neg(FieldElement a) const {
        if (r == 1) return {a.code == 0 ? 0 : p - a.code};
        uint32_t out = 0, mul = 1, ca = a.code;
        for (int i = 0; i < r; ++i) {
            uint32_t d = ca % p;
            out += (d == 0 ? 0 : p - d) * mul;
            ca /= p; mul *= p;
        }
        return {out};
    }

    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (r == 1) return {static_cast<uint32_t>(static_cast<uint64_t>(a.code) * b.code % p)};
        std::array<uint32_t, 64> va{}, vb{}, acc{};
        uint32_t ca = a.code, cb = b.code;
        for (int i = 0; i < r; ++i) { va[static_cast<size_t>(i)] = ca % p; ca /= p; }
        for (int i = 0; i < r; ++i) { vb[static_cast<size_t>(i)] = cb % p; cb /= p; }
        for (int i = 0; i < r; ++i) {
            if (va[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < r; ++j)
                acc[static_cast<size_t>(i + j)] = static_cast<uint32_t>(
                    (acc[static_cast<size_t>(i + j)] + static_cast<uint64_t>(va[static_cast<size_t>(i)]) * vb[static_cast<size_t>(j)]) % p);
        }
        for (int d = 2 * r - 2; d >= r; --d) {
            uint32_t c = acc[static_cast<size_t>(d)];
            acc[static_cast<size_t>(d)] = 0;
            if (c == 0) continue;
            for (int i = 0; i < r; ++i) {
                uint64_t t = acc[static_cast<size_t>(d - r + i)] + static_cast<uint64_t>(p) * p
                             - static_cast<uint64_t>(c) * modulus[static_cast<size_t>(i)] % p;
                acc[static_cast<size_t>(d - r + i)] = static_cast<uint32_t>(t % p);
            }
        }
        uint32_t out = 0;
        for (int i = r - 1; i >= 0; --i) out = out * p + acc[static_cast<size_t>(i)];
        return {out};
    }

    FieldElement pow(FieldElement a, uint64_t e) const {
        FieldElement res = one();
        while (e) {
            if (e & 1) res = mul(res, a);
            a = mul(a, a);
            e >>= 1;
        }
        return res;
    }

    /// x + 1, via the constant digit only.
    FieldElement inc(FieldElement x) const {
        uint32_t d = x.code % p;
        return {x.code - d + (d + 1) % p};
    }

    bool element_has_full_order(FieldElement g, const std::vector<uint32_t>& factors_of_q_minus_1) const {
        if (g.code == 0) return false;
        for (uint32_t s : factors_of_q_minus_1)
            if (pow(g, (q - 1) / s).code == 1) return false;
        return true;
    }
};

/// Build F_{p^r} for the order-2l^2 setting with deterministic choices:
/// smallest primitive root (r = 1), lexicographically smallest monic
/// irreducible modulus and smallest full-order element code (r > 1).
inline FieldSpec make_field(uint32_t p, int r, int l) {
    if (!detail::is_prime_u32(p))
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (l < 3 || l % 2 == 0 || !detail::is_prime_u32(static_cast<uint32_t>(l)))
        throw NotPrime("l must be an odd prime; got " + std::to_string(l));
    if (r < 1)
        throw DegenerateField("extension degree must be >= 1");

    uint64_t q64 = 1;
    for (int i = 0; i < r; ++i) {
        q64 *= p;
        if (q64 > FieldSpec::kMaxQ)
            throw DegenerateField("q = p^r exceeds the enumeration limit " + std::to_string(FieldSpec::kMaxQ));
    }
    FieldSpec f;
    f.p = p;
    f.r = r;
    f.q = static_cast<uint32_t>(q64);
    f.l = l;
    f.e_max = 2 * l * l;
    if ((f.q - 1) % static_cast<uint32_t>(f.e_max) != 0)
        throw CongruenceFailed("q = " + std::to_string(f.q) + " is " + std::to_string(f.q % static_cast<uint32_t>(f.e_max)) +
                               " (mod " + std::to_string(f.e_max) + "); q = 1 (mod 2l^2) is required");
    f.k = (f.q - 1) / static_cast<uint32_t>(f.e_max);

    const auto factors = detail::prime_factors_u32(f.q - 1);
    if (r == 1) {
        for (uint32_t g = 2; g < p; ++g) {
            if (f.element_has_full_order({g}, factors)) {
                f.gamma = {g};
                break;
            }
        }
        if (f.gamma.code == 0) throw DegenerateField("no primitive root found");
        return f;
    }

    // modulus: lexicographically smallest (c0 first) monic irreducible of degree r
    std::vector<uint32_t> c(static_cast<size_t>(r), 0);
    bool found = false;
    while (!found) {
        if (detail::is_irreducible(c, p)) {
            found = true;
            break;
        }
        // increment (c0, ..., c_{r-1}) in lex order: last coordinate fastest
        int i = r - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == p - 1) c[static_cast<size_t>(i--)] = 0;
        if (i < 0) throw DegenerateField("no irreducible modulus found"); // unreachable
        ++c[static_cast<size_t>(i)];
    }
    f.modulus = c;

    for (uint32_t g = 2; g < f.q; ++g) {
        if (f.element_has_full_order({g}, factors)) {
            f.gamma = {g};
            break;
        }
    }
    if (f.gamma.code == 0) throw DegenerateField("no generator found");
    return f;
}

/// Discrete-index table for F_q^*: pow_of[t] = code of gamma^t and
/// index_of[code] = t, with index_of[0] left as the NO_INDEX sentinel.
struct IndexTable {
    static constexpr uint32_t kNoIndex = 0xffffffffu;
    std::vector<uint32_t> pow_of;   // size q-1
    std::vector<uint32_t> index_of; // size q

    size_t size() const noexcept { return pow_of.size(); }
};

inline IndexTable build_index_table(const FieldSpec& f) {
    if (f.q < 3 || f.q > FieldSpec::kMaxQ)
        throw DegenerateField("q out of range for table enumeration");
    IndexTable t;
    t.pow_of.assign(f.q - 1, 0);
    t.index_of.assign(f.q, IndexTable::kNoIndex);
    FieldElement x = f.one();
    for (uint32_t i = 0; i < f.q - 1; ++i) {
        if (t.index_of[x.code] != IndexTable::kNoIndex)
            throw DegenerateField("gamma does not have full multiplicative order");
        t.pow_of[i] = x.code;
        t.index_of[x.code] = i;
        x = f.mul(x, f.gamma);
    }
    if (x.code != 1)
        throw DegenerateField("gamma^(q-1) != 1; field arithmetic is inconsistent");
    return t;
}

inline uint32_t ind(const IndexTable& t, FieldElement x) {
    if (x.code == 0) throw ZeroArgument("ind(0) is undefined");
    if (x.code >= t.index_of.size() || t.index_of[x.code] == IndexTable::kNoIndex)
        throw ZeroArgument("element code " + std::to_string(x.code) + " is not canonical");
    return t.index_of[x.code];
}

/// Plain-text dlog cache: `p r q gamma l` header, then `<code> <index>` for
/// every nonzero element in increasing code order.
inline void save_index_table(std::ostream& os, const FieldSpec& f, const IndexTable& t) {
    os << f.p << ' ' << f.r << ' ' << f.q << ' ' << f.gamma.code << ' ' << f.l << '\n';
    for (uint32_t code = 1; code < f.q; ++code)
        os << code << ' ' << t.index_of[code] << '\n';
}

inline IndexTable load_index_table(std::istream& is, const FieldSpec& f) {
    uint32_t p = 0, q = 0, gamma = 0;
    int r = 0, l = 0;
    if (!(is >> p >> r >> q >> gamma >> l))
        throw CacheMismatch("unreadable cache header");
    if (p != f.p || r != f.r || q != f.q || gamma != f.gamma.code || l != f.l) {
        std::ostringstream msg;
        msg << "cache header (p=" << p << " r=" << r << " q=" << q << " gamma=" << gamma << " l=" << l
            << ") does not match requested field (p=" << f.p << " r=" << f.r << " q=" << f.q
            << " gamma=" << f.gamma.code << " l=" << f.l << ")";
        throw CacheMismatch(msg.str());
    }
    IndexTable t;
    t.pow_of.assign(f.q - 1, 0);
    t.index_of.assign(f.q, IndexTable::kNoIndex);
    std::vector<bool> seen(f.q - 1, false);
    for (uint32_t expected = 1; expected < f.q; ++expected) {
        uint32_t code = 0, index = 0;
        if (!(is >> code >> index) || code != expected || index >= f.q - 1)
            throw CacheMismatch("malformed cache body at element " + std::to_string(expected));
        if (seen[index])
            throw CacheMismatch("cache body is not a bijection (index " + std::to_string(index) + " repeats)");
        seen[index] = true;
        t.index_of[code] = index;
        t.pow_of[index] = code;
    }
    if (t.index_of[1] != 0 || t.index_of[f.gamma.code] != 1)
        throw CacheMismatch("cache body disagrees with the generator convention");
    return t;
}

} // namespace cyclosum::ff
