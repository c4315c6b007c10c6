#pragma once

// Test-only oracles, kept independent of the library's lambda-division path:
// the lambda-adic valuation of a ring element equals the l-adic valuation of
// |Res(Phi_{l^2}, A)|, computed here as a Bareiss (fraction-free) determinant
// of the Sylvester matrix over BigInt.

#include <random>
#include <stdexcept>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/cyclo.hpp"

namespace oracles {

using cyclosum::BigInt;
using cyclosum::CycInt;
using cyclosum::CycRing;

inline BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return BigInt(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                BigInt q, r;
                BigInt::divmod(num, prev, q, r);
                if (!r.is_zero()) throw std::logic_error("Bareiss division was not exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt(0);
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Res(f, g) for f, g given by ascending coefficients (f monic here in all
/// uses); determinant of the (deg f + deg g)-square Sylvester matrix.
inline BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    auto deg = [](const std::vector<BigInt>& p) {
        size_t d = p.size();
        while (d > 0 && p[d - 1].is_zero()) --d;
        if (d == 0) throw std::invalid_argument("resultant of the zero polynomial");
        return d - 1;
    };
    const size_t df = deg(f), dg = deg(g);
    if (dg == 0) { // Res(f, c) = c^{deg f}
        BigInt out = 1;
        for (size_t i = 0; i < df; ++i) out = out * g[0];
        return out;
    }
    const size_t n = df + dg;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t row = 0; row < dg; ++row)
        for (size_t i = 0; i <= df; ++i)
            m[row][row + i] = f[df - i];
    for (size_t row = 0; row < df; ++row)
        for (size_t i = 0; i <= dg; ++i)
            m[dg + row][row + i] = g[dg - i];
    return det_bareiss(std::move(m));
}

/// Phi_{l^2}(x) = 1 + x^l + x^{2l} + ... + x^{l(l-1)}, ascending coefficients.
inline std::vector<BigInt> cyclotomic_l2(int l) {
    std::vector<BigInt> out(static_cast<size_t>(l * (l - 1) + 1), BigInt(0));
    for (int j = 0; j < l; ++j) out[static_cast<size_t>(j * l)] = BigInt(1);
    return out;
}

/// v_l(|Res(Phi_{l^2}, A)|) for a nonzero element A of Z[zeta_{l^2}].
inline int norm_valuation_at_l(int l, const CycInt& a) {
    std::vector<BigInt> poly(a.coeffs());
    BigInt res = resultant(cyclotomic_l2(l), poly);
    if (res.is_zero()) throw std::invalid_argument("zero element has no finite valuation");
    int v = 0;
    while (res.mod_small(static_cast<uint32_t>(l)) == 0) {
        if (!res.try_divexact_small(static_cast<uint32_t>(l)))
            throw std::logic_error("divexact disagreed with mod_small");
        ++v;
    }
    return v;
}

inline CycInt random_cycint(const CycRing& ring, std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> d(-bound, bound);
    CycInt out = ring.zero();
    for (int i = 0; i < ring.degree(); ++i) out[static_cast<size_t>(i)] = BigInt(d(rng));
    return out;
}

inline CycInt random_nonzero_cycint(const CycRing& ring, std::mt19937_64& rng, int bound = 9) {
    for (;;) {
        CycInt out = random_cycint(ring, rng, bound);
        if (!out.is_zero()) return out;
    }
}

} // namespace oracles
