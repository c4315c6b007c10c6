#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclosum/cyclo.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/ff.hpp"
#include "cyclosum/jacobi.hpp"

namespace cyclosum::congruence {

/// Digits c_{3,n}, ..., c_{l,n} (residues mod l) of the lambda-adic expansion
/// of J_{l^2}(1,n) + 1 written in base (zeta - 1):
///   J_{l^2}(1,n) = -1 + sum_{i=3}^{l} c_{i,n} (zeta - 1)^i  (mod lambda^{l+1}).
struct CCoeffs {
    int n = 0;
    std::vector<int> coeffs; // coeffs[i-3] = c_{i,n} for 3 <= i <= l

    int c(int i) const { return coeffs.at(static_cast<size_t>(i - 3)); }
};

/// Everything a verification run needs: the field, its dlog table, the ring,
/// and w = ind_gamma(2). Immutable once built; safe to share across threads.
struct VerificationContext {
    ff::FieldSpec field;
    ff::IndexTable table;
    CycRing ring;
    uint32_t w = 0;

    VerificationContext(ff::FieldSpec f, ff::IndexTable t)
        : field(std::move(f)), table(std::move(t)), ring(field.l),
          w(ff::ind(table, field.from_uint(2))) {}
};

inline VerificationContext make_context(uint32_t p, int r, int l) {
    ff::FieldSpec f = ff::make_field(p, r, l);
    ff::IndexTable t = ff::build_index_table(f);
    return VerificationContext(std::move(f), std::move(t));
}

/// Expand J_{l^2}(1,n) + 1 to l+1 lambda-adic digits and convert the base
/// from lambda to (zeta - 1) (sign flip on odd positions). The three lowest
/// digits must vanish; a nonzero one means the expansion floor is broken.
inline CCoeffs extract_c_coeffs(const VerificationContext& ctx, int n) {
    const int l = ctx.ring.l();
    const int l2 = ctx.ring.l_squared();
    if (n < 1 || n > l2 - 1 || n % l == 0)
        throw BadN("c-coefficients need 1 <= n <= l^2-1 with gcd(n, l) = 1; got n = " + std::to_string(n));
    CycInt delta = jacobi::jacobi_sum(ctx.field, ctx.table, ctx.ring, l2, 1, n).value + ctx.ring.from_int(1);
    LambdaDigits dig = ctx.ring.lambda_digit_expand(delta, l + 1);
    if (dig.digits[0] != 0 || dig.digits[1] != 0 || dig.digits[2] != 0)
        throw TheoremViolation("J + 1 is not divisible by lambda^3 at n = " + std::to_string(n) +
                               ", q = " + std::to_string(ctx.field.q));
    CCoeffs out;
    out.n = n;
    out.coeffs.reserve(static_cast<size_t>(l - 2));
    for (int i = 3; i <= l; ++i) {
        int d = dig.digits[static_cast<size_t>(i)];
        out.coeffs.push_back(i % 2 == 0 ? d : (l - d) % l); // c_i = (-1)^i d_i mod l
    }
    return out;
}

/// -1 + sum_{i=3}^{l} c_i (zeta^s - 1)^i.
inline CycInt c_sum_factor(const VerificationContext& ctx, const CCoeffs& cs, long long s) {
    const CycRing& R = ctx.ring;
    CycInt base = R.zeta_pow(s) - R.from_int(1);
    CycInt out = R.from_int(-1);
    CycInt pw = R.mul(R.mul(base, base), base);
    for (int i = 3; i <= R.l(); ++i) {
        out = out + scaled(pw, BigInt(cs.c(i)));
        if (i < R.l()) pw = R.mul(pw, base);
    }
    return out;
}

namespace detail {

/// Congruence factor for c-index `idx` (reduced mod l^2) with base
/// zeta^s - 1; degenerates to the constant -1 when l divides the reduced
/// index (the order-l^2 congruence has no c-sum on that branch).
inline CycInt factor_for_index(const VerificationContext& ctx, const std::map<int, CCoeffs>& cache,
                               long long idx, long long s) {
    const int l2 = ctx.ring.l_squared();
    int m = static_cast<int>(((idx % l2) + l2) % l2);
    if (m % ctx.ring.l() == 0) return ctx.ring.from_int(-1);
    return c_sum_factor(ctx, cache.at(m), s);
}

inline const CCoeffs& cached_c(const VerificationContext& ctx, std::map<int, CCoeffs>& cache, int n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, extract_c_coeffs(ctx, n)).first;
    return it->second;
}

} // namespace detail

/// RHS of the n = l^2 case: zeta^{-w} (-1 + sum c_{i,(l^2-1)/2} (zeta-1)^i).
inline CycInt rhs_for_n_l2(const VerificationContext& ctx) {
    const int l2 = ctx.ring.l_squared();
    CCoeffs cs = extract_c_coeffs(ctx, (l2 - 1) / 2);
    return ctx.ring.mul(ctx.ring.zeta_pow(-static_cast<long long>(ctx.w)), c_sum_factor(ctx, cs, 1));
}

/// RHS of the n = dl case (d odd, 1 <= d <= 2l-1, d != l):
/// -zeta^{-w(dl+1)} (-1 + sum c_{i,(l^2-1)/2}(zeta-1)^i)
///               (-1 + sum c_{i,dl-1}(zeta^{(-1-dl)/2} - 1)^i).
inline CycInt rhs_for_n_dl(const VerificationContext& ctx, int d) {
    const int l = ctx.ring.l();
    const int l2 = ctx.ring.l_squared();
    if (d < 1 || d > 2 * l - 1 || d % 2 == 0 || d == l)
        throw BadD("d must be odd, 1 <= d <= 2l-1, d != l; got d = " + std::to_string(d));
    std::map<int, CCoeffs> cache;
    detail::cached_c(ctx, cache, (l2 - 1) / 2);
    int idx = (d * l - 1) % l2;
    detail::cached_c(ctx, cache, idx);
    CycInt f1 = c_sum_factor(ctx, cache.at((l2 - 1) / 2), 1);
    CycInt f2 = detail::factor_for_index(ctx, cache, idx, (-1 - static_cast<long long>(d) * l) / 2);
    CycInt lead = ctx.ring.zeta_pow(-static_cast<long long>(ctx.w) * (static_cast<long long>(d) * l + 1));
    return -ctx.ring.mul(lead, ctx.ring.mul(f1, f2));
}

/// RHS of the coprime case (n odd, gcd(n, 2l^2) = 1, 1 <= n < 2l^2-1):
/// zeta^{-w(n+1)} (-1 + sum c_{i,(l^2-1)/2}(zeta-1)^i)
///               (-1 + sum c_{i,(l^2-1)/2}(zeta^n - 1)^i)
///               (-1 + sum c_{i,-1-n}(zeta^{(1-l^2)/2} - 1)^i).
inline CycInt rhs_for_n_coprime(const VerificationContext& ctx, int n) {
    const int l = ctx.ring.l();
    const int l2 = ctx.ring.l_squared();
    if (n < 1 || n >= 2 * l2 - 1 || n % 2 == 0 || n % l == 0)
        throw BadN("coprime case needs odd n in [1, 2l^2-1) with gcd(n, 2l^2) = 1; got n = " + std::to_string(n));
    std::map<int, CCoeffs> cache;
    detail::cached_c(ctx, cache, (l2 - 1) / 2);
    int idx = ((-1 - n) % l2 + l2) % l2;
    if (idx % l != 0) detail::cached_c(ctx, cache, idx);
    CycInt f1 = c_sum_factor(ctx, cache.at((l2 - 1) / 2), 1);
    CycInt f2 = c_sum_factor(ctx, cache.at((l2 - 1) / 2), n);
    CycInt f3 = detail::factor_for_index(ctx, cache, -1 - static_cast<long long>(n), (1 - static_cast<long long>(l2)) / 2);
    CycInt lead = ctx.ring.zeta_pow(-static_cast<long long>(ctx.w) * (n + 1));
    return ctx.ring.mul(lead, ctx.ring.mul(f1, ctx.ring.mul(f2, f3)));
}

/// RHS of the n = 2l^2 - 1 case: the constant -1, and the identity is exact.
inline CycInt rhs_for_n_max(const VerificationContext& ctx) {
    return ctx.ring.from_int(-1);
}

/// Even n reduces to n' = 2l^2 - n - 1 via J(1,n) = chi(-1) J(1,n'), exactly.
inline std::pair<int, CycInt> reduce_even_n(const VerificationContext& ctx, int n) {
    const int e = 2 * ctx.ring.l_squared();
    if (n < 2 || n > e - 2 || n % 2 != 0)
        throw BadN("even reduction needs even n in [2, 2l^2-2]; got n = " + std::to_string(n));
    return {e - n - 1, jacobi::chi_minus_one(ctx.field, ctx.ring, e)};
}

struct CaseResult {
    int n = 0;
    std::string label;
    int required = 0;
    LambdaValuation achieved;
    bool pass = false;
};

struct CongruenceReport {
    int l = 0;
    uint32_t p = 0;
    int r = 1;
    uint32_t q = 0;
    uint32_t gamma = 0;
    uint32_t w = 0;
    std::vector<uint32_t> modulus; // nonempty only for r > 1
    std::vector<CaseResult> cases;
    bool all_pass = false;
    int64_t elapsed_ms = 0;
};

/// Order-l^2 congruence for one n in [1, l^2-1]:
///   gcd(n,l) = 1: J = -1 + sum c_i (zeta-1)^i, gcd(n,l) = l: J = -1,
/// both mod lambda^{l+1}.
inline CaseResult verify_order_l2(const VerificationContext& ctx, int n) {
    const int l = ctx.ring.l();
    const int l2 = ctx.ring.l_squared();
    if (n < 1 || n > l2 - 1)
        throw BadN("order-l^2 case needs 1 <= n <= l^2-1; got n = " + std::to_string(n));
    CycInt J = jacobi::jacobi_sum(ctx.field, ctx.table, ctx.ring, l2, 1, n).value;
    CaseResult out;
    out.n = n;
    out.label = "order-l2";
    out.required = l + 1;
    CycInt rhs = n % l == 0 ? ctx.ring.from_int(-1) : c_sum_factor(ctx, extract_c_coeffs(ctx, n), 1);
    out.achieved = ctx.ring.lambda_valuation(J - rhs, l + 2);
    out.pass = out.achieved.at_least(out.required);
    return out;
}

namespace detail {

inline CaseResult verify_one_2l2_case(const VerificationContext& ctx, std::map<int, CCoeffs>& cache, int n) {
    const CycRing& R = ctx.ring;
    const int l = R.l();
    const int l2 = R.l_squared();
    const int e = 2 * l2;
    CaseResult out;
    out.n = n;
    out.required = l + 1;
    CycInt lhs = jacobi::jacobi_sum(ctx.field, ctx.table, R, e, 1, n).value;
    if (n % 2 == 0) {
        auto [n2, sign] = reduce_even_n(ctx, n);
        CycInt rhs = R.mul(sign, jacobi::jacobi_sum(ctx.field, ctx.table, R, e, 1, n2).value);
        out.label = "even-reduction";
        CycInt diff = lhs - rhs;
        out.achieved = R.lambda_valuation(diff, l + 2);
        out.pass = diff.is_zero();
        return out;
    }
    CycInt rhs = R.zero();
    if (n == l2) {
        out.label = "n=l^2";
        rhs = R.mul(R.zeta_pow(-static_cast<long long>(ctx.w)), c_sum_factor(ctx, cache.at((l2 - 1) / 2), 1));
    } else if (n % l == 0) {
        out.label = "n=dl";
        const int d = n / l;
        CycInt f1 = c_sum_factor(ctx, cache.at((l2 - 1) / 2), 1);
        CycInt f2 = factor_for_index(ctx, cache, d * l - 1, (-1 - static_cast<long long>(d) * l) / 2);
        rhs = -R.mul(R.zeta_pow(-static_cast<long long>(ctx.w) * (static_cast<long long>(d) * l + 1)), R.mul(f1, f2));
    } else if (n == 2 * l2 - 1) {
        out.label = "n=2l^2-1";
        CycInt diff = lhs - R.from_int(-1);
        out.achieved = R.lambda_valuation(diff, l + 2);
        out.pass = diff.is_zero();
        return out;
    } else {
        out.label = "coprime";
        CycInt f1 = c_sum_factor(ctx, cache.at((l2 - 1) / 2), 1);
        CycInt f2 = c_sum_factor(ctx, cache.at((l2 - 1) / 2), n);
        CycInt f3 = factor_for_index(ctx, cache, -1 - static_cast<long long>(n), (1 - static_cast<long long>(l2)) / 2);
        rhs = R.mul(R.zeta_pow(-static_cast<long long>(ctx.w) * (n + 1)), R.mul(f1, R.mul(f2, f3)));
    }
    out.achieved = R.lambda_valuation(lhs - rhs, l + 2);
    out.pass = out.achieved.at_least(out.required);
    return out;
}

} // namespace detail

/// Verify the order-2l^2 congruence for every n in [1, 2l^2-1]: odd n against
/// its case RHS at valuation >= l+1, even n through the chi(-1) reduction as
/// an exact identity. Optionally appends the order-l^2 per-n cases.
inline CongruenceReport verify_order_2l2(const VerificationContext& ctx, bool include_order_l2_cases = false) {
    const auto start = std::chrono::steady_clock::now();
    const int l = ctx.ring.l();
    const int l2 = ctx.ring.l_squared();
    CongruenceReport rep;
    rep.l = l;
    rep.p = ctx.field.p;
    rep.r = ctx.field.r;
    rep.q = ctx.field.q;
    rep.gamma = ctx.field.gamma.code;
    rep.w = ctx.w;
    rep.modulus = ctx.field.modulus;

    std::map<int, CCoeffs> cache;
    detail::cached_c(ctx, cache, (l2 - 1) / 2);
    for (int n = 1; n < 2 * l2; n += 2) {
        if (n % l != 0) {
            int idx = ((-1 - n) % l2 + l2) % l2;
            if (idx % l != 0) detail::cached_c(ctx, cache, idx);
        } else if (n != l2) {
            int idx = (n - 1) % l2;
            if (idx % l != 0) detail::cached_c(ctx, cache, idx);
        }
    }

    rep.all_pass = true;
    for (int n = 1; n < 2 * l2; ++n) {
        rep.cases.push_back(detail::verify_one_2l2_case(ctx, cache, n));
        rep.all_pass = rep.all_pass && rep.cases.back().pass;
    }
    if (include_order_l2_cases) {
        for (int n = 1; n < l2; ++n) {
            rep.cases.push_back(verify_order_l2(ctx, n));
            rep.all_pass = rep.all_pass && rep.cases.back().pass;
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace cyclosum::congruence
