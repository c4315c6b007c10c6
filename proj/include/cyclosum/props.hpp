#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cyclosum/congruence.hpp"

namespace cyclosum::congruence {

/// One checked identity instance; a, b, c are the family's parameters in
/// order (unused slots are -1).
struct IdentityRow {
    const char* family = "";
    int e = 0;
    long long a = -1, b = -1, c = -1;
    bool pass = false;
};

struct PropCheck {
    std::string family;
    long long checked = 0;
    long long violations = 0;
    std::string first_witness;
};

struct PropsReport {
    int l = 0;
    uint32_t p = 0;
    int r = 1;
    uint32_t q = 0;
    uint32_t gamma = 0;
    uint32_t w = 0;
    std::vector<PropCheck> checks;
    bool all_pass = false;
};

/// Exhaustively check the classical exact identities of Jacobi sums over all
/// exponents for orders e | 2l^2, e in {l, 2l, l^2, 2l^2}:
///   reflection                J_e(1,m) = chi_e(-1) J_e(1, e-m-1)
///   zero-exponent             J_e(0,0) = q-2, J_e(0,j) = -1, J_e(i,0) = -chi_e^i(-1)
///   complementary             J_e(m, e-m) = -1 for m != 0
///   automorphism-equivariance sigma_k J_e(m,n) = J_e(mk, nk), gcd(k,e) = 1
///   order-halving             J_{2e}(2m, 2n) = J_e(m,n)
///   product-relation          J(m,n) J(m+n,s) = chi^m(-1) J(m,s) J(n,s+m)
///   modulus                   J_e(1,n) conj = q, or 1 when n = 0, -1 (mod e)
///   diagonal-four             J(a,a) = chi^{-a}(4) J(a, l^2), a != 0
inline PropsReport verify_propositions(const VerificationContext& ctx,
                                       const std::function<void(const IdentityRow&)>& sink = {}) {
    const CycRing& R = ctx.ring;
    const int l = R.l();
    const int l2 = R.l_squared();
    const int e2 = 2 * l2;
    const std::vector<int> orders = {l, 2 * l, l2, e2};

    std::map<int, std::vector<CycInt>> J; // J[e][i*e + j]
    for (int e : orders) {
        auto& tab = J[e];
        tab.reserve(static_cast<size_t>(e) * static_cast<size_t>(e));
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                tab.push_back(jacobi::jacobi_sum(ctx.field, ctx.table, R, e, i, j).value);
    }
    auto at = [&](int e, int i, int j) -> const CycInt& {
        return J[e][static_cast<size_t>(i) * static_cast<size_t>(e) + static_cast<size_t>(j)];
    };
    auto chi_pow_minus1 = [&](int e, long long i) {
        return R.zeta_2l2_pow(static_cast<long long>((ctx.field.q - 1) / 2) * i * (e2 / e));
    };

    PropsReport rep;
    rep.l = l;
    rep.p = ctx.field.p;
    rep.r = ctx.field.r;
    rep.q = ctx.field.q;
    rep.gamma = ctx.field.gamma.code;
    rep.w = ctx.w;

    auto note = [&](PropCheck& pc, const char* fam, int e, long long a, long long b, long long c, bool ok) {
        ++pc.checked;
        if (!ok) {
            if (pc.violations == 0) {
                std::ostringstream os;
                os << "e=" << e;
                if (a >= 0) os << " a=" << a;
                if (b >= 0) os << " b=" << b;
                if (c >= 0) os << " c=" << c;
                pc.first_witness = os.str();
            }
            ++pc.violations;
        }
        if (sink) sink(IdentityRow{fam, e, a, b, c, ok});
    };

    {
        PropCheck pc{"reflection", 0, 0, ""};
        for (int e : orders) {
            CycInt cm1 = chi_pow_minus1(e, 1);
            for (int m = 0; m < e; ++m)
                note(pc, "reflection", e, m, -1, -1, at(e, 1, m) == R.mul(cm1, at(e, 1, (e - m - 1) % e)));
        }
        rep.checks.push_back(std::move(pc));
    }
    {
        PropCheck pc{"zero-exponent", 0, 0, ""};
        for (int e : orders) {
            for (int j = 0; j < e; ++j) {
                CycInt expect = R.from_int(j == 0 ? static_cast<long long>(ctx.field.q) - 2 : -1);
                note(pc, "zero-exponent", e, 0, j, -1, at(e, 0, j) == expect);
            }
            for (int i = 1; i < e; ++i)
                note(pc, "zero-exponent", e, i, 0, -1, at(e, i, 0) == -chi_pow_minus1(e, i));
        }
        rep.checks.push_back(std::move(pc));
    }
    {
        PropCheck pc{"complementary", 0, 0, ""};
        for (int e : orders)
            for (int m = 1; m < e; ++m)
                note(pc, "complementary", e, m, e - m, -1, at(e, m, e - m) == R.from_int(-1));
        rep.checks.push_back(std::move(pc));
    }
    {
        PropCheck pc{"automorphism-equivariance", 0, 0, ""};
        for (int e : orders)
            for (int k = 1; k < e; ++k) {
                if (std::gcd(k, e) != 1) continue;
                for (int m = 0; m < e; ++m)
                    for (int n = 0; n < e; ++n)
                        note(pc, "automorphism-equivariance", e, k, m, n,
                             R.apply_automorphism(at(e, m, n), k) == at(e, m * k % e, n * k % e));
            }
        rep.checks.push_back(std::move(pc));
    }
    {
        PropCheck pc{"order-halving", 0, 0, ""};
        for (int e : {l, l2})
            for (int m = 0; m < e; ++m)
                for (int n = 0; n < e; ++n)
                    note(pc, "order-halving", 2 * e, m, n, -1, at(2 * e, 2 * m % (2 * e), 2 * n % (2 * e)) == at(e, m, n));
        rep.checks.push_back(std::move(pc));
    }
    {
        PropCheck pc{"product-relation", 0, 0, ""};
        const int e = e2;
        std::vector<CycInt> chim;
        chim.reserve(static_cast<size_t>(e));
        for (int m = 0; m < e; ++m) chim.push_back(chi_pow_minus1(e, m));
        for (int m = 0; m < e; ++m)
            for (int n = 0; n < e; ++n) {
                if ((m + n) % e == 0) continue;
                for (int s = 0; s < e; ++s) {
                    if ((m + s) % e == 0) continue;
                    CycInt lhs = R.mul(at(e, m, n), at(e, (m + n) % e, s));
                    CycInt rhs = R.mul(chim[static_cast<size_t>(m)], R.mul(at(e, m, s), at(e, n, (s + m) % e)));
                    note(pc, "product-relation", e, m, n, s, lhs == rhs);
                }
            }
        rep.checks.push_back(std::move(pc));
    }
    {
        PropCheck pc{"modulus", 0, 0, ""};
        for (int e : orders)
            for (int n = 0; n < e; ++n) {
                CycInt prod = R.mul(at(e, 1, n), R.conjugate(at(e, 1, n)));
                bool unit_case = n == 0 || n == e - 1;
                note(pc, "modulus", e, n, -1, -1,
                     prod == R.from_int(unit_case ? 1 : static_cast<long long>(ctx.field.q)));
            }
        rep.checks.push_back(std::move(pc));
    }
    {
        // a = 0 makes chi^a trivial and the identity degenerates; start at 1.
        PropCheck pc{"diagonal-four", 0, 0, ""};
        const long long ind4 = 2ll * ctx.w % (ctx.field.q - 1);
        for (int a = 1; a < e2; ++a) {
            CycInt chia4 = R.zeta_2l2_pow(-static_cast<long long>(a) * ind4);
            note(pc, "diagonal-four", e2, a, -1, -1, at(e2, a, a) == R.mul(chia4, at(e2, a, l2)));
        }
        rep.checks.push_back(std::move(pc));
    }

    rep.all_pass = true;
    for (const auto& pc : rep.checks) rep.all_pass = rep.all_pass && pc.violations == 0;
    return rep;
}

} // namespace cyclosum::congruence
