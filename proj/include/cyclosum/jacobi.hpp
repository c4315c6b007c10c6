#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclosum/cyclo.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/ff.hpp"

namespace cyclosum::jacobi {

/// chi_e^i paired with chi_e^j; chi_e(gamma) = zeta_e = zeta_{2l^2}^{2l^2/e}.
struct CharacterParams {
    int e = 0;
    int i = 0;
    int j = 0;
    int embedding_scale = 0; // 2l^2 / e
};

enum class SumConvention {
    shifted,   // sum over chi^i(v) chi^j(v+1)
    reflected, // sum over chi^i(v) chi^j(1-v)
};

struct JacobiValue {
    CycInt value;
    CharacterParams params;
    SumConvention convention = SumConvention::shifted;
};

namespace detail {

inline CharacterParams check_params(const ff::FieldSpec& f, const CycRing& ring, int e, long long i, long long j) {
    const int e_max = 2 * ring.l_squared();
    if (e < 1 || e_max % e != 0)
        throw BadOrder("order e = " + std::to_string(e) + " does not divide 2l^2 = " + std::to_string(e_max));
    if ((f.q - 1) % static_cast<uint32_t>(e) != 0)
        throw BadField("q = " + std::to_string(f.q) + " is not 1 (mod e = " + std::to_string(e) + ")");
    auto norm = [e](long long v) { return static_cast<int>(((v % e) + e) % e); };
    return CharacterParams{e, norm(i), norm(j), e_max / e};
}

/// Character values are powers of zeta_{2l^2}: the whole sum is a histogram
/// over exponent classes mod 2l^2, materialized into the ring at the end.
inline CycInt materialize(const CycRing& ring, const std::vector<int64_t>& counts) {
    CycInt out = ring.zero();
    for (size_t t = 0; t < counts.size(); ++t)
        if (counts[t] != 0)
            out = out + scaled(ring.zeta_2l2_pow(static_cast<long long>(t)), BigInt(counts[t]));
    return out;
}

} // namespace detail

/// J_e(i,j) = sum over v in F_q of chi_e^i(v) chi_e^j(v+1), with chi^s(0) = 0
/// for every s (so v = 0 and v = -1 never contribute, and the trivial
/// character takes the value 1 on F_q^*).
inline JacobiValue jacobi_sum(const ff::FieldSpec& f, const ff::IndexTable& t, const CycRing& ring,
                              int e, long long i, long long j) {
    CharacterParams params = detail::check_params(f, ring, e, i, j);
    const int e_max = 2 * ring.l_squared();
    const uint32_t minus_one_code = t.pow_of[(f.q - 1) / 2];
    std::vector<int64_t> counts(static_cast<size_t>(e_max), 0);
    for (uint32_t tv = 0; tv < f.q - 1; ++tv) {
        const uint32_t vcode = t.pow_of[tv];
        if (vcode == minus_one_code) continue; // v + 1 = 0
        const uint32_t tw = t.index_of[f.inc({vcode}).code];
        const long long expo = (static_cast<long long>(params.i) * tv + static_cast<long long>(params.j) * tw)
                               * params.embedding_scale % e_max;
        ++counts[static_cast<size_t>(expo)];
    }
    return JacobiValue{detail::materialize(ring, counts), params, SumConvention::shifted};
}

/// The (v, 1-v) variant J_e(chi^i, chi^j); related to the shifted sum by
/// J_e(i,j) = chi_e^i(-1) J_e(chi^i, chi^j).
inline JacobiValue jacobi_sum_reflected(const ff::FieldSpec& f, const ff::IndexTable& t, const CycRing& ring,
                                        int e, long long i, long long j) {
    CharacterParams params = detail::check_params(f, ring, e, i, j);
    const int e_max = 2 * ring.l_squared();
    std::vector<int64_t> counts(static_cast<size_t>(e_max), 0);
    const ff::FieldElement one = f.one();
    for (uint32_t tv = 0; tv < f.q - 1; ++tv) {
        const uint32_t vcode = t.pow_of[tv];
        if (vcode == 1) continue; // 1 - v = 0
        const uint32_t tw = t.index_of[f.sub(one, {vcode}).code];
        const long long expo = (static_cast<long long>(params.i) * tv + static_cast<long long>(params.j) * tw)
                               * params.embedding_scale % e_max;
        ++counts[static_cast<size_t>(expo)];
    }
    return JacobiValue{detail::materialize(ring, counts), params, SumConvention::reflected};
}

/// chi_e^i(x): 0 at x = 0, otherwise zeta_{2l^2}^{ind(x) * i * (2l^2/e)}.
inline CycInt chi_eval(const ff::FieldSpec& f, const ff::IndexTable& t, const CycRing& ring,
                       int e, long long i, ff::FieldElement x) {
    CharacterParams params = detail::check_params(f, ring, e, i, 0);
    if (x.code == 0) return ring.zero();
    const long long expo = static_cast<long long>(ff::ind(t, x)) * params.i * params.embedding_scale;
    return ring.zeta_2l2_pow(expo);
}

/// chi_e(-1) = zeta_{2l^2}^{(q-1)/2 * (2l^2/e)}.
inline CycInt chi_minus_one(const ff::FieldSpec& f, const CycRing& ring, int e) {
    CharacterParams params = detail::check_params(f, ring, e, 1, 0);
    return ring.zeta_2l2_pow(static_cast<long long>((f.q - 1) / 2) * params.embedding_scale);
}

} // namespace cyclosum::jacobi
