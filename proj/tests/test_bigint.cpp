#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclosum/bigint.hpp"

using cyclosum::BigInt;

namespace {

BigInt abs_of(const BigInt& x) { return x.signum() < 0 ? -x : x; }

BigInt random_bigint(std::mt19937_64& rng, int max_limbs) {
    std::uniform_int_distribution<int> limbs(0, max_limbs);
    std::uniform_int_distribution<uint32_t> limb;
    int n = limbs(rng);
    BigInt out = 0;
    const BigInt base = BigInt(1ll << 32);
    for (int i = 0; i < n; ++i) out = out * base + BigInt(limb(rng));
    if (rng() & 1) out = -out;
    return out;
}

} // namespace

TEST_CASE("construction and decimal rendering") {
    CHECK(BigInt().str() == "0");
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(42).str() == "42");
    CHECK(BigInt(-42).str() == "-42");
    CHECK(BigInt(INT64_MIN).str() == "-9223372036854775808");
    CHECK(BigInt(INT64_MAX).str() == "9223372036854775807");
    CHECK(BigInt(1000000000000000000ll).str() == "1000000000000000000");
    // 2^64 via multiplication
    BigInt two32 = BigInt(1ll << 32);
    CHECK((two32 * two32).str() == "18446744073709551616");
    CHECK(BigInt(0x100000000ull).str() == "4294967296");
}

TEST_CASE("int64 round trip and bounds") {
    for (long long v : {0ll, 1ll, -1ll, 123456789ll, -987654321ll,
                        static_cast<long long>(INT64_MAX), static_cast<long long>(INT64_MIN)}) {
        BigInt b = v;
        CHECK(b.fits_int64());
        CHECK(b.to_int64() == v);
    }
    BigInt big = BigInt(INT64_MAX) + BigInt(1);
    CHECK(!big.fits_int64());
    CHECK((-big).fits_int64());
    CHECK((-big).to_int64() == INT64_MIN);
    CHECK_THROWS_AS((void)big.to_int64(), std::overflow_error);
}

TEST_CASE("arithmetic agrees with native 128-bit on random pairs") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-2000000000000ll, 2000000000000ll);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = d(rng), b = d(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt::from_i128(static_cast<__int128>(a) + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt::from_i128(static_cast<__int128>(a) - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt::from_i128(static_cast<__int128>(a) * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("ring identities on random big values") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = random_bigint(rng, 6), b = random_bigint(rng, 6), c = random_bigint(rng, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BigInt(0));
        CHECK(a + (-a) == BigInt(0));
    }
}

TEST_CASE("divmod reconstruction on random operands") {
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 1500) {
        BigInt a = random_bigint(rng, 12);
        BigInt b = random_bigint(rng, 6);
        if (b.is_zero()) continue;
        ++done;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(abs_of(r) < abs_of(b));
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("divmod matches native on small operands") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> d(-4000000000000000ll, 4000000000000000ll);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = d(rng), b = d(rng) / 1000;
        if (b == 0) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q == BigInt(a / b));
        CHECK(r == BigInt(a % b));
    }
    BigInt q, r;
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0), q, r), std::domain_error);
}

TEST_CASE("divmod edge shapes") {
    // divisor with a high limb that forces qhat corrections
    BigInt base = BigInt(1ll << 32);
    BigInt b = base * base - BigInt(1); // 2^64 - 1
    BigInt a = (base * base * base * base) - BigInt(1); // 2^128 - 1
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.is_zero()); // 2^128 - 1 = (2^64-1)(2^64+1)
    BigInt::divmod(b, a, q, r);
    CHECK(q.is_zero());
    CHECK(r == b);
}

TEST_CASE("small-word residue and exact division") {
    CHECK(BigInt(17).mod_small(5) == 2);
    CHECK(BigInt(-17).mod_small(5) == 3); // mathematical residue
    CHECK(BigInt(0).mod_small(7) == 0);
    BigInt x = BigInt(3) * BigInt(1000000007) * BigInt(1000000007);
    CHECK(x.mod_small(3) == 0);
    CHECK(x.try_divexact_small(3));
    CHECK(x == BigInt(1000000007) * BigInt(1000000007));
    BigInt y = 10;
    CHECK(!y.try_divexact_small(3));
    CHECK(y == BigInt(10)); // untouched on failure
    BigInt z = -21;
    CHECK(z.try_divexact_small(7));
    CHECK(z == BigInt(-3));
}
