// Acceptance suite: every release gate in one binary, one line per criterion.
//
//   1  order-2l^2 congruence at l=3 over every prime q = 1 (mod 18), q < 500
//   2  same at l=5 for q in {101, 151, 251, 401}
//   3  same at l=7 for q in {197, 491}
//   4  extension fields q = 343 and q = 361 at l=3
//   5  order-l^2 congruence and the d0 = d1 = d2 = 0 expansion floor, all fields
//   6  exact identity suites with zero violations
//   7  conjugate-product modulus at (l=3, q=19)
//   8  digit-stripping valuation == resultant-norm valuation on random elements
//   9  byte-identical CLI output across runs and job counts

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cyclosum/congruence.hpp"
#include "cyclosum/props.hpp"
#include "cyclosum/sweep.hpp"
#include "support/oracles.hpp"

#ifndef CYCLOSUM_CLI_PATH
#error "CYCLOSUM_CLI_PATH must point at the built binary"
#endif

using namespace cyclosum;
using congruence::VerificationContext;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string what;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    Criterion(int id_, std::string what_) : id(id_), what(std::move(what_)) {}

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d: %s (%lld ms)%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                    static_cast<long long>(ms), ok ? "" : ("  -- " + detail).c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }

    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start).count();
    }
};

const std::vector<uint32_t> kPrimesL3 = {19, 37, 73, 109, 127, 163, 181, 199, 271, 307, 379, 397, 433, 487};
const std::vector<uint32_t> kPrimesL5 = {101, 151, 251, 401};
const std::vector<uint32_t> kPrimesL7 = {197, 491};

void check_main_congruence(Criterion& c, const VerificationContext& ctx) {
    const int l = ctx.ring.l();
    congruence::CongruenceReport rep = congruence::verify_order_2l2(ctx);
    c.require(rep.cases.size() == static_cast<size_t>(2 * l * l - 1),
              "wrong case count at q=" + std::to_string(ctx.field.q));
    for (const auto& cs : rep.cases) {
        c.require(cs.pass, "case n=" + std::to_string(cs.n) + " (" + cs.label + ") failed at q=" +
                               std::to_string(ctx.field.q) + ": achieved " + cs.achieved.str());
        if (cs.label != "even-reduction" && cs.label != "n=2l^2-1")
            c.require(cs.achieved.at_least(l + 1), "valuation below l+1 at q=" + std::to_string(ctx.field.q) +
                                                       ", n=" + std::to_string(cs.n));
    }
    c.require(rep.all_pass, "report not all_pass at q=" + std::to_string(ctx.field.q));
}

struct CliRun {
    int exit_code;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(CYCLOSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    CliRun res{-1, {}};
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

int main() {
    { // 1
        Criterion c{1, "order-2l^2 congruence, l=3, every prime q = 1 (mod 18) below 500"};
        sweep::SweepOptions opt;
        opt.l = 3;
        opt.q_min = 2;
        opt.q_max = 499;
        std::vector<sweep::FieldId> fields = sweep::enumerate_sweep_fields(opt);
        c.require(fields.size() == kPrimesL3.size(), "expected 14 prime fields");
        for (size_t i = 0; i < fields.size() && i < kPrimesL3.size(); ++i)
            c.require(fields[i].q == kPrimesL3[i], "unexpected q in sweep enumeration");
        for (uint32_t q : kPrimesL3) check_main_congruence(c, congruence::make_context(q, 1, 3));
        c.require(c.elapsed_ms() < 10000, "exceeded the 10 s budget");
    }
    { // 2
        Criterion c{2, "order-2l^2 congruence, l=5, q in {101, 151, 251, 401}"};
        for (uint32_t q : kPrimesL5) check_main_congruence(c, congruence::make_context(q, 1, 5));
        c.require(c.elapsed_ms() < 30000, "exceeded the 30 s budget");
    }
    { // 3
        Criterion c{3, "order-2l^2 congruence, l=7, q in {197, 491}"};
        for (uint32_t q : kPrimesL7) check_main_congruence(c, congruence::make_context(q, 1, 7));
        c.require(c.elapsed_ms() < 120000, "exceeded the 2 min budget");
    }
    { // 4
        Criterion c{4, "extension fields q=343 (7^3) and q=361 (19^2) at l=3"};
        auto t0 = std::chrono::steady_clock::now();
        check_main_congruence(c, congruence::make_context(7, 3, 3));
        auto t1 = std::chrono::steady_clock::now();
        check_main_congruence(c, congruence::make_context(19, 2, 3));
        auto t2 = std::chrono::steady_clock::now();
        c.require(std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() < 30, "343 exceeded 30 s");
        c.require(std::chrono::duration_cast<std::chrono::seconds>(t2 - t1).count() < 30, "361 exceeded 30 s");
    }
    { // 5
        Criterion c{5, "order-l^2 congruence and zero expansion floor on every field above"};
        auto run = [&](uint32_t p, int r, int l) {
            VerificationContext ctx = congruence::make_context(p, r, l);
            const int l2 = l * l;
            for (int n = 1; n < l2; ++n) {
                congruence::CaseResult cr = congruence::verify_order_l2(ctx, n);
                c.require(cr.pass && cr.achieved.at_least(l + 1),
                          "order-l^2 case failed at q=" + std::to_string(ctx.field.q) + ", n=" + std::to_string(n));
                CycInt delta = jacobi::jacobi_sum(ctx.field, ctx.table, ctx.ring, l2, 1, n).value +
                               ctx.ring.from_int(1);
                LambdaDigits d = ctx.ring.lambda_digit_expand(delta, 3);
                c.require(d.digits[0] == 0 && d.digits[1] == 0 && d.digits[2] == 0,
                          "nonzero low digit at q=" + std::to_string(ctx.field.q) + ", n=" + std::to_string(n));
            }
        };
        for (uint32_t q : kPrimesL3) run(q, 1, 3);
        for (uint32_t q : kPrimesL5) run(q, 1, 5);
        for (uint32_t q : kPrimesL7) run(q, 1, 7);
        run(7, 3, 3);
        run(19, 2, 3);
    }
    { // 6
        Criterion c{6, "exact identity suites, zero violations at (l=3, q=19), (l=3, q=37), (l=5, q=101)"};
        for (auto [p, l] : {std::pair<uint32_t, int>{19, 3}, {37, 3}, {101, 5}}) {
            VerificationContext ctx = congruence::make_context(p, 1, l);
            congruence::PropsReport rep = congruence::verify_propositions(ctx);
            c.require(rep.all_pass, "violations at q=" + std::to_string(p));
            c.require(rep.checks.size() == 8, "missing identity family at q=" + std::to_string(p));
            for (const auto& pc : rep.checks)
                c.require(pc.violations == 0, pc.family + " violated at q=" + std::to_string(p) +
                                                  " [" + pc.first_witness + "]");
        }
    }
    { // 7
        Criterion c{7, "conjugate-product modulus of order-2l^2 sums at (l=3, q=19)"};
        VerificationContext ctx = congruence::make_context(19, 1, 3);
        for (int n = 0; n < 18; ++n) {
            CycInt J = jacobi::jacobi_sum(ctx.field, ctx.table, ctx.ring, 18, 1, n).value;
            CycInt prod = ctx.ring.mul(J, ctx.ring.conjugate(J));
            long long expect = (n == 0 || n == 17) ? 1 : 19;
            c.require(prod == ctx.ring.from_int(expect), "modulus broke at n=" + std::to_string(n));
        }
    }
    { // 8
        Criterion c{8, "valuation oracle equivalence on 100 random elements for l in {3, 5}"};
        std::mt19937_64 rng(20260808);
        for (int l : {3, 5}) {
            CycRing ring(l);
            for (int iter = 0; iter < 100; ++iter) {
                CycInt a = oracles::random_nonzero_cycint(ring, rng);
                int expected = oracles::norm_valuation_at_l(l, a);
                LambdaValuation got = ring.lambda_valuation(a, expected + 2);
                c.require(!got.at_least_cap && got.value == expected,
                          "oracle mismatch at l=" + std::to_string(l) + ", iter " + std::to_string(iter));
            }
        }
    }
    { // 9
        Criterion c{9, "deterministic CLI reports: repeated runs and job counts byte-identical"};
        CliRun a = run_cli("verify --p 19 --l 3 --format json");
        CliRun b = run_cli("verify --p 19 --l 3 --format json");
        c.require(a.exit_code == 0 && b.exit_code == 0, "verify did not exit 0");
        c.require(!a.output.empty() && a.output == b.output, "verify runs differ");
        CliRun s1 = run_cli("sweep --l 3 --q-min 2 --q-max 200 --jobs 1 --format json");
        CliRun s3 = run_cli("sweep --l 3 --q-min 2 --q-max 200 --jobs 3 --format json");
        c.require(s1.exit_code == 0 && s3.exit_code == 0, "sweep did not exit 0");
        c.require(!s1.output.empty() && s1.output == s3.output, "sweep output depends on job count");
        CliRun csv1 = run_cli("sweep --l 3 --q-min 2 --q-max 200 --jobs 1 --format csv");
        CliRun csv4 = run_cli("sweep --l 3 --q-min 2 --q-max 200 --jobs 4 --format csv");
        c.require(!csv1.output.empty() && csv1.output == csv4.output, "csv sweep output depends on job count");
    }

    if (failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
