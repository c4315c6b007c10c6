// cyclosum: exact Jacobi sums of order l, 2l, l^2, 2l^2 over F_q and
// lambda-adic verification of their congruences mod (1 - zeta_{l^2})^{l+1}.
//
// Subcommands:
//   compute  one exact Jacobi sum, printed as a coefficient vector in Z[zeta]
//   verify   the full order-2l^2 congruence report for one field
//   sweep    verify across all admissible q in a range (optionally parallel)
//   props    exhaustive exact-identity suites (reflection, modulus, ...)
//
// Exit codes: 0 success, 1 a checked congruence/identity failed, 2 bad input.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclosum/congruence.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/props.hpp"
#include "cyclosum/report.hpp"
#include "cyclosum/sweep.hpp"

namespace {

using namespace cyclosum;

std::optional<std::string> resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CYCLOSUM_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

congruence::VerificationContext make_cli_context(uint32_t p, int r, int l,
                                                 const std::optional<std::string>& cache_dir) {
    ff::FieldSpec f = ff::make_field(p, r, l);
    ff::IndexTable t = sweep::load_or_build_table(f, cache_dir);
    return congruence::VerificationContext(std::move(f), std::move(t));
}

int run_compute(uint32_t p, int r, int l, int order, long long i, long long j,
                bool reflected, const std::string& format, const std::optional<std::string>& cache_dir) {
    auto ctx = make_cli_context(p, r, l, cache_dir);
    jacobi::JacobiValue jv = reflected
        ? jacobi::jacobi_sum_reflected(ctx.field, ctx.table, ctx.ring, order, i, j)
        : jacobi::jacobi_sum(ctx.field, ctx.table, ctx.ring, order, i, j);
    const char* conv = reflected ? "(v,1-v)" : "(v,v+1)";
    if (format == "json") {
        report::ordered_json out;
        out["e"] = jv.params.e;
        out["i"] = jv.params.i;
        out["j"] = jv.params.j;
        out["p"] = p;
        out["r"] = r;
        out["q"] = ctx.field.q;
        out["l"] = l;
        out["gamma"] = ctx.field.gamma.code;
        out["w"] = ctx.w;
        if (!ctx.field.modulus.empty()) out["modulus"] = ctx.field.modulus;
        out["convention"] = reflected ? "reflected" : "shifted";
        auto coeffs = report::ordered_json::array();
        for (size_t c = 0; c < jv.value.size(); ++c) coeffs.push_back(jv.value[c].str());
        out["coeffs"] = std::move(coeffs);
        out["value"] = ctx.ring.render(jv.value);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "J_" << jv.params.e << "(" << jv.params.i << "," << jv.params.j << ") over F_"
                  << ctx.field.q << "  [gamma=" << ctx.field.gamma.code << ", w=" << ctx.w
                  << ", convention=" << conv << "]\n";
        std::cout << "coeffs: [";
        for (size_t c = 0; c < jv.value.size(); ++c) std::cout << (c ? ", " : "") << jv.value[c].str();
        std::cout << "]\n";
        std::cout << "value: " << ctx.ring.render(jv.value) << '\n';
    }
    return 0;
}

int run_verify(uint32_t p, int r, int l, bool full, const std::string& format,
               const std::optional<std::string>& cache_dir) {
    auto ctx = make_cli_context(p, r, l, cache_dir);
    congruence::CongruenceReport rep = congruence::verify_order_2l2(ctx, full);
    if (format == "json")
        std::cout << report::to_json(rep).dump(2) << '\n';
    else if (format == "csv")
        std::cout << report::to_csv(rep);
    else
        std::cout << report::to_text(rep, /*with_timing=*/true);
    return rep.all_pass ? 0 : 1;
}

int run_sweep(const sweep::SweepOptions& opt, const std::string& format) {
    if (sweep::enumerate_sweep_fields(opt).empty()) {
        std::cerr << "empty range: no q = 1 (mod " << 2 * opt.l * opt.l << ") in ["
                  << opt.q_min << ", " << opt.q_max << "]\n";
        return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<sweep::SweepRow> rows = sweep::run_sweep(opt);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start).count();
    bool all_pass = true;
    for (const auto& row : rows) all_pass = all_pass && row.report.all_pass;

    if (format == "json") {
        report::ordered_json out;
        out["l"] = opt.l;
        out["q_min"] = opt.q_min;
        out["q_max"] = opt.q_max;
        out["powers"] = opt.include_powers;
        out["fields"] = report::ordered_json::array();
        for (const auto& row : rows) out["fields"].push_back(report::to_json(row.report));
        out["all_pass"] = all_pass;
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << report::csv_header() << '\n';
        std::ostringstream os;
        for (const auto& row : rows) report::to_csv_rows(os, row.report);
        std::cout << os.str();
    } else {
        for (const auto& row : rows) {
            std::cout << "q=" << row.id.q << " p=" << row.id.p << " r=" << row.id.r
                      << " gamma=" << row.report.gamma << " w=" << row.report.w
                      << " cases=" << row.report.cases.size()
                      << " min_achieved=" << row.min_achieved()
                      << (row.report.all_pass ? "  pass" : "  FAIL") << '\n';
        }
        std::cout << "fields: " << rows.size() << ", all_pass: " << (all_pass ? "true" : "false") << '\n';
    }
    std::cerr << "sweep: " << rows.size() << " fields in " << elapsed << " ms\n";
    return all_pass ? 0 : 1;
}

int run_props(uint32_t p, int r, int l, const std::string& format,
              const std::optional<std::string>& cache_dir) {
    auto ctx = make_cli_context(p, r, l, cache_dir);
    if (format == "csv") {
        std::cout << "family,e,a,b,c,pass\n";
        std::ostringstream os;
        auto sink = [&os](const congruence::IdentityRow& row) {
            os << row.family << ',' << row.e << ',';
            if (row.a >= 0) os << row.a;
            os << ',';
            if (row.b >= 0) os << row.b;
            os << ',';
            if (row.c >= 0) os << row.c;
            os << ',' << (row.pass ? "true" : "false") << '\n';
        };
        congruence::PropsReport rep = congruence::verify_propositions(ctx, sink);
        std::cout << os.str();
        return rep.all_pass ? 0 : 1;
    }
    congruence::PropsReport rep = congruence::verify_propositions(ctx);
    if (format == "json")
        std::cout << report::to_json(rep).dump(2) << '\n';
    else
        std::cout << report::to_text(rep);
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jacobi sums of order l, 2l, l^2, 2l^2 over F_q and lambda-adic congruence verification"};
    app.require_subcommand(1);

    uint32_t p = 0;
    int r = 1;
    int l = 3;
    int order = 0;
    long long expo_i = 0, expo_j = 0;
    bool reflected = false;
    bool full = false;
    std::string format = "text";
    std::string cache_dir_flag;
    sweep::SweepOptions sopt;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "characteristic (prime)")->required();
        cmd->add_option("--r", r, "extension degree")->default_val(1);
        cmd->add_option("--l", l, "odd prime l (orders divide 2l^2)")->required();
        cmd->add_option("--cache-dir", cache_dir_flag, "dlog cache directory (or env CYCLOSUM_CACHE)");
    };
    auto add_format_opt = [&](CLI::App* cmd, bool with_csv) {
        auto values = with_csv ? std::vector<std::string>{"text", "json", "csv"}
                               : std::vector<std::string>{"text", "json"};
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember(values));
    };

    CLI::App* compute = app.add_subcommand("compute", "compute one Jacobi sum exactly");
    add_field_opts(compute);
    compute->add_option("--order,-e,--e", order, "character order e | 2l^2")->required();
    compute->add_option("--i", expo_i, "first exponent")->required();
    compute->add_option("--j", expo_j, "second exponent")->required();
    compute->add_flag("--reflected", reflected, "use the (v, 1-v) kernel instead of (v, v+1)");
    add_format_opt(compute, false);

    CLI::App* verify = app.add_subcommand("verify", "verify the order-2l^2 congruences for one field");
    add_field_opts(verify);
    verify->add_flag("--full", full, "also report the order-l^2 congruence per n");
    add_format_opt(verify, true);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify across a range of q");
    sweep_cmd->add_option("--l", sopt.l, "odd prime l")->required();
    sweep_cmd->add_option("--q-min", sopt.q_min, "lower bound (inclusive)")->required();
    sweep_cmd->add_option("--q-max", sopt.q_max, "upper bound (inclusive)")->required();
    sweep_cmd->add_flag("--powers", sopt.include_powers, "include prime powers p^r, r <= 3");
    sweep_cmd->add_option("--jobs", sopt.jobs, "worker threads")->default_val(1);
    sweep_cmd->add_flag("--full", sopt.include_order_l2_cases, "also report the order-l^2 congruence per n");
    sweep_cmd->add_option("--cache-dir", cache_dir_flag, "dlog cache directory (or env CYCLOSUM_CACHE)");
    add_format_opt(sweep_cmd, true);

    CLI::App* props = app.add_subcommand("props", "run the exact-identity suites for one field");
    add_field_opts(props);
    add_format_opt(props, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto cache_dir = resolve_cache_dir(cache_dir_flag);
        if (*compute) return run_compute(p, r, l, order, expo_i, expo_j, reflected, format, cache_dir);
        if (*verify) return run_verify(p, r, l, full, format, cache_dir);
        if (*sweep_cmd) {
            sopt.cache_dir = cache_dir;
            if (sopt.q_min > sopt.q_max) {
                std::cerr << "empty range: q-min " << sopt.q_min << " exceeds q-max " << sopt.q_max << "\n";
                return 2;
            }
            return run_sweep(sopt, format);
        }
        if (*props) return run_props(p, r, l, format, cache_dir);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
