#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclosum/congruence.hpp"

namespace cyclosum::sweep {

struct SweepOptions {
    int l = 3;
    uint32_t q_min = 2;
    uint32_t q_max = 0;
    bool include_powers = false; // prime powers p^r, 2 <= r <= max_power_degree
    int max_power_degree = 3;
    int jobs = 1;
    bool include_order_l2_cases = false;
    std::optional<std::string> cache_dir;
};

struct FieldId {
    uint32_t p = 0;
    int r = 1;
    uint32_t q = 0;
};

/// All q = p^r = 1 (mod 2l^2) in [q_min, q_max]: primes always, prime powers
/// (r <= max_power_degree) when requested. Sorted by q.
inline std::vector<FieldId> enumerate_sweep_fields(const SweepOptions& opt) {
    const uint32_t e = 2u * static_cast<uint32_t>(opt.l) * static_cast<uint32_t>(opt.l);
    std::vector<FieldId> out;
    for (uint64_t q = e + 1; q <= opt.q_max; q += e) {
        if (q < opt.q_min) continue;
        if (ff::detail::is_prime_u32(static_cast<uint32_t>(q)))
            out.push_back({static_cast<uint32_t>(q), 1, static_cast<uint32_t>(q)});
    }
    if (opt.include_powers) {
        for (int r = 2; r <= opt.max_power_degree; ++r) {
            for (uint64_t p = 3;; p += 2) {
                uint64_t q = 1;
                for (int i = 0; i < r; ++i) q *= p;
                if (q > opt.q_max) break;
                if (q < opt.q_min || (q - 1) % e != 0) continue;
                if (ff::detail::is_prime_u32(static_cast<uint32_t>(p)))
                    out.push_back({static_cast<uint32_t>(p), r, static_cast<uint32_t>(q)});
            }
        }
        std::sort(out.begin(), out.end(), [](const FieldId& a, const FieldId& b) { return a.q < b.q; });
    }
    return out;
}

inline std::string cache_file_name(const ff::FieldSpec& f) {
    return "dlog_q" + std::to_string(f.q) + "_g" + std::to_string(f.gamma.code) + ".txt";
}

/// Load the dlog table from cache_dir if a valid cache exists; otherwise
/// build it and (best effort) write the cache back.
inline ff::IndexTable load_or_build_table(const ff::FieldSpec& f, const std::optional<std::string>& cache_dir) {
    if (!cache_dir) return ff::build_index_table(f);
    const std::filesystem::path path = std::filesystem::path(*cache_dir) / cache_file_name(f);
    if (std::ifstream is{path}) {
        try {
            return ff::load_index_table(is, f);
        } catch (const CacheMismatch&) {
            // stale or foreign cache: rebuild below
        }
    }
    ff::IndexTable t = ff::build_index_table(f);
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    if (std::ofstream os{path}) ff::save_index_table(os, f, t);
    return t;
}

/// One verified field of a sweep.
struct SweepRow {
    FieldId id;
    congruence::CongruenceReport report;

    /// Minimum achieved valuation over all cases ("cap" if every case capped).
    std::string min_achieved() const {
        int best = -1;
        bool any_exact_value = false;
        for (const auto& c : report.cases) {
            if (c.achieved.at_least_cap) continue;
            if (!any_exact_value || c.achieved.value < best) best = c.achieved.value;
            any_exact_value = true;
        }
        return any_exact_value ? std::to_string(best) : "cap";
    }
};

/// Verify every enumerated field, optionally on `jobs` worker threads.
/// Output order (and content) is by ascending q regardless of job count.
inline std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
    const std::vector<FieldId> fields = enumerate_sweep_fields(opt);
    std::vector<SweepRow> rows(fields.size());
    if (fields.empty()) return rows;

    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= fields.size()) return;
            try {
                auto ctx = [&] {
                    ff::FieldSpec f = ff::make_field(fields[i].p, fields[i].r, opt.l);
                    ff::IndexTable t = load_or_build_table(f, opt.cache_dir);
                    return congruence::VerificationContext(std::move(f), std::move(t));
                }();
                rows[i] = SweepRow{fields[i], congruence::verify_order_2l2(ctx, opt.include_order_l2_cases)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const size_t jobs = std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(std::max(opt.jobs, 1)), fields.size()));
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (size_t i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

} // namespace cyclosum::sweep
