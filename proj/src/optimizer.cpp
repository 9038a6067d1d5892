#include "wgcert/optimizer.hpp"

#include "wgcert/exponents.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <exception>
#include <thread>

namespace wgcert {

namespace {

long certified_ceil_klogk(long k, long numerator)
{
    // ceil(numerator * k log k)
    const BigInt c = with_precision_escalation(
        [&](Precision prec) { return hp_log(static_cast<unsigned long>(k), prec).scaled(Rational(numerator * k)).certified_ceil(); },
        "default search box at k=" + std::to_string(k));
    return c.get_si();
}

struct RowResult {
    std::optional<long> best;
    std::vector<Witness> optima;
    std::uint64_t scanned = 0;
    std::uint64_t pruned = 0;
    std::uint64_t valid = 0;
};

RowResult scan_row(const ExponentLadder& ladder, long t, const SearchBox& box)
{
    RowResult row;
    const long k = ladder.k();
    for (long u = box.u_min; u <= box.u_max; ++u) {
        if (row.best && 2 * (t + u) + 1 > *row.best) {
            row.pruned += static_cast<std::uint64_t>(box.u_max - u + 1);
            break;
        }
        ++row.scanned;
        const BoundCertificate c = certify_with_lambda(k, t, u, ladder.Lambda(t, u));
        if (c.k_minus_Lambda->sign() < 0) {
            row.pruned += static_cast<std::uint64_t>(box.u_max - u);
            break;
        }
        if (!c.valid) {
            continue;
        }
        if (!satisfies_side_conditions(c)) {
            throw std::logic_error("valid certificate violates side conditions at (k,t,u)=(" + std::to_string(k) +
                                   "," + std::to_string(t) + "," + std::to_string(u) + ")");
        }
        ++row.valid;
        const long s = *c.bound_s;
        const Witness w{t, u, *c.v, *c.h};
        if (!row.best || s < *row.best) {
            row.best = s;
            row.optima.assign(1, w);
        } else if (s == *row.best) {
            row.optima.push_back(w);
        }
    }
    return row;
}

template <class RowFn>
std::vector<RowResult> run_rows(const SearchBox& box, const SearchConfig& cfg, RowFn&& fn)
{
    const auto rows = static_cast<std::size_t>(box.t_max - box.t_min + 1);
    std::vector<RowResult> out(rows);
    unsigned jobs = 1;
    if (cfg.parallel) {
        jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
        jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, rows));
    }
    if (jobs <= 1) {
        for (std::size_t i = 0; i < rows; ++i) {
            out[i] = fn(box.t_min + static_cast<long>(i));
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < rows && !failed; i = next++) {
                try {
                    out[i] = fn(box.t_min + static_cast<long>(i));
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace

SearchBox resolve_box(long k, const SearchConfig& cfg)
{
    if (k < 4) {
        throw std::invalid_argument("search requires k >= 4, got k=" + std::to_string(k));
    }
    SearchBox b;
    b.t_min = cfg.t_min.value_or(t_threshold(k));
    b.t_max = cfg.t_max ? *cfg.t_max : certified_ceil_klogk(k, 2);
    b.u_min = cfg.u_min.value_or(1);
    b.u_max = cfg.u_max ? *cfg.u_max : certified_ceil_klogk(k, 3);
    if (b.t_min < t_threshold(k)) {
        throw std::invalid_argument("t_min=" + std::to_string(b.t_min) + " violates t >= floor((k+3)/2) = " +
                                    std::to_string(t_threshold(k)));
    }
    if (b.u_min < 1) {
        throw std::invalid_argument("u_min must be >= 1");
    }
    if (b.t_max < b.t_min || b.u_max < b.u_min) {
        throw std::invalid_argument("empty search box: t in [" + std::to_string(b.t_min) + "," +
                                    std::to_string(b.t_max) + "], u in [" + std::to_string(b.u_min) + "," +
                                    std::to_string(b.u_max) + "]");
    }
    return b;
}

SearchResult optimize(long k, const SearchConfig& cfg)
{
    SearchResult res;
    res.k = k;
    res.box = resolve_box(k, cfg);
    if (k < 7) {
        res.warnings.emplace_back("k < 7 is covered by earlier bounds; searching anyway");
    }

    ExponentLadder ladder(k);
    ladder.reserve(res.box.t_max, res.box.u_max);

    const auto rows = run_rows(res.box, cfg, [&](long t) { return scan_row(ladder, t, res.box); });

    for (const RowResult& row : rows) {
        res.points_scanned += row.scanned;
        res.pruned += row.pruned;
        res.valid_points += row.valid;
        if (!row.best) {
            continue;
        }
        if (!res.best_s || *row.best < *res.best_s) {
            res.best_s = row.best;
            res.witnesses = row.optima;
        } else if (*row.best == *res.best_s) {
            res.witnesses.insert(res.witnesses.end(), row.optima.begin(), row.optima.end());
        }
    }
    std::sort(res.witnesses.begin(), res.witnesses.end(), [](const Witness& a, const Witness& b) {
        return std::pair{a.t + a.u, a.t} < std::pair{b.t + b.u, b.t};
    });
    if (!cfg.report_all_optima && res.witnesses.size() > 1) {
        res.witnesses.resize(1);
    }
    if (!res.best_s) {
        res.warnings.emplace_back(kNoValidCertificate);
    }
    return res;
}

std::vector<SearchResult> sweep(long k_lo, long k_hi, const SearchConfig& cfg)
{
    if (k_hi < k_lo) {
        throw std::invalid_argument("empty k range");
    }
    std::vector<SearchResult> out;
    for (long k = k_lo; k <= k_hi; ++k) {
        out.push_back(optimize(k, cfg));
    }
    return out;
}

std::vector<BoundCertificate> scan_valid_points(long k, const SearchConfig& cfg)
{
    const SearchBox box = resolve_box(k, cfg);
    ExponentLadder ladder(k);
    ladder.reserve(box.t_max, box.u_max);
    std::vector<BoundCertificate> out;
    for (long t = box.t_min; t <= box.t_max; ++t) {
        for (long u = box.u_min; u <= box.u_max; ++u) {
            BoundCertificate c = certify_with_lambda(k, t, u, ladder.Lambda(t, u));
            if (c.valid) {
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

} // namespace wgcert
