// wgcert: command-line front end.
//
// Exit codes: 0 success (certificate valid, tables match), 2 a well-formed
// request whose answer is negative (invalid certificate, empty search box,
// table mismatch), 1 usage or runtime error.

#include "wgcert/certifier.hpp"
#include "wgcert/expsum.hpp"
#include "wgcert/optimizer.hpp"
#include "wgcert/render.hpp"
#include "wgcert/simd/phase_kernels.hpp"
#include "wgcert/tables.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

// "7" or "7..20", inclusive on both ends.
std::pair<long, long> parse_k_range(const std::string& text)
{
    const auto dots = text.find("..");
    auto as_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) {
            throw std::invalid_argument("bad k or k-range '" + text + "' (expected N or A..B)");
        }
        return v;
    };
    if (dots == std::string::npos) {
        const long k = as_long(text);
        return {k, k};
    }
    const long lo = as_long(text.substr(0, dots));
    const long hi = as_long(text.substr(dots + 2));
    if (lo > hi) {
        throw std::invalid_argument("empty k-range '" + text + "'");
    }
    return {lo, hi};
}

std::string fmt_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void print_sum(const std::string& label, const wgcert::SumValue& v, wgcert::OutputFormat fmt)
{
    using wgcert::OutputFormat;
    if (fmt == OutputFormat::json) {
        auto j = wgcert::to_json(v);
        j["kernel"] = wgcert::simd::isa_name(wgcert::simd::active_isa());
        std::cout << j.dump(2) << "\n";
    } else if (fmt == OutputFormat::csv) {
        std::cout << "re,im,abs,terms\n"
                  << fmt_double(v.re) << "," << fmt_double(v.im) << "," << fmt_double(v.modulus()) << ","
                  << v.terms << "\n";
    } else {
        std::cout << label << " = " << fmt_double(v.re) << (v.im < 0 ? " - " : " + ") << fmt_double(std::abs(v.im))
                  << "i\n"
                  << "|" << label << "| = " << fmt_double(v.modulus()) << "\n"
                  << "terms = " << v.terms << "\n"
                  << "kernel = " << wgcert::simd::isa_name(wgcert::simd::active_isa()) << " (double precision)\n";
    }
}

void select_isa(const std::string& name)
{
    using wgcert::simd::Isa;
    if (name == "auto") {
        wgcert::simd::set_active_isa(wgcert::simd::detected_isa());
    } else if (name == "scalar") {
        wgcert::simd::set_active_isa(Isa::scalar);
    } else if (name == "avx2") {
        wgcert::simd::set_active_isa(Isa::avx2);
    } else {
        throw std::invalid_argument("unknown --isa '" + name + "' (auto, scalar, avx2)");
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certify, search and cross-check upper bounds for H(k), and evaluate Weyl sums"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // certify
    long c_k = 0;
    long c_t = 0;
    long c_u = 0;
    auto* certify_cmd = app.add_subcommand("certify", "Certify the bound s(k, t, u) for one parameter triple");
    certify_cmd->add_option("--k", c_k, "Degree k")->required();
    certify_cmd->add_option("--t", c_t, "Parameter t")->required();
    certify_cmd->add_option("--u", c_u, "Parameter u")->required();

    // optimize
    std::string o_k;
    std::optional<long> o_tmin, o_tmax, o_umin, o_umax;
    bool o_all = false;
    unsigned o_jobs = 0;
    auto* optimize_cmd = app.add_subcommand("optimize", "Search (t, u) for the least certified bound");
    optimize_cmd->add_option("--k", o_k, "Degree k or an inclusive range A..B")->required();
    optimize_cmd->add_option("--t-min", o_tmin, "Lower t bound (default floor((k+3)/2))");
    optimize_cmd->add_option("--t-max", o_tmax, "Upper t bound (default ceil(2k log k))");
    optimize_cmd->add_option("--u-min", o_umin, "Lower u bound (default 1)");
    optimize_cmd->add_option("--u-max", o_umax, "Upper u bound (default ceil(3k log k))");
    optimize_cmd->add_flag("--all-optima", o_all, "List every (t, u) achieving the optimum");
    optimize_cmd->add_option("--jobs", o_jobs, "Worker threads; 0 uses every core, 1 runs serially");

    // verify-tables
    auto* verify_cmd = app.add_subcommand("verify-tables", "Recompute the embedded reference tables");

    // asymptotic
    std::string a_k;
    long a_prec = 0;
    auto* asym_cmd = app.add_subcommand("asymptotic", "Large-k schedule and comparison with the closed-form bound");
    asym_cmd->add_option("--k", a_k, "Degree k or an inclusive range A..B")->required();
    asym_cmd->add_option("--precision", a_prec, "Starting precision in bits (default from WGCERT_PRECISION)")
        ->check(CLI::Range(64L, static_cast<long>(wgcert::kPrecisionCap)));

    // expsum
    auto* expsum_cmd = app.add_subcommand("expsum", "Weyl sums and the major-arc weight (exploratory)");
    expsum_cmd->require_subcommand(1);
    std::string e_isa = "auto";
    expsum_cmd->add_option("--isa", e_isa, "Phase kernel: auto, scalar or avx2");
    long e_k = 0;
    std::string e_alpha;
    std::uint64_t e_x = 0;
    unsigned e_jobs = 1;
    std::uint64_t e_q = 0;
    long e_qmax = 0;

    auto add_sum_options = [&](CLI::App* cmd) {
        cmd->add_option("--k", e_k, "Exponent k")->required();
        cmd->add_option("--alpha", e_alpha, "alpha as a/q or a/q+beta (beta decimal or binary-exponent)")
            ->required();
        cmd->add_option("--x", e_x, "Length X of the interval (X, 2X]")->required();
        cmd->add_option("--jobs", e_jobs, "Worker threads (result is independent of this)");
    };
    auto* f_cmd = expsum_cmd->add_subcommand("f", "Sum of e(alpha x^k) over integers X < x <= 2X");
    add_sum_options(f_cmd);
    auto* g_cmd = expsum_cmd->add_subcommand("g", "Sum of e(alpha p^k) over primes X < p <= 2X");
    add_sum_options(g_cmd);
    auto* w_cmd = expsum_cmd->add_subcommand("w", "Multiplicative weight w_k(q)");
    w_cmd->add_option("--k", e_k, "Exponent k")->required();
    w_cmd->add_option("--q", e_q, "Modulus q")->required();
    auto* scan_cmd = expsum_cmd->add_subcommand("scan", "|f(a/q)| against w_k(q) X over reduced fractions");
    scan_cmd->add_option("--k", e_k, "Exponent k")->required();
    scan_cmd->add_option("--x", e_x, "Length X")->required();
    scan_cmd->add_option("--q-max", e_qmax, "Largest denominator")->required();
    scan_cmd->add_option("--jobs", e_jobs, "Worker threads");

    // export-tables
    auto* export_cmd = app.add_subcommand("export-tables", "Print the embedded reference tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const wgcert::OutputFormat fmt = wgcert::parse_format(format_name);

        if (certify_cmd->parsed()) {
            const auto cert = wgcert::certify(c_k, c_t, c_u);
            std::cout << wgcert::render(cert, fmt);
            return cert.valid ? kExitOk : kExitNegative;
        }

        if (optimize_cmd->parsed()) {
            const auto [lo, hi] = parse_k_range(o_k);
            wgcert::SearchConfig cfg;
            cfg.t_min = o_tmin;
            cfg.t_max = o_tmax;
            cfg.u_min = o_umin;
            cfg.u_max = o_umax;
            cfg.report_all_optima = o_all;
            cfg.parallel = o_jobs != 1;
            cfg.jobs = o_jobs;
            const auto results = wgcert::sweep(lo, hi, cfg);
            std::cout << wgcert::render(results, fmt);
            for (const auto& r : results) {
                if (!r.best_s) {
                    std::cerr << "k=" << r.k << ": " << wgcert::kNoValidCertificate << "\n";
                    return kExitNegative;
                }
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const wgcert::VerificationReport reps[] = {wgcert::verify_table2_and_1(), wgcert::verify_table3(),
                                                       wgcert::verify_improvement_over_prior()};
            bool pass = true;
            if (fmt == wgcert::OutputFormat::json) {
                nlohmann::json all = nlohmann::json::array();
                for (const auto& r : reps) {
                    all.push_back(wgcert::to_json(r));
                    pass = pass && r.pass;
                }
                std::cout << all.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < std::size(reps); ++i) {
                    if (i) {
                        std::cout << "\n";
                    }
                    std::cout << wgcert::render(reps[i], fmt);
                    pass = pass && reps[i].pass;
                }
                if (fmt == wgcert::OutputFormat::text) {
                    std::cout << "\noverall: " << (pass ? "PASS" : "FAIL") << "\n";
                }
            }
            return pass ? kExitOk : kExitNegative;
        }

        if (asym_cmd->parsed()) {
            const auto [lo, hi] = parse_k_range(a_k);
            const wgcert::Precision start = a_prec ? a_prec : wgcert::default_precision();
            std::vector<wgcert::AsymptoticReport> reps;
            for (long k = lo; k <= hi; ++k) {
                reps.push_back(wgcert::theorem1_report(k, start));
            }
            std::cout << wgcert::render(reps, fmt);
            return kExitOk;
        }

        if (expsum_cmd->parsed()) {
            select_isa(e_isa);
            const wgcert::SumOptions opt{e_jobs};
            if (f_cmd->parsed()) {
                print_sum("f", wgcert::weyl_sum(e_k, wgcert::parse_alpha(e_alpha), e_x, opt), fmt);
            } else if (g_cmd->parsed()) {
                print_sum("g", wgcert::prime_weyl_sum(e_k, wgcert::parse_alpha(e_alpha), e_x, opt), fmt);
            } else if (w_cmd->parsed()) {
                const double w = wgcert::w_weight(e_k, e_q);
                if (fmt == wgcert::OutputFormat::json) {
                    std::cout << nlohmann::json{{"k", e_k}, {"q", e_q}, {"w", w}}.dump(2) << "\n";
                } else if (fmt == wgcert::OutputFormat::csv) {
                    std::cout << "k,q,w\n" << e_k << "," << e_q << "," << fmt_double(w) << "\n";
                } else {
                    std::cout << "w_" << e_k << "(" << e_q << ") = " << fmt_double(w) << "\n";
                }
            } else if (scan_cmd->parsed()) {
                const auto scan = wgcert::major_arc_scan(e_k, e_x, e_qmax, opt);
                if (fmt == wgcert::OutputFormat::json) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (const auto& r : scan.rows) {
                        rows.push_back({{"a", r.a}, {"q", r.q}, {"abs_f", r.abs_f}, {"w_q_X", r.prediction},
                                        {"ratio", r.ratio}});
                    }
                    std::cout << nlohmann::json{{"k", scan.k}, {"X", scan.X}, {"q_max", scan.q_max},
                                                {"notes", scan.notes}, {"rows", rows}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << wgcert::arc_scan_csv(scan);
                }
            }
            return kExitOk;
        }

        if (export_cmd->parsed()) {
            const auto& t = wgcert::reference_tables();
            if (fmt == wgcert::OutputFormat::json) {
                nlohmann::json j;
                for (const auto& [k, s] : t.table1) {
                    j["table1"][std::to_string(k)] = s;
                }
                for (const auto& [k, p] : t.table2) {
                    j["table2"][std::to_string(k)] = {{"t", p.t}, {"u", p.u}, {"v", p.v}, {"h", p.h}};
                }
                for (const auto& [k, h] : t.table3) {
                    j["table3"][std::to_string(k)] = h;
                }
                for (const auto& [k, b] : t.small_k_bounds) {
                    j["small_k_bounds"][std::to_string(k)] = b;
                }
                for (const auto& [k, b] : t.prior_bounds) {
                    j["prior_bounds"][std::to_string(k)] = b;
                }
                j["checksum"] = wgcert::tables_checksum(t);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << wgcert::tables_csv(t);
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
