#include "wgcert/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace wgcert {

using nlohmann::json;

namespace {

json rational_or_null(const std::optional<Rational>& r)
{
    return r ? json(r->str()) : json(nullptr);
}

json approx_or_null(const std::optional<Rational>& r)
{
    return r ? json(r->approx_str(15)) : json(nullptr);
}

std::optional<Rational> rational_from(const json& j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    return Rational::parse(j.get<std::string>());
}

template <class T>
json opt_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<T>();
}

std::string opt_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

} // namespace

OutputFormat parse_format(std::string_view name)
{
    if (name == "text") {
        return OutputFormat::text;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (text|csv|json)");
}

json to_json(const BoundCertificate& c)
{
    json checks = json::array();
    for (const auto& chk : c.checks) {
        checks.push_back({{"name", chk.name}, {"passed", chk.passed}, {"detail", chk.detail}});
    }
    return {
        {"k", c.k},
        {"t", c.t},
        {"u", c.u},
        {"Lambda", rational_or_null(c.Lambda)},
        {"Lambda_approx", approx_or_null(c.Lambda)},
        {"k_minus_Lambda", rational_or_null(c.k_minus_Lambda)},
        {"k_minus_Lambda_approx", approx_or_null(c.k_minus_Lambda)},
        {"v", opt_json(c.v)},
        {"eta_star", rational_or_null(c.eta_star)},
        {"eta_star_approx", approx_or_null(c.eta_star)},
        {"h", opt_json(c.h)},
        {"hstar_ratio", rational_or_null(c.hstar_ratio)},
        {"hstar_ratio_approx", approx_or_null(c.hstar_ratio)},
        {"checks", checks},
        {"bound_s", opt_json(c.bound_s)},
        {"valid", c.valid},
    };
}

BoundCertificate certificate_from_json(const json& j)
{
    BoundCertificate c;
    c.k = j.at("k").get<long>();
    c.t = j.at("t").get<long>();
    c.u = j.at("u").get<long>();
    c.Lambda = rational_from(j.at("Lambda"));
    c.k_minus_Lambda = rational_from(j.at("k_minus_Lambda"));
    c.v = opt_from<long>(j.at("v"));
    c.eta_star = rational_from(j.at("eta_star"));
    c.h = opt_from<int>(j.at("h"));
    c.hstar_ratio = rational_from(j.at("hstar_ratio"));
    for (const auto& chk : j.at("checks")) {
        c.checks.push_back({chk.at("name").get<std::string>(), chk.at("passed").get<bool>(),
                            chk.at("detail").get<std::string>()});
    }
    c.bound_s = opt_from<long>(j.at("bound_s"));
    c.valid = j.at("valid").get<bool>();
    return c;
}

json to_json(const SearchResult& r)
{
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        witnesses.push_back({{"t", w.t}, {"u", w.u}, {"v", w.v}, {"h", w.h}});
    }
    return {
        {"k", r.k},
        {"box", {{"t_min", r.box.t_min}, {"t_max", r.box.t_max}, {"u_min", r.box.u_min}, {"u_max", r.box.u_max}}},
        {"best_s", opt_json(r.best_s)},
        {"witnesses", witnesses},
        {"points_scanned", r.points_scanned},
        {"pruned", r.pruned},
        {"valid_points", r.valid_points},
        {"warnings", r.warnings},
    };
}

SearchResult search_result_from_json(const json& j)
{
    SearchResult r;
    r.k = j.at("k").get<long>();
    const json& b = j.at("box");
    r.box = {b.at("t_min").get<long>(), b.at("t_max").get<long>(), b.at("u_min").get<long>(),
             b.at("u_max").get<long>()};
    r.best_s = opt_from<long>(j.at("best_s"));
    for (const auto& w : j.at("witnesses")) {
        r.witnesses.push_back({w.at("t").get<long>(), w.at("u").get<long>(), w.at("v").get<long>(),
                               w.at("h").get<int>()});
    }
    r.points_scanned = j.at("points_scanned").get<std::uint64_t>();
    r.pruned = j.at("pruned").get<std::uint64_t>();
    r.valid_points = j.at("valid_points").get<std::uint64_t>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

json to_json(const VerificationReport& rep)
{
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json cells = json::object();
        for (std::size_t i = 0; i < rep.columns.size() && i < row.cells.size(); ++i) {
            cells[rep.columns[i]] = row.cells[i];
        }
        rows.push_back({{"k", row.k}, {"cells", cells}, {"match", row.match}, {"note", row.note}});
    }
    return {{"title", rep.title}, {"pass", rep.pass}, {"seconds", rep.seconds}, {"rows", rows}};
}

json to_json(const AsymptoticReport& r)
{
    return {
        {"k", r.k},
        {"t_k", r.t_k},
        {"u_k", r.u_k},
        {"gamma_frac", {{"lower", r.gamma_frac.lower().str(25)}, {"upper", r.gamma_frac.upper().str(25)}}},
        {"asymptotic_bound",
         {{"lower", r.asymptotic_bound.lower().str(25)}, {"upper", r.asymptotic_bound.upper().str(25)}}},
        {"certificate", to_json(r.certificate)},
        {"certified_le_asymptotic", r.certified_le_asymptotic},
        {"precision_bits", r.precision_used},
    };
}

json to_json(const SumValue& v)
{
    return {{"re", v.re}, {"im", v.im}, {"modulus", v.modulus()}, {"terms", v.terms}};
}

std::string render(const BoundCertificate& c, OutputFormat fmt)
{
    if (fmt == OutputFormat::json) {
        return to_json(c).dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        os << "k,t,u,Lambda,k_minus_Lambda,v,eta_star,h,hstar_ratio,bound_s,valid,failed\n";
        std::string failed;
        for (const auto& f : c.failures()) {
            failed += (failed.empty() ? "" : "; ") + f;
        }
        os << c.k << "," << c.t << "," << c.u << "," << (c.Lambda ? c.Lambda->str() : "") << ","
           << (c.k_minus_Lambda ? c.k_minus_Lambda->str() : "") << "," << (c.v ? std::to_string(*c.v) : "") << ","
           << (c.eta_star ? c.eta_star->str() : "") << "," << (c.h ? std::to_string(*c.h) : "") << ","
           << (c.hstar_ratio ? c.hstar_ratio->str() : "") << "," << (c.bound_s ? std::to_string(*c.bound_s) : "")
           << "," << (c.valid ? "true" : "false") << "," << csv_escape(failed) << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "certificate k=" << c.k << " t=" << c.t << " u=" << c.u << "\n";
    auto exact = [&](const char* name, const std::optional<Rational>& r) {
        if (r) {
            os << "  " << name << " = " << r->str() << "  (~" << r->approx_str(15) << ", approximate)\n";
        }
    };
    exact("Lambda", c.Lambda);
    exact("k - Lambda", c.k_minus_Lambda);
    if (c.v) {
        os << "  v = " << *c.v << "\n";
    }
    exact("eta*", c.eta_star);
    if (c.h) {
        os << "  h = " << *c.h << "\n";
    }
    exact("2 eta*/sigma_k", c.hstar_ratio);
    os << "  checks:\n";
    for (const auto& chk : c.checks) {
        os << "    [" << (chk.passed ? "pass" : "FAIL") << "] " << chk.name;
        if (!chk.detail.empty()) {
            os << "  (" << chk.detail << ")";
        }
        os << "\n";
    }
    if (c.valid) {
        os << "  H(" << c.k << ") <= " << *c.bound_s << "\n";
    } else {
        os << "  no bound certified";
        if (c.bound_s) {
            os << " (2(t+u+v)+h = " << *c.bound_s << ")";
        }
        os << "\n";
    }
    return os.str();
}

std::string render(const std::vector<SearchResult>& results, OutputFormat fmt)
{
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(to_json(r));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        os << "k,best_s,t,u,v,h,witness_count,points_scanned,pruned\n";
        for (const auto& r : results) {
            if (r.witnesses.empty()) {
                os << r.k << ",,,,,,0," << r.points_scanned << "," << r.pruned << "\n";
                continue;
            }
            const Witness& w = r.witnesses.front();
            os << r.k << "," << *r.best_s << "," << w.t << "," << w.u << "," << w.v << "," << w.h << ","
               << r.witnesses.size() << "," << r.points_scanned << "," << r.pruned << "\n";
        }
        return os.str();
    }
    for (const auto& r : results) {
        os << "k=" << r.k << "  box t in [" << r.box.t_min << "," << r.box.t_max << "], u in [" << r.box.u_min
           << "," << r.box.u_max << "]\n";
        for (const auto& w : r.warnings) {
            os << "  warning: " << w << "\n";
        }
        if (!r.best_s) {
            os << "  " << kNoValidCertificate << "\n";
            continue;
        }
        os << "  best s = " << *r.best_s << "  (" << r.witnesses.size() << " witness"
           << (r.witnesses.size() == 1 ? "" : "es") << ", scanned " << r.points_scanned << ", pruned "
           << r.pruned << ")\n";
        for (const auto& w : r.witnesses) {
            os << "    t=" << w.t << " u=" << w.u << " v=" << w.v << " h=" << w.h << "\n";
        }
    }
    return os.str();
}

std::string render(const VerificationReport& rep, OutputFormat fmt)
{
    if (fmt == OutputFormat::json) {
        return to_json(rep).dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        os << "k";
        for (const auto& c : rep.columns) {
            os << "," << c;
        }
        os << ",match,note\n";
        for (const auto& row : rep.rows) {
            os << row.k;
            for (const auto& cell : row.cells) {
                os << "," << csv_escape(cell);
            }
            os << "," << (row.match ? "true" : "false") << "," << csv_escape(row.note) << "\n";
        }
        return os.str();
    }
    os << rep.title << "\n";
    os << "  k";
    for (const auto& c : rep.columns) {
        os << "  " << c;
    }
    os << "\n";
    for (const auto& row : rep.rows) {
        os << (row.match ? "  ok   " : "  FAIL ") << row.k;
        for (const auto& cell : row.cells) {
            os << "  " << cell;
        }
        if (!row.note.empty()) {
            os << "  # " << row.note;
        }
        os << "\n";
    }
    os << "  " << (rep.pass ? "PASS" : "FAIL") << " (" << fmt_seconds(rep.seconds) << " s)\n";
    return os.str();
}

std::string render(const std::vector<AsymptoticReport>& reps, OutputFormat fmt)
{
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& r : reps) {
            arr.push_back(to_json(r));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        os << "k,t_k,u_k,bound_s,valid,asymptotic_lower,asymptotic_upper,certified_le_asymptotic\n";
        for (const auto& r : reps) {
            os << r.k << "," << r.t_k << "," << r.u_k << "," << opt_text(r.certificate.bound_s) << ","
               << (r.certificate.valid ? "true" : "false") << "," << r.asymptotic_bound.lower().str(12) << ","
               << r.asymptotic_bound.upper().str(12) << "," << (r.certified_le_asymptotic ? "true" : "false")
               << "\n";
        }
        return os.str();
    }
    for (const auto& r : reps) {
        os << "k=" << r.k << "  t_k=" << r.t_k << "  u_k=" << r.u_k << "\n";
        os << "  gamma (fractional gap) in " << r.gamma_frac.str(12) << "\n";
        os << "  certified bound: " << (r.certificate.valid ? opt_text(r.certificate.bound_s) : "none") << " (v="
           << opt_text(r.certificate.v) << ", h=" << (r.certificate.h ? std::to_string(*r.certificate.h) : "-")
           << ")\n";
        os << "  (4k-2) log k - (2 log 2 - 1) k - 3 in " << r.asymptotic_bound.str(12) << "\n";
        os << "  certified <= asymptotic: " << (r.certified_le_asymptotic ? "yes" : "no") << "  ("
           << r.precision_used << " bits)\n";
    }
    return os.str();
}

} // namespace wgcert
