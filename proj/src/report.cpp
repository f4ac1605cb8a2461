#include "rhomax/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rhomax {

using ordered_json = nlohmann::ordered_json;

void RunConfig::validate() const {
    if (!(tolerance > 0.0 && tolerance <= 1e-3))
        throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (max_iter < 1) throw std::invalid_argument("max-iter must be at least 1");
}

double report_round(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

namespace {

ordered_json rounded(const std::vector<double>& xs) {
    ordered_json arr = ordered_json::array();
    for (double x : xs) arr.push_back(report_round(x));
    return arr;
}

ordered_json canonical_json(const CanonicalForm& c) {
    ordered_json j;
    j["n"] = c.n;
    j["m"] = c.m;
    j["text"] = to_text(c);
    return j;
}

ordered_json verification_json(const VerificationReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["e"] = r.e;
    j["k"] = r.k;
    j["t"] = r.t;
    j["case"] = r.case_label;
    j["n_candidates"] = r.n_candidates;
    j["rho_max"] = report_round(r.rho_max);
    j["dsharp_rho"] = report_round(r.dsharp_rho);
    j["dsharp_in_dss"] = r.dsharp_in_dss;
    j["conjecture_holds"] = r.conjecture_holds;
    ordered_json arg = ordered_json::array();
    for (const auto& c : r.argmax) arg.push_back(canonical_json(c));
    j["argmax"] = arg;
    j["elapsed_ms"] = report_round(r.elapsed_ms);
    return j;
}

}  // namespace

std::string to_json(const SpectralResult& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["rho"] = report_round(r.rho);
    j["right"] = rounded(r.right);
    j["left"] = rounded(r.left);
    j["residual"] = report_round(r.residual);
    j["iterations"] = r.iterations;
    j["reducible"] = r.reducible;
    return j.dump(2);
}

std::string to_json(const BoundTrace& t) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["e"] = t.e;
    j["n"] = t.n;
    j["w"] = t.w;
    j["k"] = t.k;
    j["t"] = t.t;
    j["rho"] = report_round(t.rho);
    j["dss_member"] = t.dss_member;
    ordered_json entries = ordered_json::array();
    for (const auto& en : t.entries) {
        ordered_json e;
        e["name"] = en.name;
        e["value"] = report_round(en.value);
        e["slack"] = report_round(en.slack);
        entries.push_back(e);
    }
    j["bounds"] = entries;
    return j.dump(2);
}

std::string to_json(const VerificationReport& r) { return verification_json(r).dump(2); }

std::string to_json(const BruteResult& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["rho_max"] = report_round(r.rho_max);
    j["searched"] = r.searched;
    ordered_json arg = ordered_json::array();
    for (const auto& d : r.argmax) arg.push_back(to_text(d));
    j["argmax"] = arg;
    return j.dump(2);
}

std::string to_json(const std::vector<Theorem16Row>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["k"] = r.k;
        j["t"] = r.t;
        j["e"] = r.e;
        j["case"] = r.case_id;
        j["closed_form"] = report_round(r.closed_form);
        j["extremal_rho"] = report_round(r.extremal_rho);
        j["extremal_ok"] = r.extremal_ok;
        j["sweep_ran"] = r.sweep_ran;
        if (r.sweep_ran) j["sweep_max"] = report_round(r.sweep_max);
        j["pass"] = r.pass;
        arr.push_back(j);
    }
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["rows"] = arr;
    return j.dump(2);
}

std::string to_json(const Theorem15Record& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["e"] = r.e;
    j["k"] = r.k;
    j["t"] = r.t;
    j["mode"] = r.mode;
    j["dsharp_rho"] = report_round(r.dsharp_rho);
    if (r.mode == "bound-chain") {
        ordered_json bounds = ordered_json::array();
        for (double b : r.bound_values) bounds.push_back(report_round(b));
        j["inequality3_bounds"] = bounds;
        j["k_minus_1"] = r.k - 1;
    } else {
        j["sweep"] = ordered_json::parse(to_json(r.sweep));
    }
    j["pass"] = r.pass;
    return j.dump(2);
}

std::string verification_csv_header() {
    return "e,k,t,n_candidates,rho_max,dsharp_rho,conjecture_holds,elapsed_ms";
}

std::string to_csv_row(const VerificationReport& r) {
    std::ostringstream out;
    char buf[64];
    out << r.e << ',' << r.k << ',' << r.t << ',' << r.n_candidates << ',';
    std::snprintf(buf, sizeof buf, "%.15g", r.rho_max);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.15g", r.dsharp_rho);
    out << buf << ',' << (r.conjecture_holds ? "true" : "false") << ',';
    std::snprintf(buf, sizeof buf, "%.15g", r.elapsed_ms);
    out << buf;
    return out.str();
}

}  // namespace rhomax
