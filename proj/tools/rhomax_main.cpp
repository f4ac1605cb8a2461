// rhomax: compute, bound and certify the maximum spectral radius of simple
// digraphs with a prescribed number of arcs.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rhomax/bounds.hpp"
#include "rhomax/enumerate.hpp"
#include "rhomax/extremal.hpp"
#include "rhomax/report.hpp"
#include "rhomax/spectral.hpp"

namespace {

using rhomax::RunConfig;
using ordered_json = nlohmann::ordered_json;

struct Output {
    std::string path;  // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw std::invalid_argument("cannot open output file: " + path);
            out << text;
            if (text.empty() || text.back() != '\n') out << '\n';
        }
    }
};

rhomax::Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open digraph file: " + path);
    return rhomax::parse_digraph(in);
}

std::pair<long long, long long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("bad range (want A..B): " + text);
    long long a = std::stoll(text.substr(0, dots));
    long long b = std::stoll(text.substr(dots + 2));
    if (a > b) throw std::invalid_argument("bad range (want A <= B): " + text);
    return {a, b};
}

int run(int argc, char** argv) {
    CLI::App app{"maximum spectral radius of simple digraphs with e arcs"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--tol", cfg.tolerance, "power iteration tolerance")->capture_default_str();
    app.add_option("--max-iter", cfg.max_iter, "power iteration cap")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "parallel sweep workers")->capture_default_str();
    app.add_flag("--long-running", cfg.long_running, "allow sweeps with e > 40");

    // dsharp
    auto* dsharp = app.add_subcommand("dsharp", "construct the extremal digraph D#");
    long long dsharp_e = 0;
    std::string emit = "both";
    Output dsharp_out;
    dsharp->add_option("--arcs", dsharp_e, "arc count e")->required();
    dsharp->add_option("--emit", emit, "digraph|rho|both")->capture_default_str();
    dsharp->add_option("--out", dsharp_out.path, "write to file instead of stdout");

    // rho
    auto* rho = app.add_subcommand("rho", "spectral radius and Perron pair of a digraph");
    std::string rho_file;
    Output rho_out;
    rho->add_option("--digraph", rho_file, "digraph file (\"n e\" then arc lines)")->required();
    rho->add_option("--out", rho_out.path, "write to file instead of stdout");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "audit every applicable upper bound");
    std::string bounds_file, bounds_family;
    long long bounds_e = 0;
    Output bounds_out;
    bounds->add_option("--digraph", bounds_file, "digraph file");
    bounds->add_option("--arcs", bounds_e, "arc count (with --family)");
    bounds->add_option("--family", bounds_family, "named family: dsharp");
    bounds->add_option("--out", bounds_out.path, "write to file instead of stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "canonical members of D**(e)");
    long long enum_e = 0;
    Output enum_out;
    enumerate->add_option("--arcs", enum_e, "arc count e")->required();
    enumerate->add_option("--out", enum_out.path, "write to file instead of stdout");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force max over all digraphs (n, e)");
    long long oracle_e = 0;
    int oracle_n = 0;
    Output oracle_out;
    oracle->add_option("--arcs", oracle_e, "arc count e")->required();
    oracle->add_option("--vertices", oracle_n, "vertex count n")->required();
    oracle->add_option("--out", oracle_out.path, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "verification sweeps and theorem checks");
    long long verify_e = 0;
    std::string verify_mode = "conjecture";
    std::string verify_range;
    int verify_kmax = 4;
    Output verify_out;
    verify->add_option("--arcs", verify_e, "arc count e");
    verify->add_option("--mode", verify_mode, "conjecture|theorem16|theorem15|oracle")
        ->capture_default_str();
    verify->add_option("--range", verify_range, "batch sweep A..B, CSV output");
    verify->add_option("--kmax", verify_kmax, "largest k for theorem16 mode")
        ->capture_default_str();
    verify->add_option("--out", verify_out.path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.validate();

    if (dsharp->parsed()) {
        if (emit != "digraph" && emit != "rho" && emit != "both")
            throw std::invalid_argument("--emit must be digraph, rho or both");
        rhomax::Digraph d = rhomax::build_dsharp(dsharp_e);
        std::ostringstream text;
        if (emit == "digraph" || emit == "both") text << rhomax::to_text(d);
        if (emit == "rho" || emit == "both") {
            auto spec = rhomax::dsharp_spec(dsharp_e);
            ordered_json j;
            j["schema_version"] = rhomax::kSchemaVersion;
            j["e"] = spec.e;
            j["k"] = spec.k;
            j["t"] = spec.t;
            j["rho"] = rhomax::report_round(rhomax::rho_dsharp(dsharp_e, cfg.perron()));
            text << j.dump(2) << '\n';
        }
        dsharp_out.emit(text.str());
        return 0;
    }

    if (rho->parsed()) {
        rhomax::Digraph d = load_digraph(rho_file);
        rho_out.emit(rhomax::to_json(rhomax::spectral_radius(d, cfg.perron())));
        return 0;
    }

    if (bounds->parsed()) {
        rhomax::Digraph d;
        if (!bounds_file.empty()) {
            d = load_digraph(bounds_file);
        } else if (bounds_family == "dsharp" && bounds_e > 0) {
            d = rhomax::build_dsharp(bounds_e);
        } else {
            throw std::invalid_argument("bounds needs --digraph FILE or --arcs E --family dsharp");
        }
        bounds_out.emit(rhomax::to_json(rhomax::bound_trace(d, cfg.perron())));
        return 0;
    }

    if (enumerate->parsed()) {
        std::ostringstream text;
        rhomax::enumerate_dss(enum_e, [&](const rhomax::CanonicalForm& c, const rhomax::Digraph&) {
            text << rhomax::to_text(c) << '\n';
        });
        enum_out.emit(text.str());
        return 0;
    }

    if (oracle->parsed()) {
        oracle_out.emit(rhomax::to_json(rhomax::brute_max_rho(oracle_e, oracle_n, cfg.sweep())));
        return 0;
    }

    if (verify->parsed()) {
        if (!verify_range.empty()) {
            auto [a, b] = parse_range(verify_range);
            std::ostringstream text;
            text << rhomax::verification_csv_header() << '\n';
            for (long long e = a; e <= b; ++e)
                text << rhomax::to_csv_row(rhomax::verify_conjecture(e, cfg.sweep())) << '\n';
            verify_out.emit(text.str());
            return 0;
        }
        if (verify_mode == "theorem16") {
            verify_out.emit(rhomax::to_json(rhomax::verify_theorem16(verify_kmax, cfg.sweep())));
            return 0;
        }
        if (verify_e <= 0) throw std::invalid_argument("verify needs --arcs E or --range A..B");
        if (verify_mode == "conjecture") {
            verify_out.emit(rhomax::to_json(rhomax::verify_conjecture(verify_e, cfg.sweep())));
        } else if (verify_mode == "theorem15") {
            verify_out.emit(rhomax::to_json(rhomax::verify_theorem15(verify_e, cfg.sweep())));
        } else if (verify_mode == "oracle") {
            // compare the D** sweep against the exhaustive oracle on every
            // vertex count the budget allows
            rhomax::VerificationReport rep = rhomax::verify_conjecture(verify_e, cfg.sweep());
            double brute_best = 0.0;
            long long searched = 0;
            for (int n = 2; n <= std::min<long long>(verify_e, 5); ++n) {
                if (static_cast<long long>(n) * (n - 1) < verify_e) continue;
                rhomax::BruteResult br = rhomax::brute_max_rho(verify_e, n, cfg.sweep());
                brute_best = std::max(brute_best, br.rho_max);
                searched += br.searched;
            }
            ordered_json j;
            j["schema_version"] = rhomax::kSchemaVersion;
            j["e"] = rep.e;
            j["t"] = rep.t;
            j["sweep_max"] = rhomax::report_round(rep.rho_max);
            j["brute_max"] = rhomax::report_round(brute_best);
            j["searched"] = searched;
            j["agree"] = rep.t != 1 ? std::abs(rep.rho_max - brute_best) <= 1e-9 : true;
            verify_out.emit(j.dump(2));
        } else {
            throw std::invalid_argument("unknown verify mode: " + verify_mode);
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
