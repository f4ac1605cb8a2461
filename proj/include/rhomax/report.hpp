#pragma once

#include <string>

#include "rhomax/bounds.hpp"
#include "rhomax/enumerate.hpp"
#include "rhomax/spectral.hpp"

namespace rhomax {

inline constexpr const char* kSchemaVersion = "1";

struct RunConfig {
    double tolerance = 1e-12;
    long max_iter = 1'000'000;
    int jobs = 1;
    enum class Format { json, csv, text } format = Format::json;
    bool long_running = false;

    /// Throws std::invalid_argument unless tolerance is in (0, 1e-3] and
    /// jobs >= 1.
    void validate() const;

    PerronOptions perron() const { return {tolerance, max_iter}; }
    SweepOptions sweep() const { return {perron(), 1e-9, jobs, long_running}; }
};

/// All report numbers are rounded to 15 significant digits before
/// serialization, so reports are byte-stable across runs at fixed config.
double report_round(double x);

std::string to_json(const SpectralResult& r);
std::string to_json(const BoundTrace& t);
std::string to_json(const VerificationReport& r);
std::string to_json(const BruteResult& r);
std::string to_json(const std::vector<Theorem16Row>& rows);
std::string to_json(const Theorem15Record& r);

std::string verification_csv_header();
std::string to_csv_row(const VerificationReport& r);

}  // namespace rhomax
