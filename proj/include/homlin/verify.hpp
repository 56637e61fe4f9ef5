#pragma once

#include <string>
#include <vector>

#include "homlin/common.hpp"

namespace homlin {

struct VerifyOptions {
    bool force = false; // include the expensive optional items
    int jobs = 1;       // parallel suites in run_all_suites
    int trunc = 6;      // series truncation order
};

struct VerifyItem {
    std::string identity; // which equation/theorem instance
    std::string params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    int criterion = 0; // acceptance criterion number; 0 = supporting check
    double ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::string bounds;
    std::vector<VerifyItem> items;
    bool pass = true;
    double total_ms = 0.0;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite (ParameterError for unknown names).
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt = {});

/// Runs every suite; deterministic report order regardless of jobs.
std::vector<VerificationReport> run_all_suites(const VerifyOptions& opt = {});

} // namespace homlin
