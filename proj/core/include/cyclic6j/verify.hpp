#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic6j/context.hpp"

namespace cyclic6j {

struct SampleResult {
    int index = 0;
    double residual = 0.0;                     // judged against the tolerance
    bool pass = true;
    std::map<std::string, double> parts;       // judged components (residual = max)
    std::map<std::string, double> diagnostics; // informational only
    std::string note;
};

struct VerificationReport {
    std::string relation;
    int N = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::vector<SampleResult> results;
    double max_residual = 0.0;
    bool pass = true;
    std::map<std::string, std::string> info;
};

struct VerifyOptions {
    int samples = 50;
    std::uint64_t seed = 1;
    std::optional<double> tol;  // per-relation default when empty
    int threads = 0;            // 0: hardware concurrency
};

/// Names accepted by run_relation, in report order.
const std::vector<std::string>& relation_names();
bool is_relation(const std::string& name);
double default_tolerance(const std::string& relation);

VerificationReport run_relation(const std::string& relation, int N, const VerifyOptions& opt);
std::vector<VerificationReport> run_all(int N, const VerifyOptions& opt);

std::string report_json(const std::vector<VerificationReport>& reports);
std::string report_text(const std::vector<VerificationReport>& reports);

}  // namespace cyclic6j
