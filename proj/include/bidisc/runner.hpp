#pragma once

// Check execution and reporting.  Rows come out in scenario order no matter
// how many jobs run; the stable flag zeroes the elapsed-time column so two
// runs of one scenario are byte-identical.

#include <optional>
#include <string>
#include <vector>

#include "bidisc/scenario.hpp"

namespace bidisc {

struct RunOptions {
    std::optional<int> cap;      // flag overrides of scenario fields
    std::optional<double> tol;
    std::optional<int> samples;
    std::string format = "csv";  // "csv" | "jsonl"
    bool stable = false;
    int jobs = 1;
};

struct ReportRow {
    std::string scenario;
    std::string check;
    std::string object;
    bool passed = false;
    double worst_value = 0.0;
    long worst_index = 0;
    double tol = 0.0;
    int cap = 0;
    long elapsed_ms = 0;
};

struct RunResult {
    std::vector<ReportRow> rows;
    int exit_code = 0;  // 0 all passed, 1 some check failed
};

RunResult run_scenario(const Scenario& s, const RunOptions& opt);

/// Re-runs one subspace check at each cap and appends a monotonicity verdict
/// row (residuals non-increasing up to 10% slack).
RunResult run_convergence(const Scenario& s, const std::string& subspace,
                          const std::vector<int>& caps, const std::string& check,
                          const RunOptions& opt);

struct OracleRow {
    int k = 0;
    Complex radial;     // radial-sum coefficient extracted against w^k
    Complex corrected;  // (j+1)-weighted criterion sum
    Complex paper;      // literal printed weight j
    Complex gram;       // ambient <T_z^k q, q>
    bool radial_eq_corrected = false;
    bool corrected_eq_gram = false;
    bool paper_weight_agrees = false;
};

struct OracleResult {
    std::vector<OracleRow> rows;
    int exit_code = 0;  // 1 if the three equivalent columns disagree
};

OracleResult run_oracle(const Scenario& s, const std::string& vector_name, int kmax,
                        const RunOptions& opt);

std::string render_report(const std::vector<ReportRow>& rows, const RunOptions& opt);
std::string render_oracle(const std::vector<OracleRow>& rows, const RunOptions& opt);

}  // namespace bidisc
