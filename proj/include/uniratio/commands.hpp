#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace uniratio {

/// Parsed invocation shared by the CLI front end and the command tests.
struct RunConfig {
    std::string command;   // limit-ratio | verify | table2 | salem | hbounds
    std::string spec_arg;  // inline JSON or a path
    std::string family_arg;
    std::string method = "exact";  // exact | riemann
    long long points = 1000000;
    std::vector<int> n_list;
    std::optional<int> m;
    std::optional<std::pair<int, int>> m_range;
    std::string format;  // json | csv; empty picks the command default
    std::string data_path = "data/table2_reference.csv";
    std::optional<double> lc_ref;  // reference limit for oracle-only verify
};

/// Dispatches a command, writing the report to `out` and diagnostics to
/// `diag`. Returns the process exit code: 0 success, 1 input error,
/// 2 degenerate-envelope, 3 numeric-consistency failure.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace uniratio
