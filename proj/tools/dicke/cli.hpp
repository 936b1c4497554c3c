#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicke/scan.hpp"

namespace dicke::cli {

/// Everything a subcommand needs. Every field has an explicit default and
/// appears in the serialized form.
struct JobConfig {
    std::string command;
    std::string model = "full";       // full | rwa
    int n_atoms = 2;
    double omega_field = 1.0;
    double omega1 = 0.0;
    double omega2 = 1.0;
    double eta = 0.0;                 // |xi|
    double xi_phase = 0.0;            // arg xi, radians
    Axis x12{0.0, 2.0, 101};
    std::string second_axis = "zeta"; // zeta | chi
    Axis second{-4.0, 1.0, 101};
    Axis k{-80.0, 20.0, 101};         // probs: zeta = 0.05 k when no zeta is given
    bool use_k = true;
    int levels = 1;
    int m_max = -1;
    int threads = 0;
    Thresholds thresholds;
    ConvergencePolicy policy;
    std::string out = "-";

    GridSpec grid() const;
    ModelParams point(double x12, double second) const;
};

nlohmann::json to_json(const JobConfig& c);
JobConfig job_from_json(const nlohmann::json& j);

/// "v" or "min:max:count".
Axis parse_range(const std::string& text);

/// Exit codes: 0 ok, 1 oracle mismatch, 2 bad configuration, 3 no convergence.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

/// Analytic-vs-numeric checks used by `oracle-check`. Returns the number of
/// failed checks and prints one line per check.
int run_oracle_suite(std::ostream& os);

} // namespace dicke::cli
