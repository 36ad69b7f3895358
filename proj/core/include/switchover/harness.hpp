#pragma once

#include <optional>
#include <string>
#include <vector>

#include "switchover/percolation.hpp"
#include "switchover/scenario.hpp"

namespace switchover {

struct SweepConfig {
    double s = 0.1;                  // seed fraction; k = floor(s*n)
    std::vector<double> beta_grid;   // strictly increasing, in [0,1]
    long long trials = 10000;        // per beta point
    std::uint64_t master_seed = 1;
    int threads = 1;

    static std::vector<double> default_beta_grid();
};

struct SweepRecord {
    double beta = 0.0;
    EstimateWithCI est_c;  // E|G^beta(S_C)|
    EstimateWithCI est_v;  // E|G^beta(S_V)|
    EstimateWithCI diff;   // paired |G^beta(S_V)| - |G^beta(S_C)|
    long long k = 0;
    long long n = 0;
    std::uint64_t seed = 0;
};

// Paired beta sweep: each trial samples one percolation outcome and
// evaluates both seed laws on it. Trial streams are derived from
// (master_seed, beta index, trial index), so results are byte-identical for
// any thread count.
std::vector<SweepRecord> run_sweep(const Scenario& scenario, const SweepConfig& config);

std::string sweep_csv(const std::vector<SweepRecord>& records);
void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path);

enum class SwitchoverStatus { none, inconclusive, weak, strong };

struct SwitchoverVerdict {
    SwitchoverStatus status = SwitchoverStatus::inconclusive;
    // beta_1: central seeding wins (diff CI entirely below 0);
    // beta_2: uniform seeding wins (diff CI entirely above 0)
    std::optional<double> beta_1;
    std::optional<double> beta_2;
    double delta_hat = 0.0;  // min(|diff.mean|)/n at the two witnesses
};

// Weak: CI-separated sign change across the grid. Strong: additionally
// |diff.mean| >= delta_min * n at both witnesses.
SwitchoverVerdict detect_switchover(const std::vector<SweepRecord>& records, long long n,
                                    double delta_min = 0.01);

// Canonical core-periphery fixtures. Known ids: "clique-core-pendants",
// "dregular-core-pendants", "double-star", "path", "cycle".
struct CanonicalParams {
    int n = 0;
    int r = 0;       // central size where applicable
    int degree = 0;  // d for the d-regular core
    std::uint64_t seed = 1;
};

Scenario canonical_scenario(const std::string& id, const CanonicalParams& params);

struct PhaseDiagramConfig {
    long long n = 1000000;
    double tau = 2.5;
    std::vector<double> beta_grid;
    std::vector<double> s_grid;
    double epsilon = 0.1;
    double theta = 0.1;
};

// One CSV row per (beta, s) grid point with the corollary flags plus the
// cited prior-claim region flags for comparison. The central fraction is
// tied to the seed fraction as c = 2s.
std::string phase_diagram_csv(const PhaseDiagramConfig& config);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
    std::string to_json() const;  // schema-versioned machine-readable report
};

// Run the oracle suites: percolation-vs-SIR distributional equivalence,
// seed-cut identity enumerations, small-beta envelope checks, the
// large-component claim exhaustives, the degree-floor cross-checks and the
// giant-component tail test. filter restricts to checks whose name contains
// the substring.
VerifyReport run_verification(std::uint64_t master_seed, const std::string& filter = "");

} // namespace switchover
