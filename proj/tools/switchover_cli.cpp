#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "switchover/chung_lu.hpp"
#include "switchover/expansion.hpp"
#include "switchover/harness.hpp"

using namespace switchover;

namespace {

std::uint64_t resolve_master_seed(std::uint64_t configured) {
    if (const char* env = std::getenv("RNG_MASTER_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return configured;
}

Scenario scenario_from_config(const nlohmann::json& j, std::uint64_t seed) {
    if (j.contains("scenario_file")) {
        return load_scenario_file(j["scenario_file"].get<std::string>());
    }
    if (j.contains("canonical")) {
        const auto& c = j["canonical"];
        CanonicalParams params;
        params.n = c.value("n", 0);
        params.r = c.value("r", 0);
        params.degree = c.value("degree", 0);
        params.seed = seed;
        return canonical_scenario(c.at("id").get<std::string>(), params);
    }
    if (j.contains("chung_lu")) {
        const auto& c = j["chung_lu"];
        ChungLuParams params = chung_lu_params(c.at("n").get<long long>(), c.at("tau").get<double>());
        return cl_scenario(params, c.at("c").get<double>(), RngStream{seed, 42});
    }
    throw std::runtime_error("config must name scenario_file, canonical, or chung_lu");
}

const char* status_name(SwitchoverStatus s) {
    switch (s) {
        case SwitchoverStatus::none: return "none";
        case SwitchoverStatus::weak: return "weak";
        case SwitchoverStatus::strong: return "strong";
        default: return "inconclusive";
    }
}

int cmd_sweep(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    nlohmann::json j = nlohmann::json::parse(in);

    SweepConfig config;
    config.s = j.at("s").get<double>();
    config.beta_grid = j.contains("beta_grid") ? j["beta_grid"].get<std::vector<double>>()
                                               : SweepConfig::default_beta_grid();
    config.trials = j.value("trials", 10000LL);
    config.master_seed = resolve_master_seed(j.value("master_seed", 1ULL));
    config.threads = j.value("threads", 1);
    double delta_min = j.value("delta_min", 0.01);

    Scenario scenario = scenario_from_config(j, config.master_seed);
    auto records = run_sweep(scenario, config);
    std::string out_path = j.value("output", std::string("sweep.csv"));
    write_sweep_csv(records, out_path);

    SwitchoverVerdict verdict = detect_switchover(records, scenario.n(), delta_min);
    std::cout << "wrote " << out_path << "\n";
    std::cout << "switchover: " << status_name(verdict.status);
    if (verdict.beta_1) std::cout << " beta_1=" << *verdict.beta_1;
    if (verdict.beta_2) std::cout << " beta_2=" << *verdict.beta_2;
    if (verdict.status == SwitchoverStatus::weak || verdict.status == SwitchoverStatus::strong)
        std::cout << " delta_hat=" << verdict.delta_hat;
    std::cout << "\n";
    return 0;
}

int cmd_verify(const std::string& filter, const std::string& out_path, std::uint64_t seed) {
    VerifyReport report = run_verification(resolve_master_seed(seed), filter);
    std::string json = report.to_json();
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream out(out_path);
        out << json << "\n";
    }
    for (const auto& c : report.checks) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_expansion(const std::string& graph_path, double q, bool probe, int samples,
                  std::uint64_t seed) {
    Graph g = load_graph_file(graph_path);
    ExpansionReport report = probe
        ? probe_edge_expansion(g, q, samples, RngStream{resolve_master_seed(seed), 5})
        : exact_edge_expansion(g, q);
    nlohmann::json j;
    j["schema"] = 1;
    j["q"] = report.q;
    j["a_star"] = report.a_star;
    j["witness"] = report.witness;
    j["method"] = report.method == ExpansionMethod::exact ? "exact" : "probe";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_chunglu(long long n, double tau, std::uint64_t seed, const std::string& out_path) {
    ChungLuParams params = chung_lu_params(n, tau);
    RngStream rng{resolve_master_seed(seed), 0};
    Graph g = sample_chung_lu(params, rng);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << to_edge_list(g);
    std::ofstream manifest(out_path + ".manifest.json");
    manifest << chung_lu_manifest(params, g, rng) << "\n";
    std::cout << "wrote " << out_path << " (" << g.m_edges() << " edges)\n";
    return 0;
}

int cmd_phase_diagram(const PhaseDiagramConfig& config, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << phase_diagram_csv(config);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_scenario(const std::string& id, const CanonicalParams& params, const std::string& out_path) {
    Scenario s = canonical_scenario(id, params);
    save_scenario_file(s, out_path, out_path + ".edges");
    std::cout << "wrote " << out_path << " (n=" << s.n() << ", r=" << s.r() << ")\n";
    return 0;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        grid[i] = lo * std::pow(hi / lo, t);
    }
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"switchover: epidemic switchover laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "paired beta sweep from a JSON config");
    sweep->add_option("--config", config_path, "config JSON")->required();

    std::string filter, verify_out;
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "run the oracle verification suites");
    verify->add_option("--filter", filter, "restrict to checks containing this substring");
    verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");
    verify->add_option("--seed", verify_seed, "master seed");

    std::string graph_path;
    double q = 0.2;
    bool exact_flag = false, probe_flag = false;
    int probe_samples = 1000;
    std::uint64_t exp_seed = 1;
    auto* expansion = app.add_subcommand("expansion", "edge-expansion of a graph");
    expansion->add_option("--graph", graph_path, "edge-list file")->required();
    expansion->add_option("--q", q, "expansion parameter q")->required();
    expansion->add_flag("--exact", exact_flag, "exhaustive enumeration (n <= 24)");
    expansion->add_flag("--probe", probe_flag, "randomized upper-bound probe");
    expansion->add_option("--samples", probe_samples, "probe sample count");
    expansion->add_option("--seed", exp_seed, "master seed");

    long long cl_n = 10000;
    double cl_tau = 2.5;
    std::uint64_t cl_seed = 1;
    std::string cl_out = "chunglu.edges";
    auto* chunglu = app.add_subcommand("chunglu", "sample a Chung-Lu power-law graph");
    chunglu->add_option("--n", cl_n, "vertex count")->required();
    chunglu->add_option("--tau", cl_tau, "power-law exponent in (2,3)")->required();
    chunglu->add_option("--seed", cl_seed, "master seed");
    chunglu->add_option("--out", cl_out, "output edge-list path")->required();

    PhaseDiagramConfig pd;
    std::string pd_out = "phase.csv";
    int pd_beta_points = 25, pd_s_points = 25;
    auto* phase = app.add_subcommand("phase-diagram", "corollary region flags over a (beta, s) grid");
    phase->add_option("--n", pd.n, "graph size for the asymptotic checks");
    phase->add_option("--tau", pd.tau, "power-law exponent");
    phase->add_option("--theta", pd.theta, "strictness used for the asymptotic comparisons");
    phase->add_option("--epsilon", pd.epsilon, "slack in the q check");
    phase->add_option("--beta-points", pd_beta_points, "beta grid resolution");
    phase->add_option("--s-points", pd_s_points, "s grid resolution");
    phase->add_option("--out", pd_out, "output CSV path")->required();

    std::string sc_id, sc_out = "scenario.json";
    CanonicalParams sc_params;
    auto* scenario = app.add_subcommand("scenario", "emit a canonical core-periphery scenario");
    scenario->add_option("--id", sc_id, "scenario id")->required();
    scenario->add_option("--n", sc_params.n, "total vertices")->required();
    scenario->add_option("--r", sc_params.r, "central size");
    scenario->add_option("--degree", sc_params.degree, "core degree (dregular)");
    scenario->add_option("--seed", sc_params.seed, "master seed");
    scenario->add_option("--out", sc_out, "output scenario JSON path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(config_path);
        if (verify->parsed()) return cmd_verify(filter, verify_out, verify_seed);
        if (expansion->parsed()) {
            if (exact_flag && probe_flag) throw std::runtime_error("choose one of --exact/--probe");
            bool use_probe = probe_flag || (!exact_flag && load_graph_file(graph_path).n() > 24);
            return cmd_expansion(graph_path, q, use_probe, probe_samples, exp_seed);
        }
        if (chunglu->parsed()) return cmd_chunglu(cl_n, cl_tau, cl_seed, cl_out);
        if (phase->parsed()) {
            pd.beta_grid = log_grid(0.01, 0.99, pd_beta_points);
            pd.s_grid = log_grid(0.001, 0.4, pd_s_points);
            return cmd_phase_diagram(pd, pd_out);
        }
        if (scenario->parsed()) return cmd_scenario(sc_id, sc_params, sc_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
