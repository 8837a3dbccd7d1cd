// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "common/naive_oracles.hpp"
#include "oracle/oracle_tables.inc"
#include "savl/ese.hpp"
#include "savl/presets.hpp"
#include "savl/report_io.hpp"
#include "savl/spec_file.hpp"
#include "savl/stats.hpp"
#include "savl/vl_strategy.hpp"

namespace fs = std::filesystem;
using namespace savl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::size_t worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double mean_of(const CellResult& cell) { return cell.stats.mean; }

double expected_fes_or_inf(const CellResult& cell) {
    return cell.stats.expected_fes.value_or(std::numeric_limits<double>::infinity());
}

ExperimentReport run_in_memory(const ExperimentSpec& spec, std::size_t stride = 0) {
    ExecutionOptions options;
    options.threads = worker_threads();
    options.write_files = false;
    options.trial_options.containment_stride = stride;
    return run_experiment(spec, options);
}

Outcome sigmoid_endpoints() {
    RngStream rng(0xC0FFEE);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double a = 0.05 + 0.9 * rng.uniform();
        double b = 0.05 + 0.9 * rng.uniform();
        if (a > b) std::swap(a, b);
        if (a == b) b = std::min(0.95, b + 1e-3);
        const auto coeff = derive_alpha_beta(a, b);
        worst = std::max(worst, std::abs(sigmoid_mu(coeff, 0.0) - a));
        worst = std::max(worst, std::abs(sigmoid_mu(coeff, 1.0) - b));
    }
    return {worst <= 1e-12, "max endpoint error " + fmt(worst)};
}

Outcome ese_oracle() {
    RngStream rng(2718);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7);
        const std::size_t d = 1 + static_cast<std::size_t>(rng.uniform() * 5);
        Matrix x(n, d);
        oracle::Swarm naive(n, std::vector<double>(d));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                x(i, k) = naive[i][k] = -10.0 + 20.0 * rng.uniform();
            }
        }
        const std::size_t g = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
        const double f = evolutionary_factor(x, g).f;
        worst = std::max(worst, std::abs(f - oracle::evolutionary_factor(naive, g)));
    }

    Matrix line(3, 1);
    line(0, 0) = 0.0;
    line(1, 0) = 1.0;
    line(2, 0) = 2.0;
    const auto low = evolutionary_factor(line, 1);
    const auto high = evolutionary_factor(line, 0);
    Matrix same(4, 2, 1.5);
    const bool degenerate = evolutionary_factor(same, 0).f == 0.0;
    const bool examples = low.f == 0.0 && low.d_g == 1.0 && low.d_max == 1.5 && high.f == 1.0 &&
                          high.d_g == 1.5 && degenerate;
    return {worst <= 1e-12 && examples,
            "max |f - oracle| " + fmt(worst) + ", hand examples " + (examples ? "exact" : "mismatch")};
}

Outcome containment() {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    for (LimitHandling handling : {LimitHandling::Clamp, LimitHandling::StateCoupled}) {
        ExperimentSpec spec = preset_ablation();
        SpecOverrides o;
        o.budget_scale = 0.1;
        apply_overrides(spec, o);
        for (auto& alg : spec.algorithms) alg.config.limit_handling = handling;
        const auto report = run_in_memory(spec, 1);
        for (const auto& cell : report.cells) {
            for (const auto& t : cell.trials) {
                checks += t.containment_checks;
                violations += t.containment_violations;
            }
        }
    }
    return {checks > 0 && violations == 0,
            std::to_string(violations) + " violations in " + std::to_string(checks) + " checks"};
}

Outcome ablation_ordering() {
    const auto report = run_in_memory(preset_ablation());
    int sb_le_il = 0;
    int il_le_fx = 0;
    int fes = 0;
    std::string detail;
    for (const char* p : {"f2", "f3", "f5", "f6"}) {
        const CellResult* fx = report.find("LDIW-Fixed", p);
        const CellResult* il = report.find("LDIW-IterationLinear", p);
        const CellResult* sb = report.find("LDIW-StateBased", p);
        if (!fx || !il || !sb) return {false, std::string("missing cell for ") + p};
        sb_le_il += mean_of(*sb) <= mean_of(*il);
        il_le_fx += mean_of(*il) <= mean_of(*fx);
        fes += expected_fes_or_inf(*sb) <= expected_fes_or_inf(*fx);
        detail += std::string(" ") + p + "[F " + fmt(mean_of(*fx)) + " IL " + fmt(mean_of(*il)) +
                  " SB " + fmt(mean_of(*sb)) + " FEs F " + fmt(expected_fes_or_inf(*fx)) + " SB " +
                  fmt(expected_fes_or_inf(*sb)) + "]";
    }
    return {sb_le_il >= 3 && il_le_fx >= 3 && fes >= 3,
            "SB<=IL " + std::to_string(sb_le_il) + "/4, IL<=F " + std::to_string(il_le_fx) +
                "/4, FEs SB<=F " + std::to_string(fes) + "/4;" + detail};
}

Outcome main_comparison() {
    ExperimentSpec spec = preset_main_comparison();
    spec.problems = {{"f1", 50, std::nullopt, std::nullopt}, {"f7", 50, std::nullopt, std::nullopt}};
    const auto report = run_in_memory(spec);
    const CellResult* sphere = report.find("PSO-SAVL", "f1");
    const CellResult* savl7 = report.find("PSO-SAVL", "f7");
    const CellResult* ldiw7 = report.find("PSO-LDIW", "f7");
    if (!sphere || !savl7 || !ldiw7) return {false, "missing cell"};
    const bool ok = sphere->stats.success_ratio >= 0.9 && sphere->stats.mean < 1e-20 &&
                    savl7->stats.mean < ldiw7->stats.mean;
    return {ok, "f1 success " + fmt(sphere->stats.success_ratio) + " mean " + fmt(sphere->stats.mean) +
                    "; f7 SAVL " + fmt(savl7->stats.mean) + " vs LDIW " + fmt(ldiw7->stats.mean)};
}

Outcome sensitivity() {
    ExperimentSpec spec = preset_sensitivity(SensitivityParam::MuMin, {0.1, 0.4});
    spec.problems = {{"f2", 50, std::nullopt, std::nullopt}};
    spec.n_trials = 10;
    const auto report = run_in_memory(spec);
    if (report.cells.size() != 2) return {false, "expected two cells"};
    const double low = report.cells[0].stats.mean;
    const double mid = report.cells[1].stats.mean;
    return {low >= 10.0 * mid, "mu_min=0.1 mean " + fmt(low) + " vs mu_min=0.4 mean " + fmt(mid) +
                                   " (ratio " + fmt(low / mid) + ")"};
}

Outcome complexity() {
    std::string detail;
    bool ok = true;
    for (std::size_t n : {2u, 3u, 10u, 17u}) {
        for (std::size_t iters : {1u, 7u, 50u}) {
            RunConfig config;
            config.dimension = 3;
            config.population = n;
            config.max_iters = iters;
            const auto r = run_trial(config, BenchmarkProblem(FunctionId::Sphere, 3), 0);
            const std::uint64_t expected = static_cast<std::uint64_t>(iters) * n * (n - 1) / 2;
            if (r.pair_distance_evals != expected) {
                ok = false;
                detail += " N=" + std::to_string(n) + " iters=" + std::to_string(iters) + " got " +
                          std::to_string(r.pair_distance_evals);
            }
        }
    }
    return {ok, ok ? "12 (N, max_iters) combinations exact" : "mismatch:" + detail};
}

Outcome statistics() {
    double worst = 0.0;
    for (const auto& row : kWelchOracle) {
        worst = std::max(worst, std::abs(welch_t_test(row.a, row.b).p_value - row.p));
    }
    RngStream rng(31337);
    double worst_sym = 0.0;
    double worst_shift = 0.0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> a(2 + static_cast<std::size_t>(rng.uniform() * 20));
        std::vector<double> b(2 + static_cast<std::size_t>(rng.uniform() * 20));
        for (double& v : a) v = rng.normal() * 2.0;
        for (double& v : b) v = 1.0 + rng.normal();
        const auto ab = welch_t_test(a, b);
        const auto ba = welch_t_test(b, a);
        worst_sym = std::max({worst_sym, std::abs(ab.p_value - ba.p_value), std::abs(ab.t_value + ba.t_value)});
        const double shift = -50.0 + 100.0 * rng.uniform();
        for (double& v : a) v += shift;
        for (double& v : b) v += shift;
        worst_shift = std::max(worst_shift, std::abs(welch_t_test(a, b).p_value - ab.p_value));
    }
    const bool ok = kWelchOracle.size() >= 50 && worst <= 1e-8 && worst_sym <= 1e-12 && worst_shift <= 1e-8;
    return {ok, "oracle max |dp| " + fmt(worst) + ", symmetry " + fmt(worst_sym) + ", shift " +
                    fmt(worst_shift)};
}

std::string read_without_column(const fs::path& path, const std::string& drop) {
    const CsvTable table = read_csv(path);
    std::size_t skip = table.header.size();
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == drop) skip = i;
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != skip) out += csv_escape(row[i]) + ",";
        }
        out += "\n";
    };
    emit(table.header);
    for (const auto& row : table.rows) emit(row);
    return out;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism(const fs::path& work) {
    const fs::path dir = work / "determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path spec_file = dir / "ablation.json";
    save_experiment_spec(preset_ablation(), spec_file);

    const std::vector<std::pair<std::string, std::string>> runs = {
        {"a", "1"}, {"b", "1"}, {"c", std::to_string(std::max<std::size_t>(2, worker_threads()))}};
    for (const auto& [name, threads] : runs) {
        const std::string cmd = std::string("\"") + SAVL_CLI_PATH + "\" run \"" + spec_file.string() +
                                "\" --quiet --threads " + threads + " --out \"" + (dir / name).string() +
                                "\" > \"" + (dir / (name + ".log")).string() + "\"";
        if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
    }
    bool ok = true;
    std::string detail;
    for (const char* other : {"b", "c"}) {
        const bool summary_same = slurp(dir / "a" / "summary.csv") == slurp(dir / other / "summary.csv");
        const bool trials_same = read_without_column(dir / "a" / "trials.csv", "wall_time") ==
                                 read_without_column(dir / other / "trials.csv", "wall_time");
        ok = ok && summary_same && trials_same;
        detail += std::string(" run ") + other + (summary_same && trials_same ? " identical" : " differs");
    }
    return {ok, "threads 1, 1, " + runs[2].second + ":" + detail};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    std::string workdir = (fs::temp_directory_path() / "savl_acceptance").string();
    app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
    app.add_option("--workdir", workdir, "Scratch directory");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"sigmoid endpoint fidelity", sigmoid_endpoints},
        {"evolutionary factor oracle equivalence", ese_oracle},
        {"containment over the ablation preset at budget scale 0.1", containment},
        {"ablation ordering", ablation_ordering},
        {"main comparison sanity on f1 and f7", main_comparison},
        {"mu_min sensitivity on f2", sensitivity},
        {"pair-distance accounting", complexity},
        {"Welch t-test machinery", statistics},
        {"run determinism across thread counts", [&] { return determinism(workdir); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
                  << criteria[i].first << " | " << outcome.detail << " (" << fmt(secs) << " s)\n";
        failures += !outcome.pass;
    }
    return failures == 0 ? 0 : 1;
}
