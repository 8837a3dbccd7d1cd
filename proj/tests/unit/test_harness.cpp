#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "savl/presets.hpp"
#include "savl/report_io.hpp"
#include "savl/spec_file.hpp"

using namespace savl;
namespace fs = std::filesystem;

namespace {

ExperimentSpec tiny_spec() {
    ExperimentSpec spec;
    spec.name = "tiny";
    spec.n_trials = 3;
    spec.master_seed = 11;
    spec.problems = {{"f3", 4, std::nullopt, std::nullopt}};
    AlgorithmSpec alg = pso_savl();
    alg.config.population = 6;
    alg.config.max_iters = 60;
    spec.algorithms = {alg};
    return spec;
}

ExperimentSpec two_by_two() {
    ExperimentSpec spec = tiny_spec();
    spec.problems.push_back({"f6", 4, std::nullopt, std::uint64_t{99}});
    AlgorithmSpec ldiw = pso_ldiw();
    ldiw.config.population = 6;
    ldiw.config.max_iters = 60;
    spec.algorithms.push_back(ldiw);
    return spec;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("savl_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExecutionOptions quiet(std::size_t threads = 1) {
    ExecutionOptions options;
    options.threads = threads;
    options.write_files = false;
    return options;
}

}  // namespace

TEST_CASE("a 1x1x3 experiment produces one cell with three trials") {
    const auto report = run_experiment(tiny_spec(), quiet());
    REQUIRE(report.cells.size() == 1);
    const CellResult& cell = report.cells[0];
    CHECK(cell.trials.size() == 3);
    CHECK(cell.traces.size() == 3);
    CHECK(cell.stats.n_trials == 3);
    CHECK(cell.population == 6);
    CHECK(cell.dimension == 4);
    CHECK(cell.cell_seed == cell_seed(11, 0, 0));
    for (const auto& trial : cell.trials) {
        CHECK(trial.total_fes == 6 * 61);
        CHECK(trial.best_value_history.empty());
    }
    CHECK(report.ttests.empty());
    CHECK(report.find("PSO-SAVL", "f3") == &cell);
    CHECK(report.find("PSO-SAVL", "f4") == nullptr);
}

TEST_CASE("experiments are deterministic and independent of the thread count") {
    const auto spec = two_by_two();
    const auto a = run_experiment(spec, quiet(1));
    const auto b = run_experiment(spec, quiet(1));
    const auto c = run_experiment(spec, quiet(3));
    auto strip = [](std::vector<TrialRow> rows) {
        for (auto& r : rows) r.wall_time = 0.0;
        return rows;
    };
    CHECK(summary_rows(a) == summary_rows(b));
    CHECK(summary_rows(a) == summary_rows(c));
    CHECK(strip(trial_rows(a)) == strip(trial_rows(b)));
    CHECK(strip(trial_rows(a)) == strip(trial_rows(c)));
    REQUIRE(a.ttests.size() == 2);
    CHECK(a.ttests[0].reference == "PSO-SAVL");
    CHECK(a.ttests[0].algorithm == "PSO-LDIW");
    CHECK(a.ttests[0].result.p_value == c.ttests[0].result.p_value);
}

TEST_CASE("invalid specs are rejected with the offending name") {
    auto spec = tiny_spec();
    spec.problems[0].name = "f9";
    try {
        run_experiment(spec, quiet());
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("f9") != std::string::npos);
    }
    spec = two_by_two();
    spec.algorithms[1].label = spec.algorithms[0].label;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec = tiny_spec();
    spec.reference = "nope";
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec = tiny_spec();
    spec.algorithms[0].config.population = 1;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("report files round-trip") {
    auto spec = two_by_two();
    const fs::path dir = scratch("roundtrip");
    spec.output_dir = dir;
    ExecutionOptions options = quiet();
    options.write_files = true;
    const auto report = run_experiment(spec, options);
    for (const char* name : {"summary.csv", "trials.csv", "ttests.csv", "spec.json", "provenance.txt"}) {
        CHECK(fs::exists(dir / name));
    }
    CHECK(read_summary_csv(dir / "summary.csv") == summary_rows(report));
    CHECK(read_trials_csv(dir / "trials.csv") == trial_rows(report));
    CHECK(fs::exists(trace_path(dir, "PSO-SAVL", "f6", 2)));
    const CsvTable ttests = read_csv(dir / "ttests.csv");
    CHECK(ttests.header == std::vector<std::string>{"reference", "algorithm", "problem", "t_value",
                                                    "p_value", "dof", "significant_at_005"});
    CHECK(ttests.rows.size() == 2);
    const std::string provenance = slurp(dir / "provenance.txt");
    CHECK(provenance.find(std::string(kToolVersion)) != std::string::npos);
    CHECK(provenance.find(report.spec_hash) != std::string::npos);

    const ExperimentSpec reloaded = load_experiment_spec(dir / "spec.json");
    CHECK(spec_hash(reloaded) == report.spec_hash);
    fs::remove_all(dir);
}

TEST_CASE("a single trial can be rerun from the recorded seeds") {
    const auto spec = two_by_two();
    const auto report = run_experiment(spec, quiet());
    const CellResult* cell = report.find("PSO-LDIW", "f6");
    REQUIRE(cell);
    const RunConfig config = resolve_config(spec, 1, 1);
    CHECK(config.seed == cell->cell_seed);
    const BenchmarkProblem problem = BenchmarkProblem::from_name("f6", 4, cell->rotation_seed);
    const TrialRecord again = run_trial(config, problem, 2);
    CHECK(again.final_value == cell->trials[2].final_value);
    CHECK(again.fe_at_acceptance == cell->trials[2].fe_at_acceptance);
}

TEST_CASE("CSV helpers") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    const CsvTable t = parse_csv("x,y\n\"a,b\",\"q\"\"q\"\n1,2\n");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "a,b");
    CHECK(t.rows[0][1] == "q\"q");
    CHECK(t.column("y") == 1);
    for (double v : {0.1, -3.5e-300, 1e300, 0.0, 123456.789, 1.0 / 3.0}) {
        CHECK(parse_double(format_double(v)) == v);
    }
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(std::isinf(parse_double("-inf")));
}

TEST_CASE("spec JSON round-trip and error reporting") {
    const ExperimentSpec spec = two_by_two();
    const std::string text = spec_to_json(spec);
    const ExperimentSpec back = spec_from_json(text);
    CHECK(spec_to_json(back) == text);
    CHECK(spec_hash(back) == spec_hash(spec));
    ExperimentSpec moved = spec;
    moved.output_dir = "elsewhere";
    CHECK(spec_hash(moved) == spec_hash(spec));
    moved.master_seed += 1;
    CHECK(spec_hash(moved) != spec_hash(spec));

    CHECK_THROWS_AS(spec_from_json("{not json"), ConfigError);
    CHECK_THROWS_AS(spec_from_json(R"({"format": "other/1"})"), ConfigError);
    CHECK_THROWS_AS(load_experiment_spec("/nonexistent/spec.json"), IoError);
}

TEST_CASE("trace downsampling") {
    TrialRecord record;
    for (std::size_t k = 0; k < 3000; ++k) {
        record.best_value_history.push_back(3000.0 - static_cast<double>(k));
        record.f_history.push_back(0.5);
        record.mu_history.push_back(0.55);
    }
    const Trace trace = downsample_trace(record, 10, 500);
    CHECK(trace.iteration.size() <= 500);
    CHECK(trace.iteration.size() >= 250);
    CHECK(trace.iteration.front() == 1);
    CHECK(trace.iteration.back() == 3000);
    CHECK(trace.fe_count.back() == 10 * 3001);
    CHECK(trace.best_value.back() == 1.0);

    record.best_value_history.resize(40);
    record.f_history.resize(40);
    record.mu_history.resize(40);
    CHECK(downsample_trace(record, 10, 500).iteration.size() == 40);
}

TEST_CASE("preset structure") {
    const auto ablation = preset_ablation();
    CHECK(ablation.algorithms.size() == 3);
    CHECK(ablation.problems.size() == 4);
    CHECK(ablation.n_trials == 30);
    CHECK(ablation.reference_label() == "LDIW-StateBased");
    for (const auto& alg : ablation.algorithms) {
        CHECK(alg.config.population * alg.config.max_iters == 30000);
        CHECK(alg.config.limit_handling == LimitHandling::Clamp);
    }
    for (const auto& p : ablation.problems) CHECK(p.dimension == 10);

    const auto main = preset_main_comparison();
    CHECK(main.problems.size() == 7);
    for (const auto& p : main.problems) CHECK(p.dimension == 50);
    for (const auto& alg : main.algorithms) CHECK(alg.config.population * alg.config.max_iters == 200000);
    CHECK(main.reference_label() == "PSO-SAVL");

    const auto mu_max = preset_sensitivity(SensitivityParam::MuMax);
    CHECK(mu_max.algorithms.size() == 7);
    const auto mu_min = preset_sensitivity(SensitivityParam::MuMin);
    CHECK(mu_min.algorithms.size() == 7);
    bool has_low = false;
    for (const auto& alg : mu_min.algorithms) {
        CHECK(alg.config.vl_strategy.mu_max == 0.7);
        if (alg.config.vl_strategy.mu_min == 0.1) has_low = true;
    }
    CHECK(has_low);
    const auto custom = preset_sensitivity(SensitivityParam::MuMin, {0.2, 0.9});
    CHECK(custom.algorithms.size() == 1);  // 0.9 > mu_max is dropped

    const auto scal = preset_scalability();
    CHECK(scal.problems.size() == 9);
    bool saw_200 = false;
    for (const auto& p : scal.problems) {
        CHECK((p.name == "f2" || p.name == "f6" || p.name == "f7"));
        REQUIRE(p.population);
        CHECK(*p.population == p.dimension / 2);
        if (p.dimension == 200) saw_200 = true;
    }
    CHECK(saw_200);
}

TEST_CASE("overrides") {
    auto spec = preset_ablation();
    SpecOverrides o;
    o.problems = std::vector<std::string>{"f1"};
    o.dimension = 3;
    o.budget_scale = 0.01;
    o.seed = 5;
    o.output_dir = "out/x";
    apply_overrides(spec, o);
    CHECK(spec.problems.size() == 1);
    CHECK(spec.problems[0].dimension == 3);
    CHECK(spec.algorithms[0].config.max_iters == 30);
    CHECK(spec.n_trials == 2);
    CHECK(spec.master_seed == 5);
    CHECK(spec.output_dir == fs::path("out/x"));
}
