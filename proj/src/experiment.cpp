#include "savl/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "savl/benchmarks.hpp"
#include "savl/report_io.hpp"
#include "savl/simd/kernels.hpp"
#include "savl/spec_file.hpp"

namespace savl {

void ExperimentSpec::validate() const {
    if (n_trials < 1) throw ConfigError("experiment '" + name + "': trials must be >= 1");
    if (problems.empty()) throw ConfigError("experiment '" + name + "': no problems");
    if (algorithms.empty()) throw ConfigError("experiment '" + name + "': no algorithms");
    for (const auto& problem : problems) {
        parse_function_id(problem.name);
        if (problem.dimension == 0) {
            throw ConfigError("problem '" + problem.name + "': dimension must be positive");
        }
        if (problem.population && *problem.population < 2) {
            throw ConfigError("problem '" + problem.name + "': population must be >= 2");
        }
    }
    std::set<std::string> labels;
    for (const auto& algorithm : algorithms) {
        if (algorithm.label.empty()) throw ConfigError("algorithm with empty label");
        if (!labels.insert(algorithm.label).second) {
            throw ConfigError("duplicate algorithm label '" + algorithm.label + "'");
        }
        RunConfig probe = algorithm.config;
        probe.dimension = 1;
        try {
            probe.validate();
        } catch (const ConfigError& e) {
            throw ConfigError("algorithm '" + algorithm.label + "': " + e.what());
        }
    }
    if (!reference.empty() && !labels.contains(reference)) {
        throw ConfigError("reference algorithm '" + reference + "' is not in the spec");
    }
    if (trace_points < 2) throw ConfigError("trace_points must be >= 2");
}

const std::string& ExperimentSpec::reference_label() const {
    return reference.empty() ? algorithms.front().label : reference;
}

const CellResult* ExperimentReport::find(std::string_view algorithm,
                                         std::string_view problem) const noexcept {
    for (const auto& cell : cells) {
        if (cell.algorithm == algorithm && cell.problem == problem) return &cell;
    }
    return nullptr;
}

Trace downsample_trace(const TrialRecord& record, std::size_t population, std::size_t max_points) {
    Trace trace;
    const std::size_t n = record.best_value_history.size();
    if (n == 0) return trace;
    auto push = [&](std::size_t k) {
        trace.iteration.push_back(k + 1);
        trace.fe_count.push_back(static_cast<std::uint64_t>(population) * (k + 2));
        trace.best_value.push_back(record.best_value_history[k]);
        trace.f.push_back(record.f_history[k]);
        trace.mu.push_back(record.mu_history[k]);
    };
    const std::size_t points = std::max<std::size_t>(max_points, 2);
    const std::size_t stride = n <= points ? 1 : (n - 1 + points - 2) / (points - 1);
    for (std::size_t k = 0; k + 1 < n; k += stride) {
        push(k);
    }
    push(n - 1);
    return trace;
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t algorithm_index,
                        std::size_t problem_index) noexcept {
    return mix_seed(mix_seed(master_seed, algorithm_index), problem_index);
}

RunConfig resolve_config(const ExperimentSpec& spec, std::size_t algorithm_index,
                         std::size_t problem_index) {
    const auto& problem = spec.problems.at(problem_index);
    RunConfig config = spec.algorithms.at(algorithm_index).config;
    config.dimension = problem.dimension;
    if (problem.population) config.population = *problem.population;
    config.seed = cell_seed(spec.master_seed, algorithm_index, problem_index);
    return config;
}

ExperimentReport run_experiment(const ExperimentSpec& spec, const ExecutionOptions& options) {
    spec.validate();

    ExperimentReport report;
    report.spec = spec;
    report.spec_hash = spec_hash(spec);
    report.simd_backend = std::string(simd::backend_name(simd::active_backend()));

    std::vector<BenchmarkProblem> problems;
    problems.reserve(spec.problems.size());
    for (const auto& p : spec.problems) {
        problems.push_back(BenchmarkProblem::from_name(p.name, p.dimension, p.rotation_seed));
    }

    const std::size_t n_alg = spec.algorithms.size();
    const std::size_t n_prob = spec.problems.size();
    std::vector<RunConfig> configs;
    for (std::size_t a = 0; a < n_alg; ++a) {
        for (std::size_t p = 0; p < n_prob; ++p) {
            CellResult cell;
            cell.algorithm_index = a;
            cell.problem_index = p;
            cell.algorithm = spec.algorithms[a].label;
            cell.problem = std::string(problems[p].name());
            configs.push_back(resolve_config(spec, a, p));
            cell.dimension = configs.back().dimension;
            cell.population = configs.back().population;
            cell.cell_seed = configs.back().seed;
            cell.rotation_seed = problems[p].rotation_seed();
            cell.acceptance = problems[p].acceptance();
            cell.trials.resize(spec.n_trials);
            cell.traces.resize(spec.n_trials);
            report.cells.push_back(std::move(cell));
        }
    }

    const std::size_t total = report.cells.size() * spec.n_trials;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total) return;
            const std::size_t c = job / spec.n_trials;
            const std::size_t t = job % spec.n_trials;
            CellResult& cell = report.cells[c];
            try {
                TrialRecord record =
                    run_trial(configs[c], problems[cell.problem_index], t, options.trial_options);
                cell.traces[t] = downsample_trace(record, cell.population, spec.trace_points);
                record.best_value_history = {};
                record.f_history = {};
                record.mu_history = {};
                cell.trials[t] = std::move(record);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(total);
                return;
            }
            const std::size_t finished = done.fetch_add(1) + 1;
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(finished, total);
            }
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, total));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& cell : report.cells) {
        cell.stats = aggregate(cell.trials, cell.acceptance);
    }

    const std::string& ref = spec.reference_label();
    for (std::size_t p = 0; p < n_prob; ++p) {
        const CellResult* ref_cell = nullptr;
        for (const auto& cell : report.cells) {
            if (cell.problem_index == p && cell.algorithm == ref) ref_cell = &cell;
        }
        for (const auto& cell : report.cells) {
            if (cell.problem_index != p || &cell == ref_cell || spec.n_trials < 2) continue;
            std::vector<double> a;
            std::vector<double> b;
            for (const auto& r : ref_cell->trials) a.push_back(r.final_value);
            for (const auto& r : cell.trials) b.push_back(r.final_value);
            report.ttests.push_back({ref, cell.algorithm, cell.problem, welch_t_test(a, b)});
        }
    }

    if (options.write_files) {
        write_report(report, spec.output_dir);
    }
    return report;
}

}  // namespace savl
