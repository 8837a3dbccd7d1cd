#include "savl/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "savl/core.hpp"
#include "savl/experiment.hpp"
#include "savl/spec_file.hpp"

namespace savl {
namespace {

template <typename T>
T parse_integer(std::string_view text) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("malformed integer '" + std::string(text) + "'");
    }
    return value;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(fields[i]);
    }
    line += '\n';
    return line;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError(path, "write failed");
}

std::string sanitize(std::string_view label) {
    std::string out(label);
    for (char& c : out) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
        if (!keep) c = '_';
    }
    return out;
}

std::string optional_text(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

double parse_double(std::string_view text) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("malformed number '" + std::string(text) + "'");
    }
    return value;
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw ConfigError("csv: missing column '" + std::string(name) + "'");
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

CsvTable parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
            field_started = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            field_started = false;
        } else {
            field += c;
            field_started = true;
        }
    }
    if (quoted) throw ConfigError("csv: unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    CsvTable table;
    if (records.empty()) return table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw ConfigError("csv: row " + std::to_string(r) + " has " +
                              std::to_string(records[r].size()) + " fields, expected " +
                              std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

std::vector<SummaryRow> summary_rows(const ExperimentReport& report) {
    std::vector<SummaryRow> rows;
    for (const auto& cell : report.cells) {
        rows.push_back({cell.algorithm, cell.problem, cell.dimension, cell.population,
                        cell.stats.mean, cell.stats.std, cell.stats.success_ratio,
                        cell.stats.expected_fes, cell.stats.n_trials});
    }
    return rows;
}

std::vector<TrialRow> trial_rows(const ExperimentReport& report) {
    std::vector<TrialRow> rows;
    for (const auto& cell : report.cells) {
        for (const auto& trial : cell.trials) {
            rows.push_back({cell.algorithm, cell.problem, trial.trial_index, trial.seed,
                            trial.final_value, trial.fe_at_acceptance, trial.wall_time_seconds});
        }
    }
    return rows;
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    const auto col = [&](std::string_view name) { return table.column(name); };
    const std::size_t c_alg = col("algorithm"), c_prob = col("problem"), c_d = col("D"),
                      c_n = col("N"), c_mean = col("mean"), c_std = col("std"),
                      c_sr = col("success_ratio"), c_fes = col("expected_fes"),
                      c_trials = col("n_trials");
    std::vector<SummaryRow> rows;
    for (const auto& r : table.rows) {
        SummaryRow row;
        row.algorithm = r[c_alg];
        row.problem = r[c_prob];
        row.dimension = parse_integer<std::size_t>(r[c_d]);
        row.population = parse_integer<std::size_t>(r[c_n]);
        row.mean = parse_double(r[c_mean]);
        row.std = parse_double(r[c_std]);
        row.success_ratio = parse_double(r[c_sr]);
        if (!r[c_fes].empty()) row.expected_fes = parse_double(r[c_fes]);
        row.n_trials = parse_integer<std::size_t>(r[c_trials]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TrialRow> read_trials_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    const std::size_t c_alg = table.column("algorithm"), c_prob = table.column("problem"),
                      c_trial = table.column("trial"), c_seed = table.column("seed"),
                      c_final = table.column("final_value"),
                      c_fes = table.column("fe_at_acceptance"),
                      c_wall = table.column("wall_time");
    std::vector<TrialRow> rows;
    for (const auto& r : table.rows) {
        TrialRow row;
        row.algorithm = r[c_alg];
        row.problem = r[c_prob];
        row.trial = parse_integer<std::uint64_t>(r[c_trial]);
        row.seed = parse_integer<std::uint64_t>(r[c_seed]);
        row.final_value = parse_double(r[c_final]);
        if (!r[c_fes].empty()) row.fe_at_acceptance = parse_integer<std::uint64_t>(r[c_fes]);
        row.wall_time = parse_double(r[c_wall]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::filesystem::path trace_path(const std::filesystem::path& dir, std::string_view algorithm,
                                 std::string_view problem, std::size_t trial) {
    return dir / "traces" /
           (sanitize(algorithm) + "_" + sanitize(problem) + "_" + std::to_string(trial) + ".csv");
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir / "traces", ec);
    if (ec) throw IoError(dir, "cannot create output directory (" + ec.message() + ")");

    {
        const auto path = dir / "summary.csv";
        auto out = open_for_write(path);
        out << "algorithm,problem,D,N,mean,std,success_ratio,expected_fes,n_trials\n";
        for (const auto& row : summary_rows(report)) {
            out << join_row({row.algorithm, row.problem, std::to_string(row.dimension),
                             std::to_string(row.population), format_double(row.mean),
                             format_double(row.std), format_double(row.success_ratio),
                             optional_text(row.expected_fes), std::to_string(row.n_trials)});
        }
        finish(out, path);
    }
    {
        const auto path = dir / "trials.csv";
        auto out = open_for_write(path);
        out << "algorithm,problem,trial,seed,final_value,fe_at_acceptance,wall_time\n";
        for (const auto& row : trial_rows(report)) {
            out << join_row({row.algorithm, row.problem, std::to_string(row.trial),
                             std::to_string(row.seed), format_double(row.final_value),
                             row.fe_at_acceptance ? std::to_string(*row.fe_at_acceptance) : "",
                             format_double(row.wall_time)});
        }
        finish(out, path);
    }
    {
        const auto path = dir / "ttests.csv";
        auto out = open_for_write(path);
        out << "reference,algorithm,problem,t_value,p_value,dof,significant_at_005\n";
        for (const auto& row : report.ttests) {
            out << join_row({row.reference, row.algorithm, row.problem,
                             format_double(row.result.t_value), format_double(row.result.p_value),
                             format_double(row.result.dof),
                             row.result.significant_at_005 ? "1" : "0"});
        }
        finish(out, path);
    }
    for (const auto& cell : report.cells) {
        for (std::size_t t = 0; t < cell.traces.size(); ++t) {
            const auto path = trace_path(dir, cell.algorithm, cell.problem, t);
            auto out = open_for_write(path);
            const Trace& trace = cell.traces[t];
            out << "iteration,fe_count,best_value,f,mu\n";
            for (std::size_t i = 0; i < trace.iteration.size(); ++i) {
                out << trace.iteration[i] << ',' << trace.fe_count[i] << ','
                    << format_double(trace.best_value[i]) << ',' << format_double(trace.f[i])
                    << ',' << format_double(trace.mu[i]) << '\n';
            }
            finish(out, path);
        }
    }
    {
        const auto path = dir / "spec.json";
        auto out = open_for_write(path);
        out << spec_to_json(report.spec) << '\n';
        finish(out, path);
    }
    {
        const auto path = dir / "provenance.txt";
        auto out = open_for_write(path);
        const auto& spec = report.spec;
        out << "tool_version: " << kToolVersion << '\n'
            << "spec_format: " << kSpecFormat << '\n'
            << "spec_hash: " << report.spec_hash << '\n'
            << "experiment: " << spec.name << '\n'
            << "master_seed: " << spec.master_seed << '\n'
            << "n_trials: " << spec.n_trials << '\n'
            << "simd_backend: " << report.simd_backend << '\n'
            << "rng: mt19937_64, uniform = (next() >> 11) * 2^-53\n"
            << "seed_mixing: mix_seed(a, b) = splitmix64(a ^ splitmix64(b + 0x9E3779B97F4A7C15))\n"
            << "cell_seed: mix_seed(mix_seed(master_seed, algorithm_index), problem_index)\n"
            << "trial_stream_seed: mix_seed(cell_seed, trial_index)\n"
            << "fe_convention: initialization counts N evaluations; total = N * (max_iters + 1)\n"
            << "trace_points: " << spec.trace_points << '\n'
            << "cells:\n";
        for (const auto& cell : report.cells) {
            out << "  - algorithm: " << cell.algorithm << '\n'
                << "    algorithm_index: " << cell.algorithm_index << '\n'
                << "    problem: " << cell.problem << '\n'
                << "    problem_index: " << cell.problem_index << '\n'
                << "    D: " << cell.dimension << '\n'
                << "    N: " << cell.population << '\n'
                << "    cell_seed: " << cell.cell_seed << '\n';
            if (cell.rotation_seed) out << "    rotation_seed: " << *cell.rotation_seed << '\n';
        }
        finish(out, path);
    }
}

}  // namespace savl
