#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace savl {

struct ExperimentReport;

/// Shortest decimal string that parses back to the same double ("inf", "-inf", "nan"
/// for non-finite values).
std::string format_double(double value);
/// Throws ConfigError on malformed input.
double parse_double(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws ConfigError if missing.
    std::size_t column(std::string_view name) const;
};

/// RFC 4180 style: fields containing a comma, quote or newline are quoted.
std::string csv_escape(std::string_view field);
CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

struct SummaryRow {
    std::string algorithm;
    std::string problem;
    std::size_t dimension = 0;
    std::size_t population = 0;
    double mean = 0.0;
    double std = 0.0;
    double success_ratio = 0.0;
    std::optional<double> expected_fes;
    std::size_t n_trials = 0;

    friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct TrialRow {
    std::string algorithm;
    std::string problem;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    double final_value = 0.0;
    std::optional<std::uint64_t> fe_at_acceptance;
    double wall_time = 0.0;

    friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

std::vector<SummaryRow> summary_rows(const ExperimentReport& report);
std::vector<TrialRow> trial_rows(const ExperimentReport& report);
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);
std::vector<TrialRow> read_trials_csv(const std::filesystem::path& path);

/// Trace file name for one trial: traces/<algorithm>_<problem>_<trial>.csv with
/// characters outside [A-Za-z0-9._-] in labels replaced by '_'.
std::filesystem::path trace_path(const std::filesystem::path& dir, std::string_view algorithm,
                                 std::string_view problem, std::size_t trial);

/// Writes summary.csv, trials.csv, ttests.csv, traces/, provenance.txt and
/// spec.json. Throws IoError with the failing path.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace savl
