#include "savl/spec_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace savl {
namespace {

using nlohmann::json;

json algorithm_to_json(const AlgorithmSpec& algorithm) {
    const RunConfig& c = algorithm.config;
    json vl = {{"kind", std::string(to_string(c.vl_strategy.kind))}};
    switch (c.vl_strategy.kind) {
    case VlKind::Fixed:
        vl["mu_fixed"] = c.vl_strategy.mu_fixed;
        break;
    default:
        vl["mu_min"] = c.vl_strategy.mu_min;
        vl["mu_max"] = c.vl_strategy.mu_max;
        break;
    }
    return {{"label", algorithm.label},
            {"population", c.population},
            {"max_iters", c.max_iters},
            {"inertia_start", c.inertia_start},
            {"inertia_end", c.inertia_end},
            {"c1", c.c1},
            {"c2", c.c2},
            {"limit_handling", std::string(to_string(c.limit_handling))},
            {"vl", vl}};
}

template <typename T>
T field_or(const json& object, const char* key, T fallback, const std::string& where) {
    if (!object.contains(key)) return fallback;
    try {
        return object.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + ": field '" + key + "' has the wrong type");
    }
}

template <typename T>
T required(const json& object, const char* key, const std::string& where) {
    if (!object.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
    return field_or<T>(object, key, T{}, where);
}

AlgorithmSpec algorithm_from_json(const json& j, std::size_t index) {
    const std::string where = "algorithms[" + std::to_string(index) + "]";
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    AlgorithmSpec out;
    out.label = required<std::string>(j, "label", where);
    RunConfig& c = out.config;
    c.population = field_or<std::size_t>(j, "population", c.population, where);
    c.max_iters = field_or<std::size_t>(j, "max_iters", c.max_iters, where);
    c.inertia_start = field_or<double>(j, "inertia_start", c.inertia_start, where);
    c.inertia_end = field_or<double>(j, "inertia_end", c.inertia_end, where);
    c.c1 = field_or<double>(j, "c1", c.c1, where);
    c.c2 = field_or<double>(j, "c2", c.c2, where);
    c.limit_handling = parse_limit_handling(
        field_or<std::string>(j, "limit_handling", "state-coupled", where));
    if (j.contains("vl")) {
        const json& vl = j.at("vl");
        const VlKind kind = parse_vl_kind(field_or<std::string>(vl, "kind", "state-based", where));
        const double mu_min = field_or<double>(vl, "mu_min", 0.4, where);
        const double mu_max = field_or<double>(vl, "mu_max", 0.7, where);
        switch (kind) {
        case VlKind::StateBased:
            c.vl_strategy = VlStrategyConfig::state_based(mu_min, mu_max);
            break;
        case VlKind::Fixed:
            c.vl_strategy = VlStrategyConfig::fixed(
                field_or<double>(vl, "mu_fixed", VlStrategyConfig::kDefaultMuFixed, where));
            break;
        case VlKind::IterationLinear:
            c.vl_strategy = VlStrategyConfig::iteration_linear(mu_min, mu_max);
            break;
        }
    }
    return out;
}

}  // namespace

std::string spec_to_json(const ExperimentSpec& spec) {
    json problems = json::array();
    for (const auto& p : spec.problems) {
        json entry = {{"name", p.name}, {"dimension", p.dimension}};
        if (p.population) entry["population"] = *p.population;
        if (p.rotation_seed) entry["rotation_seed"] = *p.rotation_seed;
        problems.push_back(std::move(entry));
    }
    json algorithms = json::array();
    for (const auto& a : spec.algorithms) algorithms.push_back(algorithm_to_json(a));
    json doc = {{"format", std::string(kSpecFormat)},
                {"name", spec.name},
                {"trials", spec.n_trials},
                {"seed", spec.master_seed},
                {"output_dir", spec.output_dir.generic_string()},
                {"trace_points", spec.trace_points},
                {"problems", problems},
                {"algorithms", algorithms}};
    if (!spec.reference.empty()) doc["reference"] = spec.reference;
    return doc.dump(2);
}

ExperimentSpec spec_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("spec: top level must be an object");
    const std::string format = field_or<std::string>(doc, "format", std::string(kSpecFormat), "spec");
    if (format != kSpecFormat) {
        throw ConfigError("spec: unsupported format '" + format + "'");
    }
    ExperimentSpec spec;
    spec.name = field_or<std::string>(doc, "name", "experiment", "spec");
    spec.n_trials = field_or<std::size_t>(doc, "trials", spec.n_trials, "spec");
    spec.master_seed = field_or<std::uint64_t>(doc, "seed", spec.master_seed, "spec");
    spec.output_dir = field_or<std::string>(doc, "output_dir", "results/" + spec.name, "spec");
    spec.reference = field_or<std::string>(doc, "reference", "", "spec");
    spec.trace_points = field_or<std::size_t>(doc, "trace_points", spec.trace_points, "spec");
    if (!doc.contains("problems") || !doc.at("problems").is_array()) {
        throw ConfigError("spec: 'problems' must be an array");
    }
    std::size_t index = 0;
    for (const json& p : doc.at("problems")) {
        const std::string where = "problems[" + std::to_string(index++) + "]";
        ProblemSpec problem;
        problem.name = required<std::string>(p, "name", where);
        problem.dimension = required<std::size_t>(p, "dimension", where);
        if (p.contains("population")) {
            problem.population = required<std::size_t>(p, "population", where);
        }
        if (p.contains("rotation_seed")) {
            problem.rotation_seed = required<std::uint64_t>(p, "rotation_seed", where);
        }
        spec.problems.push_back(std::move(problem));
    }
    if (!doc.contains("algorithms") || !doc.at("algorithms").is_array()) {
        throw ConfigError("spec: 'algorithms' must be an array");
    }
    index = 0;
    for (const json& a : doc.at("algorithms")) {
        spec.algorithms.push_back(algorithm_from_json(a, index++));
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open spec file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spec_from_json(buffer.str());
}

void save_experiment_spec(const ExperimentSpec& spec, const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    out << spec_to_json(spec) << '\n';
    if (!out) throw IoError(path, "write failed");
}

std::string spec_hash(const ExperimentSpec& spec) {
    // Where results go does not change what is computed.
    ExperimentSpec canonical = spec;
    canonical.output_dir.clear();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : spec_to_json(canonical)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char text[17];
    std::snprintf(text, sizeof text, "%016llx", static_cast<unsigned long long>(hash));
    return text;
}

}  // namespace savl
