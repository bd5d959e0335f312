#include "arrowlab/runner/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "arrowlab/errors.hpp"

namespace arrowlab::runner {

using nlohmann::json;

namespace {

/// Thin view over one JSON object that tracks its key path for error
/// messages and rejects keys nobody consumed.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path)
        : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) {
            throw ConfigError(path_ + ": expected an object");
        }
    }

    std::string key_path(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    bool has(const std::string& key) const { return node_.contains(key); }

    const json& at(const std::string& key) {
        consumed_.push_back(key);
        return node_.at(key);
    }

    void finish() const {
        for (const auto& [key, value] : node_.items()) {
            bool known = false;
            for (const auto& k : consumed_) {
                if (k == key) {
                    known = true;
                    break;
                }
            }
            if (!known) throw ConfigError(key_path(key) + ": unknown key");
        }
    }

    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback,
                          std::uint64_t min_value = 0) {
        if (!has(key)) return fallback;
        const json& v = at(key);
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            throw ConfigError(key_path(key) + ": expected an integer");
        }
        if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
            throw ConfigError(key_path(key) + ": must be non-negative");
        }
        const auto value = v.get<std::uint64_t>();
        if (value < min_value) {
            throw ConfigError(key_path(key) + ": must be at least " +
                              std::to_string(min_value));
        }
        return value;
    }

    int get_int(const std::string& key, int fallback, int min_value,
                int max_value) {
        if (!has(key)) return fallback;
        const json& v = at(key);
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            throw ConfigError(key_path(key) + ": expected an integer");
        }
        const auto value = v.get<std::int64_t>();
        if (value < min_value || value > max_value) {
            throw ConfigError(key_path(key) + ": must be in [" +
                              std::to_string(min_value) + ", " +
                              std::to_string(max_value) + "]");
        }
        return static_cast<int>(value);
    }

    double get_double(const std::string& key, double fallback,
                      double min_exclusive = -std::numeric_limits<double>::infinity()) {
        if (!has(key)) return fallback;
        const json& v = at(key);
        if (!v.is_number()) {
            throw ConfigError(key_path(key) + ": expected a number");
        }
        const double value = v.get<double>();
        if (!(value > min_exclusive)) {
            throw ConfigError(key_path(key) + ": must be greater than " +
                              std::to_string(min_exclusive));
        }
        return value;
    }

    bool get_bool(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const json& v = at(key);
        if (!v.is_boolean()) {
            throw ConfigError(key_path(key) + ": expected a boolean");
        }
        return v.get<bool>();
    }

    std::string get_string(const std::string& key) {
        const json& v = at(key);
        if (!v.is_string()) {
            throw ConfigError(key_path(key) + ": expected a string");
        }
        return v.get<std::string>();
    }

    const json& node() const { return node_; }

private:
    const json& node_;
    std::string path_;
    std::vector<std::string> consumed_;
};

ExperimentParams parse_params(ExperimentKind kind, const json& node) {
    switch (kind) {
        case ExperimentKind::InverseEpr: {
            ObjectReader r(node, "params");
            r.finish();
            return InverseEprParams{};
        }
        case ExperimentKind::MixedMeasurement: {
            ObjectReader r(node, "params");
            MixedMeasurementParams p;
            p.count_disrupted = r.get_bool("count_disrupted", p.count_disrupted);
            r.finish();
            return p;
        }
        case ExperimentKind::HardyChain: {
            ObjectReader r(node, "params");
            HardyChainParams p;
            p.n_atoms = r.get_int("n_atoms", p.n_atoms, 1, 12);
            p.measure_until_found =
                r.get_bool("measure_until_found", p.measure_until_found);
            r.finish();
            return p;
        }
        case ExperimentKind::BellTable: {
            ObjectReader r(node, "params");
            BellTableParams p;
            if (r.has("source")) {
                const std::string source = r.get_string("source");
                if (source == "post_selected") {
                    p.source = BellSource::PostSelected;
                } else if (source == "singlet") {
                    p.source = BellSource::Singlet;
                } else if (source == "z_product") {
                    p.source = BellSource::ZProduct;
                } else {
                    throw ConfigError(
                        "params.source: expected one of post_selected, singlet, "
                        "z_product");
                }
            }
            r.finish();
            return p;
        }
        case ExperimentKind::BilliardBreak: {
            ObjectReader r(node, "params");
            BilliardBreakParams p;
            p.n_targets = r.get_int("n_targets", p.n_targets, 3, 10000);
            p.speed = r.get_double("speed", p.speed, 0.0);
            p.table_width = r.get_double("table_width", p.table_width, 0.0);
            p.table_height = r.get_double("table_height", p.table_height, 0.0);
            p.radius = r.get_double("radius", p.radius, 0.0);
            p.collisions = r.get_u64("collisions", p.collisions, 1);
            p.sample_every = r.get_u64("sample_every", p.sample_every, 1);
            p.grid = r.get_int("grid", p.grid, 2, 4096);
            p.cue_jitter = r.get_double("cue_jitter", p.cue_jitter, -1.0);
            p.perturb_angle = r.get_double("perturb_angle", p.perturb_angle);
            p.perturb_at_collision =
                r.get_u64("perturb_at_collision", p.perturb_at_collision);
            p.perturb_ball = r.get_int("perturb_ball", p.perturb_ball, 0,
                                       p.n_targets);
            if (r.has("diagnostics_path")) {
                p.diagnostics_path = r.get_string("diagnostics_path");
            }
            if (r.has("trajectory_path")) {
                p.trajectory_path = r.get_string("trajectory_path");
            }
            if (p.perturb_angle != 0.0 && p.perturb_at_collision >= p.collisions) {
                throw ConfigError(
                    "params.perturb_at_collision: must be below params.collisions");
            }
            r.finish();
            return p;
        }
        case ExperimentKind::BilliardEcho: {
            ObjectReader r(node, "params");
            BilliardEchoParams p;
            p.n_targets = r.get_int("n_targets", p.n_targets, 3, 10000);
            p.speed = r.get_double("speed", p.speed, 0.0);
            p.table_width = r.get_double("table_width", p.table_width, 0.0);
            p.table_height = r.get_double("table_height", p.table_height, 0.0);
            p.radius = r.get_double("radius", p.radius, 0.0);
            p.collisions = r.get_u64("collisions", p.collisions, 1);
            p.grid = r.get_int("grid", p.grid, 2, 4096);
            p.cue_jitter = r.get_double("cue_jitter", p.cue_jitter, -1.0);
            p.perturb_angle = r.get_double("perturb_angle", p.perturb_angle);
            if (r.has("perturb_leg")) {
                const std::string leg = r.get_string("perturb_leg");
                if (leg == "forward") {
                    p.perturb_leg = billiard::PerturbationSpec::Leg::Forward;
                } else if (leg == "return") {
                    p.perturb_leg = billiard::PerturbationSpec::Leg::Return;
                } else {
                    throw ConfigError(
                        "params.perturb_leg: expected forward or return");
                }
            }
            p.perturb_at_collision =
                r.get_u64("perturb_at_collision", p.perturb_at_collision);
            p.perturb_ball = r.get_int("perturb_ball", p.perturb_ball, 0,
                                       p.n_targets);
            if (p.perturb_at_collision >= p.collisions) {
                throw ConfigError(
                    "params.perturb_at_collision: must be below params.collisions");
            }
            r.finish();
            return p;
        }
    }
    throw ConfigError("experiment: unknown experiment kind");
}

}  // namespace

const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::InverseEpr: return "inverse_epr";
        case ExperimentKind::HardyChain: return "hardy_chain";
        case ExperimentKind::BellTable: return "bell_table";
        case ExperimentKind::MixedMeasurement: return "mixed_measurement";
        case ExperimentKind::BilliardBreak: return "billiard_break";
        case ExperimentKind::BilliardEcho: return "billiard_echo";
    }
    return "?";
}

ExperimentKind experiment_from_string(const std::string& name) {
    for (ExperimentKind kind :
         {ExperimentKind::InverseEpr, ExperimentKind::HardyChain,
          ExperimentKind::BellTable, ExperimentKind::MixedMeasurement,
          ExperimentKind::BilliardBreak, ExperimentKind::BilliardEcho}) {
        if (name == to_string(kind)) return kind;
    }
    throw ConfigError("experiment: unknown experiment '" + name + "'");
}

const char* to_string(OutputFormat format) {
    return format == OutputFormat::Json ? "json" : "csv";
}

OutputFormat format_from_string(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw ConfigError("output.format: expected json or csv, got '" + name + "'");
}

const char* to_string(BellSource source) {
    switch (source) {
        case BellSource::PostSelected: return "post_selected";
        case BellSource::Singlet: return "singlet";
        case BellSource::ZProduct: return "z_product";
    }
    return "?";
}

billiard::BreakRunParams BilliardBreakParams::to_protocol_params() const {
    billiard::BreakRunParams p;
    p.layout.n_targets = n_targets;
    p.layout.speed = speed;
    p.layout.table = {table_width, table_height};
    p.layout.radius = radius;
    p.collisions = collisions;
    p.sample_every = sample_every;
    p.grid = grid;
    p.cue_jitter = cue_jitter;
    if (perturb_angle != 0.0) {
        p.perturbation = billiard::PerturbationSpec{
            billiard::PerturbationSpec::Leg::Forward, perturb_at_collision,
            static_cast<std::size_t>(perturb_ball), perturb_angle};
    }
    return p;
}

billiard::EchoParams BilliardEchoParams::to_protocol_params(bool perturbed) const {
    billiard::EchoParams p;
    p.layout.n_targets = n_targets;
    p.layout.speed = speed;
    p.layout.table = {table_width, table_height};
    p.layout.radius = radius;
    p.collisions = collisions;
    p.grid = grid;
    p.cue_jitter = cue_jitter;
    if (perturbed) {
        p.perturbation = billiard::PerturbationSpec{
            perturb_leg, perturb_at_collision,
            static_cast<std::size_t>(perturb_ball), perturb_angle};
    }
    return p;
}

ExperimentConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    ObjectReader r(root, "");
    ExperimentConfig config;

    if (!r.has("schema_version")) {
        throw ConfigError("schema_version: required key is missing");
    }
    config.schema_version = r.get_int("schema_version", 0, 0, 1 << 20);
    if (config.schema_version != kConfigSchemaVersion) {
        throw ConfigError("schema_version: expected " +
                          std::to_string(kConfigSchemaVersion) + ", got " +
                          std::to_string(config.schema_version));
    }

    if (!r.has("experiment")) {
        throw ConfigError("experiment: required key is missing");
    }
    config.experiment = experiment_from_string(r.get_string("experiment"));

    config.trials = r.get_u64("trials", config.trials, 1);
    config.master_seed = r.get_u64("master_seed", config.master_seed);

    if (r.has("params")) {
        config.params = parse_params(config.experiment, r.at("params"));
    } else {
        config.params = parse_params(config.experiment, json::object());
    }

    if (r.has("output")) {
        ObjectReader out(r.at("output"), "output");
        if (out.has("path")) config.output_path = out.get_string("path");
        if (out.has("format")) {
            config.format = format_from_string(out.get_string("format"));
        }
        out.finish();
    }

    r.finish();
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace arrowlab::runner
