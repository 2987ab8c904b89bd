#include "ifnstat/config.hpp"

#include "ifnstat/convergence.hpp"
#include "ifnstat/ifn_space.hpp"
#include "ifnstat/lambda_density.hpp"
#include "ifnstat/unit_interval.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ifnstat {

namespace {

constexpr std::string_view kSequenceIds[] = {"paper-example-1", "paper-example-2", "shift",
                                              "alternating-sign", "geometric", "table"};
constexpr std::string_view kIndexSets[] = {"evens", "odds", "squares", "all", "none", "window-set"};

template <std::size_t N>
bool one_of(std::string_view s, const std::string_view (&options)[N]) {
    return std::find(std::begin(options), std::end(options), s) != std::end(options);
}

class Parser {
  public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& message) const {
        throw ConfigError(source_, at.Mark().line + 1, message);
    }

    void allow_keys(const YAML::Node& map, std::set<std::string> keys, const std::string& where) const {
        if (!map.IsMap()) fail(map, where + " must be a mapping");
        for (const auto& entry : map) {
            const auto key = entry.first.as<std::string>();
            if (!keys.count(key)) fail(entry.first, "unknown key '" + key + "' in " + where);
        }
    }

    std::string text(const YAML::Node& n, const std::string& what) const {
        if (!n.IsScalar()) fail(n, what + " must be a string");
        return n.as<std::string>();
    }

    double number(const YAML::Node& n, const std::string& what) const {
        if (n.IsScalar()) {
            try {
                return n.as<double>();
            } catch (const YAML::BadConversion&) {
            }
        }
        fail(n, what + " must be a number");
    }

    Index integer(const YAML::Node& n, const std::string& what) const {
        const double v = number(n, what);
        if (v != std::floor(v) || std::fabs(v) > 9.0e15) fail(n, what + " must be an integer");
        return static_cast<Index>(v);
    }

    std::vector<double> numbers(const YAML::Node& n, const std::string& what) const {
        if (!n.IsSequence()) fail(n, what + " must be a list of numbers");
        std::vector<double> out;
        out.reserve(n.size());
        for (const auto& item : n) out.push_back(number(item, what));
        return out;
    }

    SpaceConfig space(const YAML::Node& n) const {
        SpaceConfig c;
        allow_keys(n, {"norm", "tnorm", "tconorm", "dimension"}, "space");
        if (n["dimension"]) {
            const Index d = integer(n["dimension"], "space.dimension");
            if (d < 1) fail(n["dimension"], "space.dimension must be at least 1");
            c.dimension = static_cast<std::size_t>(d);
        }
        if (n["norm"]) c.norm = text(n["norm"], "space.norm");
        if (n["tnorm"]) c.tnorm = text(n["tnorm"], "space.tnorm");
        if (n["tconorm"]) c.tconorm = text(n["tconorm"], "space.tconorm");
        try {
            norm_by_id(c.norm, c.dimension);
        } catch (const std::invalid_argument& e) {
            fail(n["norm"] ? n["norm"] : n, e.what());
        }
        check_op(n, "tnorm", c.tnorm, OpKind::tnorm);
        check_op(n, "tconorm", c.tconorm, OpKind::tconorm);
        return c;
    }

    void check_op(const YAML::Node& space, const char* key, const std::string& id, OpKind kind) const {
        const auto at = space[key] ? space[key] : space;
        try {
            if (op_by_id(id).kind() != kind) fail(at, "'" + id + "' is not a " + key);
        } catch (const std::invalid_argument& e) {
            fail(at, e.what());
        }
    }

    LambdaConfig lambda(const YAML::Node& n) const {
        LambdaConfig c;
        if (n.IsScalar()) {
            c.family = n.as<std::string>();
            if (c.family != "identity" && c.family != "sqrt" && c.family != "log") {
                fail(n, "unknown lambda family '" + c.family + "'");
            }
            return c;
        }
        allow_keys(n, {"table"}, "lambda");
        if (!n["table"]) fail(n, "lambda needs a family name or a table");
        c.family = "table";
        c.table = numbers(n["table"], "lambda.table");
        if (c.table.empty() || c.table.front() != 1.0) fail(n["table"], "lambda table must start with 1");
        return c;
    }

    SequenceConfig sequence(const YAML::Node& n) const {
        SequenceConfig c;
        allow_keys(n, {"id", "grid", "rows", "limit", "amplitude", "ratio"}, "sequence");
        if (n["id"]) c.id = text(n["id"], "sequence.id");
        if (!one_of(c.id, kSequenceIds)) fail(n["id"] ? n["id"] : n, "unknown sequence id '" + c.id + "'");
        if (const auto g = n["grid"]) {
            if (g.IsSequence()) {
                c.grid = numbers(g, "sequence.grid");
                if (c.grid.empty()) fail(g, "sequence.grid must not be empty");
            } else {
                const Index points = integer(g, "sequence.grid");
                if (points < 2) fail(g, "sequence.grid needs at least two points");
                c.grid_points = static_cast<std::size_t>(points);
            }
        }
        if (c.id == "table") {
            if (c.grid.empty()) fail(n, "table sequences need an explicit grid list");
            if (!n["rows"] || !n["rows"].IsSequence()) fail(n, "table sequences need rows");
            for (const auto& row : n["rows"]) {
                c.rows.push_back(numbers(row, "sequence.rows"));
                if (c.rows.back().size() != c.grid.size()) fail(row, "each row needs one value per grid point");
            }
            if (!n["limit"]) fail(n, "table sequences need a limit list");
            c.limit = numbers(n["limit"], "sequence.limit");
            if (c.limit.size() != c.grid.size()) fail(n["limit"], "limit needs one value per grid point");
        } else if (n["rows"]) {
            fail(n["rows"], "rows are only valid for table sequences");
        }
        if (c.id == "geometric") {
            if (n["amplitude"]) c.amplitude = number(n["amplitude"], "sequence.amplitude");
            if (n["ratio"]) c.ratio = number(n["ratio"], "sequence.ratio");
            if (!(c.ratio > 0.0 && c.ratio < 1.0)) fail(n["ratio"] ? n["ratio"] : n, "ratio outside (0,1)");
            if (n["limit"]) c.limit_id = text(n["limit"], "sequence.limit");
            if (c.limit_id != "zero" && c.limit_id != "identity") fail(n["limit"], "geometric limit must be zero or identity");
        } else if (n["amplitude"] || n["ratio"]) {
            fail(n["amplitude"] ? n["amplitude"] : n["ratio"], "amplitude and ratio are only valid for geometric sequences");
        }
        if (n["limit"] && c.id != "table" && c.id != "geometric") {
            fail(n["limit"], "limit is only valid for table and geometric sequences");
        }
        return c;
    }

    QueryConfig query(const YAML::Node& n) const {
        QueryConfig c;
        allow_keys(n, {"mode", "epsilon", "time", "n_max", "trace_points"}, "query");
        if (n["mode"]) {
            c.mode = text(n["mode"], "query.mode");
            try {
                mode_from_string(c.mode);
            } catch (const std::invalid_argument& e) {
                fail(n["mode"], e.what());
            }
        }
        if (n["epsilon"]) {
            c.epsilon = number(n["epsilon"], "query.epsilon");
            if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) fail(n["epsilon"], "epsilon outside (0,1)");
        }
        if (n["time"]) {
            c.time = number(n["time"], "query.time");
            if (!(c.time > 0.0)) fail(n["time"], "time must be positive");
        }
        if (n["n_max"]) {
            c.n_max = integer(n["n_max"], "query.n_max");
            if (c.n_max < 10) fail(n["n_max"], "n_max must be at least 10");
        }
        if (n["trace_points"]) {
            c.trace_points = integer(n["trace_points"], "query.trace_points");
            if (c.trace_points < 1) fail(n["trace_points"], "trace_points must be at least 1");
        }
        return c;
    }

    OutputConfig output(const YAML::Node& n) const {
        OutputConfig c;
        allow_keys(n, {"directory", "formats"}, "output");
        if (n["directory"]) c.directory = text(n["directory"], "output.directory");
        if (const auto f = n["formats"]) {
            if (!f.IsSequence()) fail(f, "output.formats must be a list");
            c.formats.clear();
            for (const auto& item : f) {
                auto format = text(item, "output.formats");
                if (format != "json" && format != "csv") fail(item, "unknown output format '" + format + "'");
                c.formats.push_back(std::move(format));
            }
        }
        return c;
    }

    void cross_check(const YAML::Node& root, const ExperimentConfig& c) const {
        const bool one_dimensional = c.sequence.id.rfind("paper-example", 0) == 0 || c.sequence.id == "table";
        if (one_dimensional && c.space.dimension != 1) {
            fail(root["space"] ? root["space"] : root, "sequence '" + c.sequence.id + "' needs dimension 1");
        }
        if (!c.sequence.grid.empty() && c.space.dimension != 1) {
            fail(root["sequence"], "an explicit grid list needs dimension 1");
        }
        if (c.lambda.family == "table" && static_cast<Index>(c.lambda.table.size()) < c.query.n_max) {
            fail(root["lambda"], "lambda table shorter than n_max");
        }
        if (c.sequence.id == "table" && static_cast<Index>(c.sequence.rows.size()) < c.query.n_max) {
            fail(root["sequence"], "table has fewer rows than n_max");
        }
    }

  private:
    std::string source_;
};

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string flow_list(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_number(values[i]);
    }
    return out + "]";
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message),
      line_(line),
      detail_(message) {}

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ConfigError(source, e.mark.line + 1, e.msg);
    }
    const Parser p(source);
    if (!root.IsMap()) p.fail(root, "config must be a mapping");
    p.allow_keys(root, {"space", "lambda", "sequence", "query", "output", "index_set"}, "config");

    ExperimentConfig c;
    if (root["space"]) c.space = p.space(root["space"]);
    if (root["lambda"]) c.lambda = p.lambda(root["lambda"]);
    if (root["sequence"]) c.sequence = p.sequence(root["sequence"]);
    if (root["query"]) c.query = p.query(root["query"]);
    if (root["output"]) c.output = p.output(root["output"]);
    if (const auto s = root["index_set"]) {
        c.index_set = p.text(s, "index_set");
        if (!one_of(*c.index_set, kIndexSets)) p.fail(s, "unknown index set '" + *c.index_set + "'");
    }
    p.cross_check(root, c);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

std::string dump_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "space:\n"
       << "  norm: " << c.space.norm << "\n"
       << "  tnorm: " << c.space.tnorm << "\n"
       << "  tconorm: " << c.space.tconorm << "\n"
       << "  dimension: " << c.space.dimension << "\n";
    if (c.lambda.family == "table") {
        os << "lambda:\n  table: " << flow_list(c.lambda.table) << "\n";
    } else {
        os << "lambda: " << c.lambda.family << "\n";
    }
    const auto& s = c.sequence;
    os << "sequence:\n  id: " << s.id << "\n";
    if (s.grid.empty()) {
        os << "  grid: " << s.grid_points << "\n";
    } else {
        os << "  grid: " << flow_list(s.grid) << "\n";
    }
    if (s.id == "table") {
        os << "  rows:\n";
        for (const auto& row : s.rows) os << "    - " << flow_list(row) << "\n";
        os << "  limit: " << flow_list(s.limit) << "\n";
    }
    if (s.id == "geometric") {
        os << "  amplitude: " << format_number(s.amplitude) << "\n"
           << "  ratio: " << format_number(s.ratio) << "\n"
           << "  limit: " << s.limit_id << "\n";
    }
    os << "query:\n"
       << "  mode: " << c.query.mode << "\n"
       << "  epsilon: " << format_number(c.query.epsilon) << "\n"
       << "  time: " << format_number(c.query.time) << "\n"
       << "  n_max: " << c.query.n_max << "\n"
       << "  trace_points: " << c.query.trace_points << "\n";
    if (c.index_set) os << "index_set: " << *c.index_set << "\n";
    os << "output:\n  directory: " << c.output.directory << "\n  formats: [";
    for (std::size_t i = 0; i < c.output.formats.size(); ++i) os << (i ? ", " : "") << c.output.formats[i];
    os << "]\n";
    return os.str();
}

void apply_overrides(ExperimentConfig& c, const Overrides& o) {
    const std::string source = "command line";
    if (o.n_max) {
        if (*o.n_max < 10) throw ConfigError(source, 0, "n_max must be at least 10");
        c.query.n_max = *o.n_max;
    }
    if (o.epsilon) {
        if (!(*o.epsilon > 0.0 && *o.epsilon < 1.0)) throw ConfigError(source, 0, "epsilon outside (0,1)");
        c.query.epsilon = *o.epsilon;
    }
    if (o.time) {
        if (!(*o.time > 0.0)) throw ConfigError(source, 0, "time must be positive");
        c.query.time = *o.time;
    }
    if (o.lambda) {
        if (*o.lambda != "identity" && *o.lambda != "sqrt" && *o.lambda != "log") {
            throw ConfigError(source, 0, "unknown lambda family '" + *o.lambda + "'");
        }
        c.lambda = LambdaConfig{*o.lambda, {}};
    }
    if (c.lambda.family == "table" && static_cast<Index>(c.lambda.table.size()) < c.query.n_max) {
        throw ConfigError(source, 0, "lambda table shorter than n_max");
    }
    if (c.sequence.id == "table" && static_cast<Index>(c.sequence.rows.size()) < c.query.n_max) {
        throw ConfigError(source, 0, "table has fewer rows than n_max");
    }
}

}  // namespace ifnstat
