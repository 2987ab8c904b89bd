#include "ifnstat/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace ifnstat {

namespace {

bool wants(const OutputConfig& out, std::string_view format) {
    return std::find(out.formats.begin(), out.formats.end(), format) != out.formats.end();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << contents;
}

std::string trace_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "trace_%03zu.csv", i);
    return buf;
}

std::string format_ratio(double r) {
    std::ostringstream os;
    os << std::setprecision(6) << r;
    return os.str();
}

double final_ratio(const PointTrace& pt) { return pt.trace.points.back().ratio; }

void print_header(std::ostream& out, const ExperimentConfig& c, std::string_view label) {
    out << label << "  mode=" << c.query.mode << "  lambda=" << c.lambda.family << "  epsilon=" << c.query.epsilon
        << "  t=" << c.query.time << "  n_max=" << c.query.n_max << "\n";
}

// Groups grid points by the value of their limit map and summarizes each
// group; the worked examples have one group per piece of the limit.
void print_regions(std::ostream& out, const Analysis& a, const LimitMap& f) {
    struct Region {
        std::vector<const PointTrace*> traces;
    };
    std::map<std::string, Region> regions;
    std::vector<std::string> order;
    for (const auto& pt : a.verdict.traces) {
        const auto key = f(*pt.point).to_string();
        if (!regions.count(key)) order.push_back(key);
        regions[key].traces.push_back(&pt);
    }
    for (const auto& key : order) {
        const auto& r = regions[key];
        bool all_zero = true;
        double worst = 0.0;
        for (const auto* pt : r.traces) {
            all_zero = all_zero && pt->trace.verdict == DensityVerdict::limit_zero;
            worst = std::max(worst, final_ratio(*pt));
        }
        out << "  limit " << key << "  x in [" << r.traces.front()->point->to_string() << ", "
            << r.traces.back()->point->to_string() << "]  points=" << r.traces.size() << "  "
            << (all_zero ? "converges" : "not-converges") << "  max final ratio=" << format_ratio(worst) << "\n";
    }
}

std::vector<Vector> sample_vectors(std::size_t dimension, std::size_t count) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::vector<Vector> out{Vector(dimension, 0.0)};
    while (out.size() < count) {
        Vector v(dimension);
        for (std::size_t i = 0; i < dimension; ++i) v[i] = coord(rng);
        out.push_back(v);
    }
    return out;
}

std::vector<double> sample_times(std::size_t count) {
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(std::pow(10.0, -3.0 + 6.0 * static_cast<double>(i) / static_cast<double>(count - 1)));
    }
    return out;
}

}  // namespace

int exit_code(Verdict v) noexcept {
    switch (v) {
        case Verdict::converges: return kExitConverges;
        case Verdict::fails: return kExitFails;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

IFNorm make_ifn(const SpaceConfig& space) {
    return standard_ifn(norm_by_id(space.norm, space.dimension), op_by_id(space.tnorm), op_by_id(space.tconorm));
}

LambdaSequence make_lambda(const LambdaConfig& lambda) {
    if (lambda.family == "table") return lambda_from_table(lambda.table);
    return lambda_by_id(lambda.family);
}

std::vector<Vector> make_grid(const SequenceConfig& s, std::size_t dimension) {
    if (!s.grid.empty()) {
        std::vector<Vector> out;
        for (double x : s.grid) out.push_back(Vector::scalar(x));
        return out;
    }
    const auto axis = unit_interval_grid(s.grid_points);
    std::vector<Vector> out{Vector()};
    for (std::size_t d = 0; d < dimension; ++d) {
        std::vector<Vector> next;
        next.reserve(out.size() * axis.size());
        for (const auto& prefix : out) {
            for (const auto& x : axis) {
                Vector v(prefix.dimension() + 1);
                for (std::size_t i = 0; i < prefix.dimension(); ++i) v[i] = prefix[i];
                v[prefix.dimension()] = x[0];
                next.push_back(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

ExampleBuild make_sequence(const SequenceConfig& s, const LambdaSequence& lambda, std::size_t dimension) {
    auto grid = make_grid(s, dimension);
    if (s.id == "paper-example-1") return build_example_pointwise(lambda, std::move(grid));
    if (s.id == "paper-example-2") return build_example_uniform(lambda, std::move(grid));
    if (s.id == "shift") return shift_family(std::move(grid));
    if (s.id == "alternating-sign") return alternating_sign(std::move(grid));
    if (s.id == "geometric") {
        LimitMap limit = [dimension](const Vector&) { return Vector(dimension, 0.0); };
        if (s.limit_id == "identity") limit = [](const Vector& x) { return x; };
        return geometric_decay(std::move(grid), limit, s.amplitude, s.ratio);
    }
    if (s.id == "table") return tabulated(std::move(grid), s.rows, s.limit);
    throw std::invalid_argument("unknown sequence id '" + s.id + "'");
}

ConvergenceQuery make_query(const QueryConfig& query, const LambdaSequence& lambda) {
    ConvergenceQuery q;
    q.mode = mode_from_string(query.mode);
    q.epsilon = query.epsilon;
    q.time = query.time;
    q.lambda = lambda;
    q.n_max = query.n_max;
    q.trace_points = query.trace_points;
    return q;
}

IndexPredicate make_index_set(std::string_view id, const LambdaSequence& lambda) {
    if (id == "evens") return [](Index k) { return k % 2 == 0; };
    if (id == "odds") return [](Index k) { return k % 2 != 0; };
    if (id == "squares") return [](Index k) {
        const Index r = ceil_sqrt(k);
        return r * r == k;
    };
    if (id == "all") return [](Index) { return true; };
    if (id == "none") return [](Index) { return false; };
    if (id == "window-set") return window_set(lambda);
    throw std::invalid_argument("unknown index set '" + std::string(id) + "'");
}

Analysis analyze(const ExperimentConfig& config) {
    const auto lambda = make_lambda(config.lambda);
    const auto ifn = make_ifn(config.space);
    auto build = make_sequence(config.sequence, lambda, config.space.dimension);
    Analysis a;
    a.query = make_query(config.query, lambda);
    if (!is_cauchy(a.query.mode)) a.query.candidate_limit = build.limit;
    a.verdict = detect(build.sequence, ifn, a.query);
    a.envelope = to_json(a.verdict, a.query);
    return a;
}

void write_artifacts(const ExperimentConfig& config, const Analysis& a) {
    const std::filesystem::path dir = config.output.directory;
    if (wants(config.output, "json")) write_file(dir / "verdict.json", dump(a.envelope));
    if (wants(config.output, "csv")) {
        for (std::size_t i = 0; i < a.verdict.traces.size(); ++i) {
            std::ostringstream os;
            write_csv(os, a.verdict.traces[i].trace);
            write_file(dir / "traces" / trace_name(i), os.str());
        }
    }
}

int run_analyze(const ExperimentConfig& config, std::ostream& out) {
    const Analysis a = analyze(config);
    write_artifacts(config, a);
    print_header(out, config, config.sequence.id);
    double worst = 0.0;
    for (const auto& pt : a.verdict.traces) worst = std::max(worst, final_ratio(pt));
    out << "  traces=" << a.verdict.traces.size() << "  max final ratio=" << format_ratio(worst) << "\n";
    out << "verdict: " << to_string(a.verdict.verdict) << "\n";
    return exit_code(a.verdict.verdict);
}

int run_density(const ExperimentConfig& config, std::ostream& out) {
    if (!config.index_set) throw ConfigError("config", 0, "density needs an index_set");
    const auto lambda = make_lambda(config.lambda);
    const auto member = make_index_set(*config.index_set, lambda);
    const auto trace =
        density_trace(member, lambda, config.query.n_max, stride_for(config.query.n_max, config.query.trace_points));

    const std::filesystem::path dir = config.output.directory;
    Json envelope = to_json(trace);
    envelope["index_set"] = *config.index_set;
    envelope["lambda"] = lambda.name();
    if (wants(config.output, "json")) write_file(dir / "density.json", dump(envelope));
    if (wants(config.output, "csv")) {
        std::ostringstream os;
        write_csv(os, trace);
        write_file(dir / "density.csv", os.str());
    }

    out << "density  index_set=" << *config.index_set << "  lambda=" << lambda.name()
        << "  n_max=" << config.query.n_max << "\n";
    out << "  final ratio=" << std::setprecision(12) << trace.points.back().ratio << "  members=" << trace.total_members
        << "\n";
    out << "verdict: " << to_string(trace.verdict) << "\n";
    return trace.verdict == DensityVerdict::inconclusive ? kExitInconclusive : kExitConverges;
}

int run_axioms(const ExperimentConfig& config, std::ostream& out) {
    const auto tnorm = op_by_id(config.space.tnorm);
    const auto tconorm = op_by_id(config.space.tconorm);
    const auto ifn = make_ifn(config.space);
    const auto samples = sample_vectors(config.space.dimension, 50);
    const auto times = sample_times(20);

    Json envelope{{"tnorm", tnorm.name()}, {"tconorm", tconorm.name()}, {"norm", config.space.norm}};
    bool ok = true;
    auto section = [&](const std::string& name, const std::vector<AxiomReport>& reports) {
        Json list = Json::array();
        out << name << "\n";
        for (const auto& r : reports) {
            out << "  " << (r.passed ? "pass" : "FAIL") << "  " << r.axiom;
            if (!r.passed) out << "  worst violation " << r.worst_violation;
            out << "\n";
            ok = ok && r.passed;
            list.push_back(to_json(r));
        }
        envelope[name] = std::move(list);
    };
    section("tnorm " + tnorm.name(), certify(tnorm, 101));
    section("tconorm " + tconorm.name(), certify(tconorm, 101));
    section("ifn", certify_ifn(ifn, samples, times));

    if (wants(config.output, "json")) write_file(std::filesystem::path(config.output.directory) / "axioms.json", dump(envelope));
    out << "verdict: " << (ok ? "all axioms pass" : "axiom violations found") << "\n";
    return ok ? kExitConverges : kExitFails;
}

ExperimentConfig reproduce_config(ExampleId id, const std::filesystem::path& out_dir) {
    ExperimentConfig c;
    c.sequence.id = std::string(to_string(id));
    c.sequence.grid_points = 101;
    c.query.mode = id == ExampleId::pointwise ? "pointwise-lambda-stat" : "uniform-lambda-stat";
    c.query.epsilon = 0.1;
    c.query.time = 1.0;
    c.query.n_max = 1000000;
    c.output.directory = out_dir.string();
    return c;
}

int run_reproduce(ExampleId id, const Overrides& overrides, const std::filesystem::path& out_dir, std::ostream& out) {
    ExperimentConfig config = reproduce_config(id, out_dir);
    apply_overrides(config, overrides);
    const Analysis a = analyze(config);
    write_artifacts(config, a);

    print_header(out, config, to_string(id));
    if (id == ExampleId::pointwise) {
        const auto lambda = make_lambda(config.lambda);
        print_regions(out, a, make_sequence(config.sequence, lambda, 1).limit);
    } else {
        const auto& shared = a.verdict.traces.front();
        out << "  limit (0)  shared exceptional set  " << to_string(shared.trace.verdict)
            << "  final ratio=" << format_ratio(final_ratio(shared)) << "\n";
    }
    out << "verdict: " << to_string(a.verdict.verdict) << "\n";
    return exit_code(a.verdict.verdict);
}

}  // namespace ifnstat
