#include "ifnstat/paper_examples.hpp"

#include <cmath>
#include <stdexcept>

namespace ifnstat {

namespace {

Index ceil_sqrt_of(double v) {
    if (v >= 0.0 && v < 9.0e15 && v == std::floor(v)) return ceil_sqrt(static_cast<Index>(v));
    return static_cast<Index>(std::ceil(std::sqrt(v)));
}

void check_unit_grid(const std::vector<Vector>& grid) {
    if (grid.empty()) throw std::invalid_argument("example grid must not be empty");
    for (const auto& x : grid) {
        if (x.dimension() != 1 || !(x[0] >= 0.0 && x[0] <= 1.0)) {
            throw std::invalid_argument("example grid must be one-dimensional and inside [0,1]");
        }
    }
}

void check_lambda(const LambdaSequence& lambda) {
    if (lambda(1) != 1.0) throw std::invalid_argument("lambda_1 must equal 1");
}

}  // namespace

ExampleId example_from_string(std::string_view id) {
    if (id == "paper-example-1" || id == "example-1") return ExampleId::pointwise;
    if (id == "paper-example-2" || id == "example-2") return ExampleId::uniform;
    throw std::invalid_argument("unknown example id '" + std::string(id) + "'");
}

std::string_view to_string(ExampleId id) {
    return id == ExampleId::pointwise ? "paper-example-1" : "paper-example-2";
}

bool in_window_set(const LambdaSequence& lambda, Index k) {
    if (k < 2) return false;
    return ceil_sqrt_of(lambda(k)) > ceil_sqrt_of(lambda(k - 1));
}

IndexPredicate window_set(const LambdaSequence& lambda) {
    return [lambda](Index k) { return in_window_set(lambda, k); };
}

std::vector<Vector> unit_interval_grid(std::size_t points) {
    if (points < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<Vector> grid;
    grid.reserve(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid.push_back(Vector::scalar(static_cast<double>(i) / last));
    return grid;
}

double unit_power(double x, Index k) {
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    // Deep underflow flushes to 0 instead of producing denormals.
    const double log_value = static_cast<double>(k) * std::log(x);
    return log_value < -700.0 ? 0.0 : std::exp(log_value);
}

ExampleBuild build_example_pointwise(const LambdaSequence& lambda, std::vector<Vector> grid) {
    check_lambda(lambda);
    check_unit_grid(grid);
    auto fn = [lambda](Index k, const Vector& p) {
        const double x = p[0];
        if (x == 1.0) return Vector::scalar(2.0);
        const bool gated = in_window_set(lambda, k);
        if (x < 0.5) return Vector::scalar(gated ? unit_power(x, k) + 1.0 : 0.0);
        return Vector::scalar(gated ? unit_power(x, k) + 0.5 : 1.0);
    };
    auto limit = [](const Vector& p) {
        const double x = p[0];
        if (x == 1.0) return Vector::scalar(2.0);
        return Vector::scalar(x < 0.5 ? 0.0 : 1.0);
    };
    return {FunctionSequence(fn, std::move(grid), "paper-example-1 (lambda=" + lambda.name() + ")"), limit};
}

ExampleBuild build_example_uniform(const LambdaSequence& lambda, std::vector<Vector> grid) {
    check_lambda(lambda);
    check_unit_grid(grid);
    auto fn = [lambda](Index k, const Vector& p) {
        return Vector::scalar(in_window_set(lambda, k) ? unit_power(p[0], k) + 1.0 : 0.0);
    };
    auto limit = [](const Vector&) { return Vector::scalar(0.0); };
    return {FunctionSequence(fn, std::move(grid), "paper-example-2 (lambda=" + lambda.name() + ")"), limit};
}

ExampleBuild build_example(const ExampleSpec& spec) {
    return spec.id == ExampleId::pointwise ? build_example_pointwise(spec.lambda, spec.grid)
                                           : build_example_uniform(spec.lambda, spec.grid);
}

ExampleBuild shift_family(std::vector<Vector> grid) {
    auto fn = [](Index k, const Vector& x) {
        Vector out = x;
        for (std::size_t i = 0; i < out.dimension(); ++i) out[i] += 1.0 / static_cast<double>(k);
        return out;
    };
    auto limit = [](const Vector& x) { return x; };
    return {FunctionSequence(fn, std::move(grid), "x + 1/k"), limit};
}

ExampleBuild alternating_sign(std::vector<Vector> grid) {
    auto fn = [](Index k, const Vector&) { return Vector::scalar(k % 2 == 0 ? 1.0 : -1.0); };
    auto limit = [](const Vector&) { return Vector::scalar(0.0); };
    return {FunctionSequence(fn, std::move(grid), "(-1)^k"), limit};
}

ExampleBuild geometric_decay(std::vector<Vector> grid, LimitMap limit, double amplitude, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("geometric_decay: ratio must lie in (0,1)");
    auto fn = [limit, amplitude, ratio](Index k, const Vector& x) {
        Vector out = limit(x);
        const double offset = amplitude * std::pow(ratio, static_cast<double>(k));
        for (std::size_t i = 0; i < out.dimension(); ++i) out[i] += offset;
        return out;
    };
    return {FunctionSequence(fn, std::move(grid), "limit + a*r^k"), limit};
}

ExampleBuild tabulated(std::vector<Vector> grid, std::vector<std::vector<double>> rows, std::vector<double> limit) {
    if (limit.size() != grid.size()) throw std::invalid_argument("tabulated: limit needs one value per grid point");
    for (const auto& row : rows) {
        if (row.size() != grid.size()) throw std::invalid_argument("tabulated: each row needs one value per grid point");
    }
    auto locate = [grid](const Vector& x) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] == x) return i;
        }
        throw std::out_of_range("tabulated: point " + x.to_string() + " is not on the grid");
    };
    auto fn = [rows = std::move(rows), locate](Index k, const Vector& x) {
        if (k < 1 || static_cast<std::size_t>(k) > rows.size()) {
            throw std::out_of_range("tabulated: no row for k = " + std::to_string(k));
        }
        return Vector::scalar(rows[static_cast<std::size_t>(k - 1)][locate(x)]);
    };
    auto f = [limit = std::move(limit), locate](const Vector& x) { return Vector::scalar(limit[locate(x)]); };
    return {FunctionSequence(fn, std::move(grid), "table"), f};
}

}  // namespace ifnstat
