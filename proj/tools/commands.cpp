#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "asearch/analog.hpp"
#include "asearch/bound.hpp"
#include "asearch/errors.hpp"
#include "asearch/grover.hpp"
#include "asearch/linalg.hpp"
#include "asearch/rng.hpp"
#include "asearch/statistics.hpp"

#ifndef ASEARCH_VERSION
#define ASEARCH_VERSION "unknown"
#endif

namespace asearch::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "v1";

// Above this dimension `analog` propagates matrix-free instead of through a
// dense eigensystem.
constexpr std::size_t kDenseAnalogLimit = 256;

constexpr double kAnalogTolerance = 1e-8;
constexpr double kGroverTolerance = 1e-9;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::size_t n = 0;
    double energy = 1.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
};

struct AnalogConfig : Common {
    std::optional<double> dt;
    std::optional<double> horizon;
    std::size_t marked = 0;
    bool random_marked = false;
    bool marked_is_start = false;
};

struct GroverConfig : Common {
    std::optional<std::size_t> iterations;
    std::size_t marked = 0;
    std::size_t shots = 0;
};

struct BoundConfig : Common {
    std::optional<double> dt;
    std::optional<double> horizon;
    double epsilon = 1.0;
    std::string driver = "paper";
    double driver_norm_mult = 1.0;
    std::size_t segments = 10;
};

struct StatsConfig : Common {
    std::size_t samples = 100000;
};

// A report is a JSON document plus, for CSV output, one table. The CSV form
// carries every non-series JSON field as a leading "# key: value" line.
struct Report {
    json doc;
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
    // Top-level keys holding the table (or bulky arrays) in JSON form; left
    // out of the CSV preamble.
    std::vector<std::string> table_keys;
    bool passed = true;
    std::string diagnostic;
};

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json complex_array(const StateVector& v)
{
    json arr = json::array();
    for (const Complex& a : v.amplitudes()) {
        arr.push_back(json::array({a.real(), a.imag()}));
    }
    return arr;
}

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

json common_config(const Common& c)
{
    return json{{"n", c.n}, {"energy", c.energy}, {"seed", c.seed}, {"format", c.format}};
}

json header(const std::string& command)
{
    return json{{"schema", kSchema}, {"tool", "asearch"}, {"tool_version", ASEARCH_VERSION}, {"command", command}};
}

void write_csv(const Report& r, std::ostream& os)
{
    for (const auto& [key, value] : r.doc.items()) {
        if (std::find(r.table_keys.begin(), r.table_keys.end(), key) != r.table_keys.end()) {
            continue;
        }
        os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        os << (i ? "," : "") << r.columns[i];
    }
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                os << ',';
            }
            if (row[i]) {
                os << format_double(*row[i]);
            }
        }
        os << '\n';
    }
}

void emit(const Report& r, const Common& c, std::ostream& out)
{
    std::ofstream file;
    std::ostream* os = &out;
    if (!c.out.empty() && c.out != "-") {
        file.open(c.out, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open output file " + c.out);
        }
        os = &file;
    }
    if (c.format == "csv") {
        write_csv(r, *os);
    } else {
        *os << r.doc.dump(2) << '\n';
    }
    os->flush();
    if (!*os) {
        throw std::runtime_error("failed writing report");
    }
}

void require_energy(double energy)
{
    if (!(energy > 0.0) || !std::isfinite(energy)) {
        throw UsageError("--energy must be positive");
    }
}

double positive_or(const std::optional<double>& v, double fallback, const char* flag)
{
    if (!v) {
        return fallback;
    }
    if (!(*v > 0.0) || !std::isfinite(*v)) {
        throw UsageError(std::string(flag) + " must be positive");
    }
    return *v;
}

// ---------------------------------------------------------------- analog

Report analog(const AnalogConfig& c)
{
    if (c.n < 2) {
        throw UsageError("--n must be at least 2");
    }
    require_energy(c.energy);
    if (!c.random_marked && !c.marked_is_start && c.marked >= c.n) {
        throw UsageError("--marked must be below --n");
    }

    const StateVector s = StateVector::uniform(c.n);
    Rng rng(c.seed);
    std::string w_source = "index";
    StateVector w = s;
    if (c.marked_is_start) {
        w_source = "start";
    } else if (c.random_marked) {
        w_source = "random";
        w = random_state(c.n, rng);
    } else {
        w = StateVector::basis(c.n, c.marked);
    }

    const RankOneHamiltonian oracle(c.energy, w);
    const RankOneHamiltonian driver(c.energy, s);
    const TwoLevelSystem sys = two_level_system(oracle, driver);
    const double t_m = measurement_time(sys);
    const double dt = positive_or(c.dt, t_m / 500.0, "--dt");
    const double horizon = positive_or(c.horizon, 2.0 * t_m, "--horizon");
    const std::vector<double> grid = uniform_grid(dt, horizon);
    const auto [lambda_minus, lambda_plus] = two_level_eigenvalues(sys);

    std::optional<ReducedBasis> basis;
    try {
        basis = reduced_basis(s, w);
    } catch (const DegenerateOverlapError&) {
        // s = w: nothing to rotate, the state stays on |w> up to phase.
    }

    // Full-space evolution of |s>, either through the dense eigensystem or
    // step by step with the matrix-free series.
    const bool dense = c.n <= kDenseAnalogLimit;
    std::optional<Propagator> prop;
    std::vector<Complex> coeffs;
    LinearMap map = [&](std::span<const Complex> x, std::span<Complex> y) {
        std::fill(y.begin(), y.end(), Complex(0.0));
        oracle.apply_add(x, y);
        driver.apply_add(x, y);
    };
    const double norm_bound = 2.0 * c.energy;
    if (dense) {
        prop.emplace(assemble_search_hamiltonian(oracle, driver));
        coeffs = prop->coefficients(s.amplitudes());
    }
    std::vector<Complex> buffer(c.n);
    auto full_state_at = [&](double t) {
        prop->evaluate(coeffs, t, buffer);
        return StateVector::unitary_image(buffer);
    };

    Report r;
    r.columns = {"t", "P_closed_form", "P_full_space", "abs_difference"};
    double max_dev = 0.0;
    double max_state_dev = 0.0;
    double max_residual = 0.0;
    StateVector psi = s;
    json series = json::array();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid[j];
        if (dense) {
            psi = full_state_at(t);
        } else if (j > 0) {
            psi = taylor_propagate(map, norm_bound, t - grid[j - 1], psi);
        }
        const double p_closed = success_probability(sys, t);
        const double p_full = std::norm(inner_product(w, psi));
        const double diff = std::abs(p_closed - p_full);
        max_dev = std::max(max_dev, diff);
        if (basis) {
            const StateVector closed = basis->embed(evolve_closed_form(sys, t));
            max_state_dev = std::max(max_state_dev, std::sqrt(distance_squared(psi.amplitudes(), closed.amplitudes())));
            max_residual = std::max(max_residual, basis->residual_norm(psi));
        }
        r.rows.push_back({t, p_closed, p_full, diff});
        series.push_back(json{{"t", t}, {"P_closed_form", p_closed}, {"P_full_space", p_full}, {"abs_difference", diff}});
    }

    const StateVector at_tm = dense ? full_state_at(t_m) : taylor_propagate(map, norm_bound, t_m, s);
    const double p_full_tm = std::norm(inner_product(w, at_tm));

    r.passed = max_dev < kAnalogTolerance;
    if (!r.passed) {
        r.diagnostic = "closed-form and full-space probabilities differ by " + format_double(max_dev);
    }

    json config = common_config(c);
    config["dt"] = dt;
    config["horizon"] = horizon;
    config["marked_source"] = w_source;
    if (w_source == "index") {
        config["marked"] = c.marked;
    }

    r.doc = header("analog");
    r.doc["config"] = config;
    r.doc["derived"] = json{{"overlap_x", sys.overlap()},
                            {"t_m", t_m},
                            {"eigenvalues", json::array({lambda_minus, lambda_plus})},
                            {"rotation_rate", c.energy * sys.overlap()},
                            {"propagator", dense ? "dense-eigensystem" : "taylor-matrix-free"}};
    r.doc["summary"] = json{{"max_abs_difference", max_dev},
                            {"max_state_distance", basis ? json(max_state_dev) : json(nullptr)},
                            {"max_subspace_residual", basis ? json(max_residual) : json(nullptr)},
                            {"P_closed_form_at_t_m", success_probability(sys, t_m)},
                            {"P_full_space_at_t_m", p_full_tm},
                            {"tolerance", kAnalogTolerance},
                            {"passed", r.passed}};
    r.doc["start_state"] = complex_array(s);
    r.doc["marked_state"] = complex_array(w);
    r.doc["series"] = std::move(series);
    r.table_keys = {"start_state", "marked_state", "series"};
    return r;
}

// ---------------------------------------------------------------- grover

Report grover(const GroverConfig& c)
{
    if (c.n < 2) {
        throw UsageError("--n must be at least 2");
    }
    require_energy(c.energy);
    if (c.marked >= c.n) {
        throw UsageError("--marked must be below --n");
    }

    const GroverInstance inst(c.n, c.marked);
    const double theta = rotation_angle(c.n);
    const std::size_t k_star = optimal_iterations(c.n);
    const std::size_t k_max = c.iterations.value_or(k_star);
    const GroverRun run = run_grover(inst, k_max);

    Report r;
    r.columns = {"k", "P_full", "P_reduced", "oracle_calls"};
    json series = json::array();
    double max_dev = 0.0;
    for (std::size_t k = 0; k <= k_max; ++k) {
        const double p_full = run.probabilities[k];
        const double p_red = reduced_success_probability(c.n, k);
        max_dev = std::max(max_dev, std::abs(p_full - p_red));
        const auto calls = static_cast<double>(2 * k);
        r.rows.push_back({static_cast<double>(k), p_full, p_red, calls});
        series.push_back(json{{"k", k}, {"P_full", p_full}, {"P_reduced", p_red}, {"oracle_calls", 2 * k}});
    }

    // Per-step rotation read off the simulated amplitudes.
    std::optional<double> cos_measured_dev;
    std::optional<double> cos_measured_first;
    for (std::size_t k = 1; k < run.plane_angles.size(); ++k) {
        const double cos_step = std::cos(run.plane_angles[k] - run.plane_angles[k - 1]);
        const double dev = std::abs(cos_step - (1.0 - 2.0 / static_cast<double>(c.n)));
        if (!cos_measured_first) {
            cos_measured_first = cos_step;
        }
        cos_measured_dev = std::max(cos_measured_dev.value_or(0.0), dev);
    }

    // The continuous counterpart with the same overlap x = N^{-1/2}.
    const double x = 1.0 / std::sqrt(static_cast<double>(c.n));
    const TwoLevelSystem sys(c.energy, x, c.n);
    const double t_m = measurement_time(sys);
    const double threshold = 1.0 - 1.0 / static_cast<double>(c.n);
    const double p_digital = reduced_success_probability(c.n, k_star);
    const double p_analog = success_probability(sys, t_m);

    json shots = nullptr;
    if (c.shots > 0) {
        Rng rng(c.seed);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < c.shots; ++i) {
            hits += sample_measurement(run.final_state, rng) == c.marked ? 1 : 0;
        }
        shots = json{{"shots", c.shots}, {"hits", hits},
                     {"hit_fraction", static_cast<double>(hits) / static_cast<double>(c.shots)}};
    }

    r.passed = max_dev < kGroverTolerance;
    if (!r.passed) {
        r.diagnostic = "full-space and reduced probabilities differ by " + format_double(max_dev);
    }

    json config = common_config(c);
    config["marked"] = c.marked;
    config["iterations"] = k_max;
    config["shots"] = c.shots;

    r.doc = header("grover");
    r.doc["config"] = config;
    r.doc["derived"] = json{{"theta", theta},
                            {"cos_theta", 1.0 - 2.0 / static_cast<double>(c.n)},
                            {"cos_theta_measured", optional_number(cos_measured_first)},
                            {"cos_theta_max_deviation", optional_number(cos_measured_dev)},
                            {"k_star", k_star},
                            {"P_at_k_star", p_digital}};
    r.doc["analog_correspondence"] = json{{"overlap_x", x},
                                          {"t_m", t_m},
                                          {"t_m_E_x", t_m * c.energy * x},
                                          {"k_star_theta", static_cast<double>(k_star) * theta},
                                          {"P_analog_at_t_m", p_analog},
                                          {"P_digital_at_k_star", p_digital},
                                          {"threshold", threshold},
                                          {"both_reach_threshold",
                                           p_analog >= threshold - 1e-12 && p_digital >= threshold - 1e-12}};
    r.doc["summary"] = json{{"max_abs_difference", max_dev},
                            {"oracle_calls", run.oracle_calls},
                            {"P_final", run.probabilities.back()},
                            {"measurements", shots},
                            {"tolerance", kGroverTolerance},
                            {"passed", r.passed}};
    r.doc["series"] = std::move(series);
    r.table_keys = {"series"};
    return r;
}

// ---------------------------------------------------------------- bound

DriverSchedule make_driver(const BoundConfig& c, const StateVector& s, double horizon, Rng& rng)
{
    const double scale = c.driver_norm_mult * c.energy;
    if (c.driver == "paper") {
        return paper_driver(scale, s, horizon);
    }
    if (c.driver == "zero") {
        return zero_driver(c.n, horizon);
    }
    if (c.driver == "random-dense") {
        return random_dense_driver(c.n, scale, horizon, rng);
    }
    return random_piecewise_driver(c.n, scale, c.segments, horizon, rng);
}

Report bound(const BoundConfig& c)
{
    if (c.n < 2) {
        throw UsageError("--n must be at least 2");
    }
    require_energy(c.energy);
    if (!(c.driver_norm_mult > 0.0) || !std::isfinite(c.driver_norm_mult)) {
        throw UsageError("--driver-norm-mult must be positive");
    }
    if (!(c.epsilon > 0.0) || c.epsilon > 4.0) {
        throw UsageError("--epsilon must lie in (0, 4]");
    }
    if (c.segments == 0) {
        throw UsageError("--segments must be positive");
    }

    const double sqrt_n = std::sqrt(static_cast<double>(c.n));
    // Measurement time of the rank-one construction with x = N^{-1/2}.
    const double t_m = std::numbers::pi * sqrt_n / (2.0 * c.energy);
    const double dt = positive_or(c.dt, t_m / 500.0, "--dt");
    const double horizon = positive_or(c.horizon, 2.0 * t_m, "--horizon");
    const std::vector<double> grid = uniform_grid(dt, horizon);

    const StateVector s = StateVector::uniform(c.n);
    Rng rng(c.seed);
    const DriverSchedule driver = make_driver(c, s, std::max(horizon, t_m), rng);
    const std::vector<StateVector> basis = standard_basis(c.n);
    const TrajectorySet traj = evolve_trajectories(c.energy, basis, driver, s, grid);
    const BoundReport rep = bound_report(traj, c.epsilon);

    // D at t_m itself, which need not be a grid point. The driver schedule
    // covers t_m even when the grid stops short of it.
    const TrajectorySet at = evolve_trajectories(c.energy, basis, driver, s, {0.0, t_m});
    const BoundReport at_report = divergence_profile(at);
    const double d_tm = at_report.divergence.back();
    const double ratio_tm = d_tm / at_report.bound_line.back();

    Report r;
    r.columns = {"t", "D", "bound", "dDdt", "min_distance", "second_min_distance"};
    json series = json::array();
    const std::size_t m = rep.times.size();
    for (std::size_t j = 0; j < m; ++j) {
        std::optional<double> deriv;
        if (j > 0 && j + 1 < m) {
            deriv = rep.derivative_estimates[j - 1];
        }
        r.rows.push_back({rep.times[j], rep.divergence[j], rep.bound_line[j], deriv, rep.min_distance[j],
                          rep.second_min_distance[j]});
        series.push_back(json{{"t", rep.times[j]},
                              {"D", rep.divergence[j]},
                              {"bound", rep.bound_line[j]},
                              {"dDdt", optional_number(deriv)},
                              {"min_distance", rep.min_distance[j]},
                              {"second_min_distance", rep.second_min_distance[j]}});
    }

    r.passed = rep.integrated_bound_holds;
    if (!r.passed) {
        r.diagnostic = "D(t) exceeds 2E sqrt(N) t by " + format_double(rep.max_bound_violation);
    }

    const Discrimination& disc = *rep.discrimination;
    json config = common_config(c);
    config["dt"] = dt;
    config["horizon"] = horizon;
    config["epsilon"] = c.epsilon;
    config["driver"] = c.driver;
    config["driver_norm_mult"] = c.driver_norm_mult;
    if (c.driver == "piecewise") {
        config["segments"] = c.segments;
    }

    r.doc = header("bound");
    r.doc["config"] = config;
    r.doc["derived"] = json{{"overlap_x", 1.0 / sqrt_n},
                            {"t_m", t_m},
                            {"derivative_limit", rep.derivative_limit},
                            {"epsilon", c.epsilon},
                            {"lower_bound", disc.lower_bound},
                            {"grid_spacing", rep.grid_spacing}};
    r.doc["summary"] = json{{"integrated_bound_holds", rep.integrated_bound_holds},
                            {"max_bound_violation", rep.max_bound_violation},
                            {"lipschitz_holds", rep.lipschitz_holds},
                            {"derivative_bound_holds", rep.derivative_bound_holds},
                            {"derivative_excess", rep.derivative_excess},
                            {"derivative_tolerance", rep.derivative_tolerance},
                            {"curvature_C", rep.curvature},
                            {"derivative_discretization_error", rep.derivative_discretization_error},
                            {"t_epsilon", optional_number(disc.t_epsilon)},
                            {"t_epsilon_all", optional_number(disc.t_epsilon_all)},
                            {"lower_bound", disc.lower_bound},
                            {"respects_lower_bound", disc.respects_lower_bound},
                            {"D_at_t_m", d_tm},
                            {"D_over_bound_at_t_m", ratio_tm},
                            {"passed", r.passed}};
    r.doc["series"] = std::move(series);
    r.table_keys = {"series"};
    return r;
}

// ---------------------------------------------------------------- stats

Report stats(const StatsConfig& c)
{
    if (c.n < 1) {
        throw UsageError("--n must be at least 1");
    }
    if (c.samples < 100) {
        throw UsageError("--samples must be at least 100");
    }
    const OverlapSample sample = overlap_statistics(c.n, c.samples, c.seed);

    Report r;
    r.passed = within_band(sample);
    const double expected = 1.0 / static_cast<double>(c.n);
    if (!r.passed) {
        r.diagnostic = "mean |<s|w>|^2 = " + format_double(sample.mean_x2) + " is more than 4 standard errors from " +
                       format_double(expected);
    }
    r.columns = {"n", "num_samples", "mean_x2", "stderr_x2", "mean_x", "expected_x2"};
    r.rows.push_back({static_cast<double>(sample.n), static_cast<double>(sample.num_samples), sample.mean_x2,
                      sample.stderr_x2, sample.mean_x, expected});

    json config = common_config(c);
    config["samples"] = c.samples;

    r.doc = header("stats");
    r.doc["config"] = config;
    r.doc["derived"] = json{{"expected_x2", expected}, {"rng", Rng::kName}, {"streams", sample.streams}};
    r.doc["sample"] = json{{"n", sample.n},
                           {"num_samples", sample.num_samples},
                           {"mean_x2", sample.mean_x2},
                           {"stderr_x2", sample.stderr_x2},
                           {"mean_x", sample.mean_x},
                           {"seed", sample.seed}};
    r.doc["summary"] = json{{"deviation", sample.mean_x2 - expected},
                            {"sigmas", sample.stderr_x2 > 0.0 ? json(std::abs(sample.mean_x2 - expected) /
                                                                     sample.stderr_x2)
                                                              : json(nullptr)},
                            {"band_sigmas", 4.0},
                            {"passed", r.passed}};
    r.table_keys = {"sample"};
    return r;
}

// ---------------------------------------------------------------- parsing

void add_common(CLI::App* app, Common& c, std::size_t default_n)
{
    c.n = default_n;
    app->add_option("--n", c.n, "Dimension N")->capture_default_str();
    app->add_option("--energy", c.energy, "Energy scale E")->capture_default_str();
    app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    app->add_option("--out", c.out, "Report path (stdout when omitted)");
    app->add_option("--format", c.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Analog and digital quantum search experiments", "asearch"};
    app.set_version_flag("--version", ASEARCH_VERSION);
    app.require_subcommand(1);

    AnalogConfig ac;
    auto* analog_cmd = app.add_subcommand("analog", "Closed-form two-level evolution against full-space propagation");
    add_common(analog_cmd, ac, 4);
    analog_cmd->add_option("--dt", ac.dt, "Grid spacing (default t_m/500)");
    analog_cmd->add_option("--horizon", ac.horizon, "Last grid time (default 2 t_m)");
    auto* marked_opt = analog_cmd->add_option("--marked", ac.marked, "Marked basis index")->capture_default_str();
    auto* random_opt = analog_cmd->add_flag("--random-marked", ac.random_marked, "Draw |w> uniformly with --seed");
    auto* start_opt = analog_cmd->add_flag("--marked-equals-start", ac.marked_is_start, "Use |w> = |s>");
    random_opt->excludes(marked_opt)->excludes(start_opt);
    start_opt->excludes(marked_opt);

    GroverConfig gc;
    auto* grover_cmd = app.add_subcommand("grover", "Digital Grover iteration in full space and in the reduced plane");
    add_common(grover_cmd, gc, 4);
    grover_cmd->add_option("--iterations", gc.iterations, "Number of iterations (default k*)");
    grover_cmd->add_option("--marked", gc.marked, "Marked index")->capture_default_str();
    grover_cmd->add_option("--shots", gc.shots, "Sampled measurements of the final state")->capture_default_str();

    BoundConfig bc;
    auto* bound_cmd = app.add_subcommand("bound", "Divergence of oracle trajectories against 2E sqrt(N) t");
    add_common(bound_cmd, bc, 16);
    bound_cmd->add_option("--dt", bc.dt, "Grid spacing (default t_m/500)");
    bound_cmd->add_option("--horizon", bc.horizon, "Last grid time (default 2 t_m)");
    bound_cmd->add_option("--epsilon", bc.epsilon, "Discrimination threshold")->capture_default_str();
    bound_cmd->add_option("--driver", bc.driver, "Driver family")
        ->check(CLI::IsMember({"paper", "zero", "random-dense", "piecewise"}))
        ->capture_default_str();
    bound_cmd->add_option("--driver-norm-mult", bc.driver_norm_mult, "Driver norm in units of E")
        ->capture_default_str();
    bound_cmd->add_option("--segments", bc.segments, "Pieces of the piecewise driver")->capture_default_str();

    StatsConfig sc;
    auto* stats_cmd = app.add_subcommand("stats", "Monte Carlo mean of |<s|w>|^2 for random states");
    add_common(stats_cmd, sc, 16);
    stats_cmd->add_option("--samples", sc.samples, "Number of (s, w) pairs")->capture_default_str();

    std::vector<const char*> argv{"asearch"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        Report r;
        const Common* common = nullptr;
        if (analog_cmd->parsed()) {
            r = analog(ac);
            common = &ac;
        } else if (grover_cmd->parsed()) {
            r = grover(gc);
            common = &gc;
        } else if (bound_cmd->parsed()) {
            r = bound(bc);
            common = &bc;
        } else {
            r = stats(sc);
            common = &sc;
        }
        emit(r, *common, out);
        if (!r.passed) {
            err << "check failed: " << r.diagnostic << '\n';
            return kExitCheckFailed;
        }
        return kExitPass;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

} // namespace asearch::cli
