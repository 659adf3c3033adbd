#include "asearch/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace asearch {

namespace {

constexpr double kBasisTolerance = 1e-10;

// Trajectory from `initial` under driver (+ oracle term when given), sampled
// at every grid time.
std::vector<StateVector> propagate_on_grid(const DriverSchedule& driver, const RankOneHamiltonian* oracle,
                                           const StateVector& initial, const std::vector<double>& grid)
{
    const auto& segments = driver.segments();
    const auto& bounds = driver.boundaries();
    const std::size_t n = initial.dim();

    std::vector<StateVector> out;
    out.reserve(grid.size());
    out.push_back(initial);

    std::vector<Complex> psi(initial.amplitudes().begin(), initial.amplitudes().end());
    std::vector<Complex> coeffs;
    std::optional<Propagator> prop;
    std::size_t seg = 0;

    auto enter_segment = [&](std::size_t k) {
        HermitianOperator h = segments[k].op;
        if (oracle != nullptr) {
            h.add_rank_one(oracle->scale(), oracle->direction().amplitudes());
        }
        prop.emplace(h);
        coeffs = prop->coefficients(psi);
    };
    enter_segment(0);

    std::vector<Complex> buffer(n);
    for (std::size_t j = 1; j < grid.size(); ++j) {
        const double t = grid[j];
        while (seg + 1 < segments.size() && t > bounds[seg + 1]) {
            prop->evaluate(coeffs, bounds[seg + 1] - bounds[seg], psi);
            ++seg;
            enter_segment(seg);
        }
        prop->evaluate(coeffs, t - bounds[seg], buffer);
        out.push_back(StateVector::unitary_image(buffer));
    }
    return out;
}

void validate_grid(const std::vector<double>& grid, double horizon)
{
    if (grid.empty() || grid.front() != 0.0) {
        throw ScheduleError("evolve_trajectories: time grid must start at 0");
    }
    for (std::size_t j = 1; j < grid.size(); ++j) {
        if (!(grid[j] > grid[j - 1])) {
            throw ScheduleError("evolve_trajectories: time grid must be strictly increasing");
        }
    }
    if (grid.back() > horizon * (1.0 + 1e-12)) {
        throw ScheduleError("evolve_trajectories: grid ends at " + std::to_string(grid.back()) +
                            " beyond the driver horizon " + std::to_string(horizon));
    }
}

// distances[j][w] = || psi_w(t_j) - psi(t_j) ||^2
std::vector<std::vector<double>> oracle_distances(const TrajectorySet& traj, Execution exec)
{
    const std::size_t points = traj.grid.size();
    const std::size_t oracles = traj.per_oracle.size();
    std::vector<std::vector<double>> d(points, std::vector<double>(oracles));
    kernels::for_each(exec, points, [&](std::size_t j) {
        const auto ref = traj.reference[j].amplitudes();
        for (std::size_t w = 0; w < oracles; ++w) {
            d[j][w] = distance_squared(traj.per_oracle[w][j].amplitudes(), ref);
        }
    });
    return d;
}

double max_spacing(const std::vector<double>& grid)
{
    double h = 0.0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        h = std::max(h, grid[j] - grid[j - 1]);
    }
    return h;
}

Discrimination discriminate(const TrajectorySet& traj, const std::vector<double>& min_d,
                            const std::vector<double>& second_d, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon <= 4.0)) {
        throw InvalidParameter("discrimination_time: epsilon must lie in (0, 4]");
    }
    Discrimination out;
    out.epsilon = epsilon;
    out.grid_spacing = max_spacing(traj.grid);
    out.lower_bound = epsilon * std::sqrt(static_cast<double>(traj.dim())) / (2.0 * traj.energy);
    for (std::size_t j = 0; j < traj.grid.size(); ++j) {
        if (!out.t_epsilon && second_d[j] >= epsilon) {
            out.t_epsilon = traj.grid[j];
        }
        if (!out.t_epsilon_all && min_d[j] >= epsilon) {
            out.t_epsilon_all = traj.grid[j];
        }
    }
    if (out.t_epsilon) {
        out.respects_lower_bound = *out.t_epsilon >= out.lower_bound - out.grid_spacing;
    }
    return out;
}

void smallest_two(const std::vector<double>& values, double& first, double& second)
{
    first = std::numeric_limits<double>::infinity();
    second = std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (v < first) {
            second = first;
            first = v;
        } else if (v < second) {
            second = v;
        }
    }
    if (values.size() == 1) {
        second = first;
    }
}

} // namespace

DriverSchedule::DriverSchedule(DriverKind kind, std::vector<DriverSegment> segments)
    : kind_(kind), segments_(std::move(segments))
{
    if (segments_.empty()) {
        throw ScheduleError("DriverSchedule: at least one segment is required");
    }
    boundaries_.reserve(segments_.size() + 1);
    boundaries_.push_back(0.0);
    for (const DriverSegment& s : segments_) {
        if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
            throw ScheduleError("DriverSchedule: segment durations must be positive and finite");
        }
        if (s.op.dim() != segments_.front().op.dim()) {
            throw DimensionError("DriverSchedule: segment operators differ in dimension");
        }
        boundaries_.push_back(boundaries_.back() + s.duration);
    }
}

DriverSchedule DriverSchedule::constant(DriverKind kind, HermitianOperator op, double horizon)
{
    std::vector<DriverSegment> segments;
    segments.push_back(DriverSegment{horizon, std::move(op)});
    return DriverSchedule(kind, std::move(segments));
}

DriverSchedule paper_driver(double scale, const StateVector& s, double horizon)
{
    return DriverSchedule::constant(DriverKind::constant_rank_one, HermitianOperator::rank_one(scale, s), horizon);
}

DriverSchedule zero_driver(std::size_t n, double horizon)
{
    return DriverSchedule::constant(DriverKind::constant_dense, HermitianOperator(n), horizon);
}

HermitianOperator random_hermitian(std::size_t n, double spectral_norm, Rng& rng)
{
    HermitianOperator h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.set(i, i, rng.normal());
        for (std::size_t j = i + 1; j < n; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            h.set(i, j, Complex(re, im) / std::sqrt(2.0));
        }
    }
    const Eigensystem eig = eigendecompose(h);
    const double current = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    if (current > 0.0) {
        h *= spectral_norm / current;
    }
    return h;
}

DriverSchedule random_dense_driver(std::size_t n, double spectral_norm, double horizon, Rng& rng)
{
    return DriverSchedule::constant(DriverKind::constant_dense, random_hermitian(n, spectral_norm, rng), horizon);
}

DriverSchedule random_piecewise_driver(std::size_t n, double spectral_norm, std::size_t segments, double horizon,
                                       Rng& rng)
{
    if (segments == 0) {
        throw ScheduleError("random_piecewise_driver: need at least one segment");
    }
    std::vector<DriverSegment> pieces;
    pieces.reserve(segments);
    const double length = horizon / static_cast<double>(segments);
    for (std::size_t k = 0; k < segments; ++k) {
        pieces.push_back(DriverSegment{length, random_hermitian(n, spectral_norm, rng)});
    }
    return DriverSchedule(DriverKind::piecewise_constant_dense, std::move(pieces));
}

std::vector<double> uniform_grid(double dt, double horizon)
{
    if (!(dt > 0.0) || !(horizon >= 0.0) || !std::isfinite(horizon)) {
        throw InvalidParameter("uniform_grid: need dt > 0 and a finite horizon >= 0");
    }
    const auto steps = static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
    std::vector<double> grid(steps + 1);
    for (std::size_t j = 0; j <= steps; ++j) {
        grid[j] = static_cast<double>(j) * dt;
    }
    return grid;
}

std::vector<StateVector> standard_basis(std::size_t n)
{
    std::vector<StateVector> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(StateVector::basis(n, i));
    }
    return basis;
}

HermitianOperator sum_oracle_hamiltonians(double energy, const std::vector<StateVector>& basis)
{
    if (basis.empty()) {
        throw BasisError("sum_oracle_hamiltonians: empty basis");
    }
    const std::size_t n = basis.front().dim();
    if (basis.size() != n) {
        throw BasisError("sum_oracle_hamiltonians: need exactly N basis vectors");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (basis[a].dim() != n) {
            throw BasisError("sum_oracle_hamiltonians: basis vectors differ in dimension");
        }
        for (std::size_t b = a; b < n; ++b) {
            const Complex g = inner_product(basis[a], basis[b]);
            const double expected = a == b ? 1.0 : 0.0;
            if (std::abs(g - expected) > kBasisTolerance) {
                throw BasisError("sum_oracle_hamiltonians: basis is not orthonormal");
            }
        }
    }
    HermitianOperator h(n);
    for (const StateVector& w : basis) {
        h.add_rank_one(energy, w.amplitudes());
    }
    return h;
}

TrajectorySet evolve_trajectories(double energy, const std::vector<StateVector>& oracle_basis,
                                  const DriverSchedule& driver, const StateVector& initial,
                                  const std::vector<double>& grid, Execution exec)
{
    const std::size_t n = initial.dim();
    if (driver.dim() != n) {
        throw DimensionError("evolve_trajectories: driver and initial state dimensions differ");
    }
    for (const StateVector& w : oracle_basis) {
        if (w.dim() != n) {
            throw DimensionError("evolve_trajectories: oracle basis vector has the wrong dimension");
        }
    }
    validate_grid(grid, driver.horizon());

    std::vector<RankOneHamiltonian> oracles;
    oracles.reserve(oracle_basis.size());
    for (const StateVector& w : oracle_basis) {
        oracles.emplace_back(energy, w);
    }

    // Slot 0 is the reference, slot w + 1 the trajectory for oracle w.
    std::vector<std::vector<StateVector>> runs(oracles.size() + 1);
    kernels::for_each(exec, runs.size(), [&](std::size_t k) {
        runs[k] = propagate_on_grid(driver, k == 0 ? nullptr : &oracles[k - 1], initial, grid);
    });

    std::vector<StateVector> reference = std::move(runs.front());
    runs.erase(runs.begin());
    return TrajectorySet{energy, oracle_basis, grid, initial, std::move(reference), std::move(runs)};
}

BoundReport divergence_profile(const TrajectorySet& traj, Execution exec)
{
    const std::size_t points = traj.grid.size();
    const double e = traj.energy;
    const double limit = 2.0 * e * std::sqrt(static_cast<double>(traj.dim()));
    const auto d = oracle_distances(traj, exec);

    BoundReport r;
    r.times = traj.grid;
    r.derivative_limit = limit;
    r.grid_spacing = max_spacing(traj.grid);
    r.divergence.resize(points);
    r.bound_line.resize(points);
    r.exact_derivative.resize(points);
    r.rate_bound.resize(points);
    r.min_distance.resize(points);
    r.second_min_distance.resize(points);

    kernels::for_each(exec, points, [&](std::size_t j) {
        double sum = 0.0;
        for (double v : d[j]) {
            sum += v;
        }
        r.divergence[j] = sum;
        r.bound_line[j] = limit * traj.grid[j];
        smallest_two(d[j], r.min_distance[j], r.second_min_distance[j]);

        double exact = 0.0;
        double rate = 0.0;
        const StateVector& ref = traj.reference[j];
        for (std::size_t w = 0; w < traj.per_oracle.size(); ++w) {
            const StateVector& basis_w = traj.oracle_basis[w];
            const Complex w_ref = inner_product(basis_w, ref);
            const Complex w_psi = inner_product(basis_w, traj.per_oracle[w][j]);
            // <psi_w|H_w|psi> = E <psi_w|w><w|psi>
            exact += 2.0 * e * (std::conj(w_psi) * w_ref).imag();
            rate += 2.0 * e * std::abs(w_ref);
        }
        r.exact_derivative[j] = exact;
        r.rate_bound[j] = rate;
    });

    r.max_bound_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points; ++j) {
        const double violation = r.divergence[j] - r.bound_line[j];
        r.max_bound_violation = std::max(r.max_bound_violation, violation);
        if (violation > kIntegratedBoundSlack) {
            r.integrated_bound_holds = false;
        }
        if (j + 1 < points) {
            const double h = traj.grid[j + 1] - traj.grid[j];
            if (std::abs(r.divergence[j + 1] - r.divergence[j]) > limit * h + kIntegratedBoundSlack) {
                r.lipschitz_holds = false;
            }
        }
    }

    if (points >= 3) {
        r.derivative_estimates.resize(points - 2);
        for (std::size_t j = 1; j + 1 < points; ++j) {
            const double h1 = traj.grid[j] - traj.grid[j - 1];
            const double h2 = traj.grid[j + 1] - traj.grid[j];
            const double slope = (r.divergence[j + 1] - r.divergence[j - 1]) / (h1 + h2);
            const double second = 2.0 *
                                  ((r.divergence[j + 1] - r.divergence[j]) / h2 -
                                   (r.divergence[j] - r.divergence[j - 1]) / h1) /
                                  (h1 + h2);
            r.derivative_estimates[j - 1] = slope;
            r.curvature = std::max(r.curvature, std::abs(second));
            r.derivative_excess = std::max(r.derivative_excess, slope - limit);
            r.derivative_discretization_error =
                std::max(r.derivative_discretization_error, std::abs(slope - r.exact_derivative[j]));
        }
        r.derivative_tolerance = r.curvature * r.grid_spacing;
        for (double slope : r.derivative_estimates) {
            if (slope > limit + r.derivative_tolerance) {
                r.derivative_bound_holds = false;
            }
        }
    }
    return r;
}

Discrimination discrimination_time(const TrajectorySet& traj, double epsilon)
{
    const auto d = oracle_distances(traj, Execution::serial);
    std::vector<double> min_d(d.size()), second_d(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        smallest_two(d[j], min_d[j], second_d[j]);
    }
    return discriminate(traj, min_d, second_d, epsilon);
}

BoundReport bound_report(const TrajectorySet& traj, double epsilon, Execution exec)
{
    BoundReport r = divergence_profile(traj, exec);
    r.discrimination = discriminate(traj, r.min_distance, r.second_min_distance, epsilon);
    return r;
}

} // namespace asearch
