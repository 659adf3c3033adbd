#pragma once

// Numerical check of the query lower bound for analog search.
//
// For every oracle w in an orthonormal basis, |psi_w, t> evolves under
// E|w><w| + H_D(t); the reference |psi, t> evolves under H_D(t) alone, both
// from the same w-independent |i>. The divergence
//
//   D(t) = sum_w || psi_w(t) - psi(t) ||^2
//
// satisfies dD/dt = sum_w 2 Im <psi_w|H_w|psi> <= 2 E sqrt(N), hence
// D(t) <= 2 E sqrt(N) t for any driver. Requiring every trajectory to move
// at least epsilon away from the reference gives t >= epsilon sqrt(N) / (2E).

#include <cstdint>
#include <optional>
#include <vector>

#include "asearch/kernels.hpp"
#include "asearch/linalg.hpp"
#include "asearch/rng.hpp"

namespace asearch {

enum class DriverKind { constant_rank_one, constant_dense, piecewise_constant_dense };

struct DriverSegment {
    double duration;
    HermitianOperator op;
};

// Piecewise-constant H_D(t) on [0, horizon]. A smooth driver can be
// approximated by refining segments; how fine is up to the caller.
class DriverSchedule {
public:
    DriverSchedule(DriverKind kind, std::vector<DriverSegment> segments);

    static DriverSchedule constant(DriverKind kind, HermitianOperator op, double horizon);

    DriverKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return segments_.front().op.dim(); }
    double horizon() const noexcept { return boundaries_.back(); }
    const std::vector<DriverSegment>& segments() const noexcept { return segments_; }
    // boundaries()[k] is the start time of segment k; the last entry is the horizon.
    const std::vector<double>& boundaries() const noexcept { return boundaries_; }

private:
    DriverKind kind_;
    std::vector<DriverSegment> segments_;
    std::vector<double> boundaries_;
};

// E'|s><s| with the given start state, as a constant schedule.
DriverSchedule paper_driver(double scale, const StateVector& s, double horizon);
DriverSchedule zero_driver(std::size_t n, double horizon);
// Random dense Hermitian matrix rescaled to the given spectral norm.
HermitianOperator random_hermitian(std::size_t n, double spectral_norm, Rng& rng);
DriverSchedule random_dense_driver(std::size_t n, double spectral_norm, double horizon, Rng& rng);
// `segments` equal-length pieces, each an independent random_hermitian.
DriverSchedule random_piecewise_driver(std::size_t n, double spectral_norm, std::size_t segments, double horizon,
                                       Rng& rng);

// 0, dt, 2dt, ... up to the last multiple of dt not beyond horizon.
std::vector<double> uniform_grid(double dt, double horizon);

// sum_w E|w><w|. Throws BasisError unless `basis` is N orthonormal vectors
// of dimension N (within 1e-10).
HermitianOperator sum_oracle_hamiltonians(double energy, const std::vector<StateVector>& basis);

std::vector<StateVector> standard_basis(std::size_t n);

struct TrajectorySet {
    double energy = 0.0;
    std::vector<StateVector> oracle_basis;
    std::vector<double> grid;
    StateVector initial;
    // reference[j] = |psi, t_j>
    std::vector<StateVector> reference;
    // per_oracle[w][j] = |psi_w, t_j>
    std::vector<std::vector<StateVector>> per_oracle;

    std::size_t dim() const noexcept { return initial.dim(); }
};

// Exact propagation per driver segment: within a segment every grid state is
// e^{-iH(t - t_k)} applied to the state at the segment start t_k, so no
// stepping error accumulates. Throws ScheduleError if the grid does not start
// at 0, is not increasing, or runs past the driver horizon.
TrajectorySet evolve_trajectories(double energy, const std::vector<StateVector>& oracle_basis,
                                  const DriverSchedule& driver, const StateVector& initial,
                                  const std::vector<double>& grid, Execution exec = Execution::parallel);

struct Discrimination {
    double epsilon = 0.0;
    // First grid time where the second-smallest per-oracle distance reaches
    // epsilon ("all but one w" are distinguishable).
    std::optional<double> t_epsilon;
    // Same with the smallest distance (every w distinguishable).
    std::optional<double> t_epsilon_all;
    // epsilon sqrt(N) / (2E)
    double lower_bound = 0.0;
    double grid_spacing = 0.0;
    // t_epsilon >= lower_bound - grid_spacing, or no crossing at all.
    bool respects_lower_bound = true;
};

struct BoundReport {
    std::vector<double> times;
    // D(t_j)
    std::vector<double> divergence;
    // 2 E sqrt(N) t_j
    std::vector<double> bound_line;
    // Central differences of D at interior points j = 1..M-1, so
    // derivative_estimates[j-1] belongs to times[j].
    std::vector<double> derivative_estimates;
    // sum_w 2 Im <psi_w|H_w|psi> at every grid point: dD/dt without
    // discretization.
    std::vector<double> exact_derivative;
    // sum_w 2 ||H_w psi||: the Cauchy-Schwarz step before the final
    // 2 E sqrt(N) bound.
    std::vector<double> rate_bound;
    std::vector<double> min_distance;
    std::vector<double> second_min_distance;

    // 2 E sqrt(N)
    double derivative_limit = 0.0;
    // max |second difference| / dt^2, an estimate of max |D''|.
    double curvature = 0.0;
    double grid_spacing = 0.0;
    // curvature * grid_spacing
    double derivative_tolerance = 0.0;
    // max(0, max_j derivative_estimates[j] - derivative_limit)
    double derivative_excess = 0.0;
    // max_j |derivative_estimates[j] - exact_derivative[j]|
    double derivative_discretization_error = 0.0;

    // D(t_j) <= bound_line(t_j) + 1e-6 at every j.
    bool integrated_bound_holds = true;
    // derivative_estimates <= derivative_limit + derivative_tolerance.
    bool derivative_bound_holds = true;
    // |D(t_j+1) - D(t_j)| <= 2 E sqrt(N) dt + 1e-6.
    bool lipschitz_holds = true;
    double max_bound_violation = 0.0;

    std::optional<Discrimination> discrimination;
};

inline constexpr double kIntegratedBoundSlack = 1e-6;

BoundReport divergence_profile(const TrajectorySet& traj, Execution exec = Execution::parallel);

// Throws InvalidParameter unless 0 < epsilon <= 4.
Discrimination discrimination_time(const TrajectorySet& traj, double epsilon);

// divergence_profile plus discrimination_time, sharing the distance pass.
BoundReport bound_report(const TrajectorySet& traj, double epsilon, Execution exec = Execution::parallel);

} // namespace asearch
