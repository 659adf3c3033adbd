#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "asearch/analog.hpp"
#include "asearch/bound.hpp"
#include "oracles.hpp"

using namespace asearch;

namespace {

constexpr double kPi = std::numbers::pi;

TrajectorySet rank_one_run(std::size_t n, double e, double dt, double horizon)
{
    const StateVector s = StateVector::uniform(n);
    return evolve_trajectories(e, standard_basis(n), paper_driver(e, s, horizon), s, uniform_grid(dt, horizon));
}

double max_identity_error(const HermitianOperator& h, double e)
{
    double m = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t j = 0; j < h.dim(); ++j) {
            m = std::max(m, std::abs(h(i, j) - (i == j ? e : 0.0)));
        }
    }
    return m;
}

} // namespace

TEST(SumOracleHamiltonians, StandardBasisIsExactIdentity)
{
    const HermitianOperator h = sum_oracle_hamiltonians(1.0, standard_basis(5));
    EXPECT_EQ(max_identity_error(h, 1.0), 0.0);
}

TEST(SumOracleHamiltonians, RandomBasesGiveScaledIdentity)
{
    std::mt19937_64 gen(13);
    EXPECT_LT(max_identity_error(sum_oracle_hamiltonians(2.0, oracle::random_orthonormal_basis(8, gen)), 2.0), 1e-12);
    for (std::size_t n : {2u, 16u, 64u, 256u}) {
        const auto basis = oracle::random_orthonormal_basis(n, gen);
        EXPECT_LT(max_identity_error(sum_oracle_hamiltonians(1.5, basis), 1.5), 1e-10) << "n=" << n;
    }
}

TEST(SumOracleHamiltonians, OneDimensional)
{
    const HermitianOperator h = sum_oracle_hamiltonians(3.0, {StateVector({Complex(0.0, 1.0)})});
    EXPECT_NEAR(std::abs(h(0, 0) - 3.0), 0.0, 1e-15);
}

TEST(SumOracleHamiltonians, RejectsNonOrthonormal)
{
    EXPECT_THROW(sum_oracle_hamiltonians(1.0, {StateVector::uniform(2), StateVector::basis(2, 0)}), BasisError);
    EXPECT_THROW(sum_oracle_hamiltonians(1.0, {StateVector::basis(2, 0)}), BasisError);
    EXPECT_THROW(sum_oracle_hamiltonians(1.0, {}), BasisError);
}

TEST(UniformGrid, SpacingAndEnd)
{
    const auto g = uniform_grid(0.25, 1.0);
    EXPECT_EQ(g, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    EXPECT_EQ(uniform_grid(0.3, 1.0).size(), 4u);
    EXPECT_THROW(uniform_grid(0.0, 1.0), InvalidParameter);
}

TEST(EvolveTrajectories, ZeroDriverFromBasisState)
{
    const std::size_t n = 4;
    const double e = 1.3;
    const StateVector w0 = StateVector::basis(n, 2);
    const TrajectorySet traj =
        evolve_trajectories(e, standard_basis(n), zero_driver(n, 2.0), w0, uniform_grid(0.1, 2.0));
    for (std::size_t j = 0; j < traj.grid.size(); ++j) {
        const double t = traj.grid[j];
        EXPECT_LT(std::abs(traj.per_oracle[2][j][2] - std::exp(Complex(0.0, -e * t))), 1e-13);
        for (std::size_t w : {0u, 1u, 3u}) {
            EXPECT_LT(oracle::max_abs_diff(traj.per_oracle[w][j].amplitudes(), w0.amplitudes()), 1e-15);
        }
        EXPECT_LT(oracle::max_abs_diff(traj.reference[j].amplitudes(), w0.amplitudes()), 1e-15);
    }
}

TEST(EvolveTrajectories, RankOneDriverMatchesClosedForm)
{
    const std::size_t n = 4;
    const double e = 1.0;
    const TrajectorySet traj = rank_one_run(n, e, 0.05, 2.0 * kPi);
    const StateVector s = StateVector::uniform(n);
    for (std::size_t w = 0; w < n; ++w) {
        const StateVector wv = StateVector::basis(n, w);
        const TwoLevelSystem sys = two_level_system(RankOneHamiltonian(e, wv), RankOneHamiltonian(e, s));
        const ReducedBasis basis = reduced_basis(s, wv);
        for (std::size_t j = 0; j < traj.grid.size(); ++j) {
            const StateVector closed = basis.embed(evolve_closed_form(sys, traj.grid[j]));
            EXPECT_LT(oracle::max_abs_diff(traj.per_oracle[w][j].amplitudes(), closed.amplitudes()), 1e-8);
        }
    }
    for (std::size_t j = 0; j < traj.grid.size(); ++j) {
        const Complex phase = std::exp(Complex(0.0, -e * traj.grid[j]));
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LT(std::abs(traj.reference[j][i] - phase * s[i]), 1e-10);
        }
    }
}

TEST(EvolveTrajectories, StatesStayNormalizedAndStartAtInitial)
{
    std::mt19937_64 gen(1);
    Rng rng(4);
    const std::size_t n = 8;
    const StateVector init = oracle::random_unit(n, gen);
    const TrajectorySet traj = evolve_trajectories(0.7, oracle::random_orthonormal_basis(n, gen),
                                                   random_piecewise_driver(n, 5.0, 10, 3.0, rng), init,
                                                   uniform_grid(0.01, 3.0));
    for (const auto& path : traj.per_oracle) {
        EXPECT_EQ(oracle::max_abs_diff(path[0].amplitudes(), init.amplitudes()), 0.0);
        for (const StateVector& v : path) {
            EXPECT_NEAR(v.norm(), 1.0, 1e-9);
        }
    }
    EXPECT_EQ(oracle::max_abs_diff(traj.reference[0].amplitudes(), init.amplitudes()), 0.0);
}

TEST(EvolveTrajectories, PiecewiseMatchesSegmentBySegmentOracle)
{
    Rng rng(21);
    const std::size_t n = 5;
    const double e = 1.0;
    const DriverSchedule driver = random_piecewise_driver(n, 3.0, 4, 2.0, rng);
    const StateVector s = StateVector::uniform(n);
    const std::vector<double> grid = uniform_grid(0.125, 2.0);
    const TrajectorySet traj = evolve_trajectories(e, standard_basis(n), driver, s, grid);

    // Reference path through the Taylor oracle, one segment at a time.
    std::vector<Complex> psi(s.amplitudes().begin(), s.amplitudes().end());
    for (const DriverSegment& seg : driver.segments()) {
        psi = oracle::apply(oracle::expm(seg.op, seg.duration), psi);
    }
    EXPECT_LT(oracle::max_abs_diff(traj.reference.back().amplitudes(), psi), 1e-10);

    std::vector<Complex> psi_w(s.amplitudes().begin(), s.amplitudes().end());
    for (const DriverSegment& seg : driver.segments()) {
        HermitianOperator h = seg.op;
        h.add_rank_one(e, StateVector::basis(n, 3).amplitudes());
        psi_w = oracle::apply(oracle::expm(h, seg.duration), psi_w);
    }
    EXPECT_LT(oracle::max_abs_diff(traj.per_oracle[3].back().amplitudes(), psi_w), 1e-10);
}

TEST(EvolveTrajectories, RejectsBadGrids)
{
    const std::size_t n = 3;
    const StateVector s = StateVector::uniform(n);
    const DriverSchedule d = zero_driver(n, 1.0);
    EXPECT_THROW(evolve_trajectories(1.0, standard_basis(n), d, s, {0.0, 0.5, 1.5}), ScheduleError);
    EXPECT_THROW(evolve_trajectories(1.0, standard_basis(n), d, s, {0.1, 0.5}), ScheduleError);
    EXPECT_THROW(evolve_trajectories(1.0, standard_basis(n), d, s, {0.0, 0.5, 0.5}), ScheduleError);
    EXPECT_THROW(evolve_trajectories(1.0, standard_basis(n), d, StateVector::uniform(4), {0.0}), DimensionError);
}

TEST(DivergenceProfile, StartsAtZero)
{
    const BoundReport rep = divergence_profile(rank_one_run(8, 1.0, 0.1, 1.0));
    EXPECT_EQ(rep.divergence[0], 0.0);
    EXPECT_EQ(rep.bound_line[0], 0.0);
    EXPECT_EQ(rep.derivative_estimates.size(), rep.times.size() - 2);
}

TEST(DivergenceProfile, RankOneDriverSaturationFraction)
{
    const double tm = 2.0 * kPi;
    const TrajectorySet traj = rank_one_run(16, 1.0, tm / 100.0, tm);
    const BoundReport rep = divergence_profile(traj);
    EXPECT_NEAR(rep.divergence.back(), 32.0, 1e-8);
    EXPECT_NEAR(rep.bound_line.back(), 16.0 * kPi, 1e-10);
    EXPECT_NEAR(rep.divergence.back() / rep.bound_line.back(), 2.0 / kPi, 1e-9);
    EXPECT_TRUE(rep.integrated_bound_holds);
}

TEST(DivergenceProfile, RankOneDriverMatchesAnalyticDivergence)
{
    const std::size_t n = 16;
    const double e = 1.0;
    const TrajectorySet traj = rank_one_run(n, e, 0.05, 8.0);
    const BoundReport rep = divergence_profile(traj);
    const StateVector s = StateVector::uniform(n);
    const StateVector w = StateVector::basis(n, 0);
    const TwoLevelSystem sys(e, 0.25);
    const ReducedBasis basis = reduced_basis(s, w);
    for (std::size_t j = 0; j < traj.grid.size(); ++j) {
        const double t = traj.grid[j];
        const StateVector psi_w = basis.embed(evolve_closed_form(sys, t));
        const StateVector psi = s.rephased(std::exp(Complex(0.0, -e * t)));
        const double analytic = static_cast<double>(n) * distance_squared(psi_w.amplitudes(), psi.amplitudes());
        EXPECT_NEAR(rep.divergence[j], analytic, 1e-8);
    }
}

TEST(DivergenceProfile, ZeroDriverClosedForm)
{
    for (std::size_t n : {2u, 5u, 16u}) {
        std::mt19937_64 gen(n);
        const double e = 1.7;
        const StateVector init = oracle::random_unit(n, gen);
        const TrajectorySet traj =
            evolve_trajectories(e, standard_basis(n), zero_driver(n, 6.0), init, uniform_grid(0.02, 6.0));
        const BoundReport rep = divergence_profile(traj);
        for (std::size_t j = 0; j < traj.grid.size(); ++j) {
            EXPECT_NEAR(rep.divergence[j], 2.0 * (1.0 - std::cos(e * traj.grid[j])), 1e-10);
        }
    }
}

TEST(DivergenceProfile, DivergenceStaysInRange)
{
    Rng rng(17);
    const std::size_t n = 6;
    const DriverSchedule d = random_dense_driver(n, 20.0, 5.0, rng);
    const StateVector s = StateVector::uniform(n);
    const BoundReport rep =
        divergence_profile(evolve_trajectories(2.0, standard_basis(n), d, s, uniform_grid(0.01, 5.0)));
    for (double v : rep.divergence) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 4.0 * static_cast<double>(n) + 1e-12);
    }
    EXPECT_TRUE(rep.integrated_bound_holds);
    EXPECT_TRUE(rep.lipschitz_holds);
    EXPECT_TRUE(rep.derivative_bound_holds);
}

TEST(DivergenceProfile, ExactDerivativeAndRateBound)
{
    Rng rng(5);
    const std::size_t n = 8;
    const double e = 1.2;
    const DriverSchedule d = random_dense_driver(n, 10.0 * e, 3.0, rng);
    const StateVector s = StateVector::uniform(n);
    const BoundReport fine =
        divergence_profile(evolve_trajectories(e, standard_basis(n), d, s, uniform_grid(1e-3, 3.0)));
    for (std::size_t j = 0; j < fine.times.size(); ++j) {
        EXPECT_LE(fine.exact_derivative[j], fine.rate_bound[j] + 1e-12);
        EXPECT_LE(fine.rate_bound[j], fine.derivative_limit + 1e-12);
    }
    // Central differences converge to the exact derivative at second order.
    EXPECT_LT(fine.derivative_discretization_error, 1e-3);
    const BoundReport coarse =
        divergence_profile(evolve_trajectories(e, standard_basis(n), d, s, uniform_grid(2e-3, 3.0)));
    EXPECT_NEAR(coarse.derivative_discretization_error / fine.derivative_discretization_error, 4.0, 0.2);
}

TEST(DiscriminationTime, Examples)
{
    const double dt = 0.01;
    const TrajectorySet traj = rank_one_run(16, 1.0, dt, 7.0);

    const Discrimination tiny = discrimination_time(traj, 1e-12);
    ASSERT_TRUE(tiny.t_epsilon);
    EXPECT_NEAR(*tiny.t_epsilon, dt, 1e-15);
    EXPECT_NEAR(tiny.lower_bound, 0.0, 1e-11);

    const Discrimination two = discrimination_time(traj, 2.0);
    ASSERT_TRUE(two.t_epsilon);
    EXPECT_NEAR(*two.t_epsilon, 2.0 * kPi, dt);
    EXPECT_DOUBLE_EQ(two.lower_bound, 4.0);
    EXPECT_TRUE(two.respects_lower_bound);
    EXPECT_EQ(two.t_epsilon, two.t_epsilon_all);

    const std::size_t n = 16;
    const StateVector s = StateVector::uniform(n);
    const TrajectorySet idle =
        evolve_trajectories(1.0, standard_basis(n), zero_driver(n, 10.0), s, uniform_grid(0.01, 10.0));
    const Discrimination none = discrimination_time(idle, 3.0);
    EXPECT_FALSE(none.t_epsilon);
    EXPECT_FALSE(none.t_epsilon_all);
    EXPECT_TRUE(none.respects_lower_bound);

    EXPECT_THROW(discrimination_time(traj, 0.0), InvalidParameter);
    EXPECT_THROW(discrimination_time(traj, 4.5), InvalidParameter);
    EXPECT_NO_THROW(discrimination_time(traj, 4.0));
}

TEST(DiscriminationTime, SecondSmallestIgnoresOneOutlier)
{
    // From |w0>, the w0 trajectory is the only one that moves; with every
    // other distance at zero the all-but-one criterion never fires.
    const std::size_t n = 4;
    const TrajectorySet traj = evolve_trajectories(1.0, standard_basis(n), zero_driver(n, 4.0),
                                                   StateVector::basis(n, 0), uniform_grid(0.01, 4.0));
    const BoundReport rep = bound_report(traj, 1.0);
    EXPECT_FALSE(rep.discrimination->t_epsilon);
    for (double d : rep.second_min_distance) {
        EXPECT_EQ(d, 0.0);
    }
}

TEST(BoundReport, SerialAndParallelAgreeBitForBit)
{
    Rng rng(99);
    const std::size_t n = 16;
    const DriverSchedule d = random_piecewise_driver(n, 4.0, 10, 2.0, rng);
    const StateVector s = StateVector::uniform(n);
    const auto grid = uniform_grid(0.05, 2.0);
    const TrajectorySet a = evolve_trajectories(1.0, standard_basis(n), d, s, grid, Execution::serial);
    const TrajectorySet b = evolve_trajectories(1.0, standard_basis(n), d, s, grid, Execution::parallel);
    const BoundReport ra = bound_report(a, 1.0, Execution::serial);
    const BoundReport rb = bound_report(b, 1.0, Execution::parallel);
    EXPECT_EQ(ra.divergence, rb.divergence);
    EXPECT_EQ(ra.exact_derivative, rb.exact_derivative);
    EXPECT_EQ(ra.second_min_distance, rb.second_min_distance);
}

TEST(Drivers, RandomHermitianHasRequestedSpectralNorm)
{
    Rng rng(12);
    const HermitianOperator h = random_hermitian(10, 7.5, rng);
    const Eigensystem eig = eigendecompose(h);
    EXPECT_NEAR(std::max(std::abs(eig.values.front()), std::abs(eig.values.back())), 7.5, 1e-10);
    const DriverSchedule p = random_piecewise_driver(4, 1.0, 10, 5.0, rng);
    EXPECT_EQ(p.segments().size(), 10u);
    EXPECT_NEAR(p.horizon(), 5.0, 1e-12);
    EXPECT_EQ(p.kind(), DriverKind::piecewise_constant_dense);
}
