// Serial reference vs OpenMP kernels. With one hardware thread the two
// columns mostly show the threading overhead.

#include <benchmark/benchmark.h>

#include "asearch/bound.hpp"
#include "asearch/kernels.hpp"
#include "asearch/statistics.hpp"

using namespace asearch;

namespace {

HermitianOperator bench_matrix(std::size_t n)
{
    Rng rng(17);
    return random_hermitian(n, 1.0, rng);
}

template <Execution Exec>
void BM_Jacobi(benchmark::State& state)
{
    const HermitianOperator h = bench_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Eigensystem eig = Exec == Execution::parallel ? kernels::omp::jacobi(h) : kernels::serial::jacobi(h);
        benchmark::DoNotOptimize(eig.values.data());
    }
}

template <Execution Exec>
void BM_Matvec(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const HermitianOperator h = bench_matrix(n);
    const StateVector v = StateVector::uniform(n);
    std::vector<Complex> out(n);
    for (auto _ : state) {
        kernels::matvec(Exec, h, v.amplitudes(), out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <Execution Exec>
void BM_Trajectories(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const double horizon = 2.0;
    const DriverSchedule driver = paper_driver(1.0, StateVector::uniform(n), horizon);
    const std::vector<double> grid = uniform_grid(horizon / 200.0, horizon);
    for (auto _ : state) {
        TrajectorySet traj =
            evolve_trajectories(1.0, standard_basis(n), driver, StateVector::uniform(n), grid, Exec);
        benchmark::DoNotOptimize(traj.reference.data());
    }
}

template <Execution Exec>
void BM_Overlap(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        OverlapSample s = overlap_statistics(n, 10000, 3, Exec);
        benchmark::DoNotOptimize(s.mean_x2);
    }
}

} // namespace

BENCHMARK(BM_Jacobi<Execution::serial>)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Jacobi<Execution::parallel>)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matvec<Execution::serial>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Matvec<Execution::parallel>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Trajectories<Execution::serial>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Trajectories<Execution::parallel>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Overlap<Execution::serial>)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Overlap<Execution::parallel>)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
