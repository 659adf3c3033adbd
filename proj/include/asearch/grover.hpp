#pragma once

// Digital Grover search over N items with one marked index w.
//
// The iterate U_s U_f, with U_f = 1 - 2|w><w| and U_s = 2|s><s| - 1 for the
// uniform superposition s, is a rotation by theta = arccos(1 - 2/N) in the
// (|w>, |r>) plane. Starting from s at angle theta/2 off |r>, after k steps
// the success probability is sin^2((2k+1) theta / 2).

#include <array>
#include <cstddef>
#include <vector>

#include "asearch/linalg.hpp"
#include "asearch/rng.hpp"

namespace asearch {

class GroverInstance {
public:
    // Requires dim >= 2 and marked < dim.
    GroverInstance(std::size_t dim, std::size_t marked);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t marked() const noexcept { return marked_; }

private:
    std::size_t dim_;
    std::size_t marked_;
};

struct GroverRun {
    GroverInstance instance;
    std::size_t iterations = 0;
    // P after 0..iterations steps.
    std::vector<double> probabilities;
    // Angle of the state away from |r> toward |w> after 0..iterations steps,
    // measured from the simulated amplitudes.
    std::vector<double> plane_angles;
    // Two evaluations of f per application of U_f.
    std::size_t oracle_calls = 0;
    StateVector final_state;
};

using Rotation2 = std::array<std::array<double, 2>, 2>;

// (1 - 2|w><w|) v: negates the marked amplitude.
StateVector apply_uf(const GroverInstance& inst, const StateVector& v);

// (2|s><s| - 1) v in O(N): each amplitude a becomes 2 mean(v) - a.
StateVector apply_us(const StateVector& v);

// The same reflection through the materialized N x N matrix. Reference path
// for tests; refuses N > 64.
StateVector apply_us_dense(const StateVector& v);
HermitianOperator diffusion_matrix(std::size_t n);

// arccos(1 - 2/N), evaluated as 2 asin(N^{-1/2}) to stay accurate for large N.
double rotation_angle(std::size_t n);

Rotation2 reduced_step_matrix(std::size_t n);
Rotation2 matrix_power(const Rotation2& m, std::size_t k);

// (N^{-1/2}, sqrt(1 - 1/N)) in the (|w>, |r>) basis.
std::array<double, 2> reduced_initial_state(std::size_t n);

// sin^2((2k+1) theta / 2)
double reduced_success_probability(std::size_t n, std::size_t k);

// Applies U_s U_f k times to the uniform superposition.
GroverRun run_grover(const GroverInstance& inst, std::size_t k);

// The k maximizing sin^2((2k+1) theta / 2). Starts from
// round(pi / (2 theta) - 1/2) and resolves ties toward the smallest k, which
// matters at N = 2 where k = 0 and k = 1 both give 1/2.
std::size_t optimal_iterations(std::size_t n);

// Draws an index with probability |amplitude|^2.
std::size_t sample_measurement(const StateVector& v, Rng& rng);

} // namespace asearch
