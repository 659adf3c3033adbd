#pragma once

// Data-parallel inner loops, each in two builds: a serial reference and an
// OpenMP version. Every parallel kernel writes results to fixed slots and
// reduces in index order, so both builds return bit-identical output for
// any thread count. Tests compare the two; bench/ times them.

#include <cstddef>
#include <functional>
#include <span>

#include "asearch/linalg.hpp"

namespace asearch {

enum class Execution { serial, parallel };

// True when the library was built with OpenMP.
bool openmp_enabled() noexcept;
int max_threads() noexcept;

namespace kernels {

namespace serial {

// body(i) for i in [0, count). Bodies must only write to slot i.
void for_each(std::size_t count, const std::function<void(std::size_t)>& body);

// out = H v
void matvec(const HermitianOperator& h, std::span<const Complex> v, std::span<Complex> out);

// Jacobi eigensolver, row-cyclic ordering (one rotation at a time).
Eigensystem jacobi(const HermitianOperator& h);

} // namespace serial

namespace omp {

void for_each(std::size_t count, const std::function<void(std::size_t)>& body);
void matvec(const HermitianOperator& h, std::span<const Complex> v, std::span<Complex> out);

// Jacobi eigensolver, round-robin ordering (n/2 disjoint rotations per step).
// This is the production eigensolver behind eigendecompose().
Eigensystem jacobi(const HermitianOperator& h);

} // namespace omp

inline void for_each(Execution exec, std::size_t count, const std::function<void(std::size_t)>& body)
{
    exec == Execution::parallel ? omp::for_each(count, body) : serial::for_each(count, body);
}

inline void matvec(Execution exec, const HermitianOperator& h, std::span<const Complex> v, std::span<Complex> out)
{
    exec == Execution::parallel ? omp::matvec(h, v, out) : serial::matvec(h, v, out);
}

} // namespace kernels

} // namespace asearch
