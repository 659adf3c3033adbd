#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "asearch/errors.hpp"

namespace asearch {

using Complex = std::complex<double>;

// Largest deviation of ||v|| from 1 that a constructor will quietly rescale.
inline constexpr double kNormalizationSlack = 1e-6;

// A normalized vector of complex amplitudes. Immutable once built.
class StateVector {
public:
    // Rescales to unit norm if ||v|| is within kNormalizationSlack of 1,
    // throws NormalizationError otherwise. Throws DimensionError if empty.
    explicit StateVector(std::vector<Complex> amplitudes);

    // Rescales any non-zero vector.
    static StateVector normalized(std::vector<Complex> amplitudes);

    // Adopts the image of a normalized vector under a unitary map as-is, so
    // that any norm drift of the map stays observable. Still rejects vectors
    // outside kNormalizationSlack.
    static StateVector unitary_image(std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t dim, std::size_t index);
    static StateVector uniform(std::size_t dim);

    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;

    // Multiplies every amplitude by `phase`, which must have unit modulus.
    StateVector rephased(Complex phase) const;

private:
    struct Adopt {};
    StateVector(std::vector<Complex> amplitudes, Adopt);

    std::vector<Complex> amps_;
};

// <a|b>, conjugating the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

// || a - b ||^2
double distance_squared(std::span<const Complex> a, std::span<const Complex> b);

// Dense Hermitian matrix. Only the upper triangle can be written; the lower
// triangle is always the mirrored conjugate, so Hermiticity holds exactly.
class HermitianOperator {
public:
    explicit HermitianOperator(std::size_t dim);

    static HermitianOperator identity(std::size_t dim, double scale = 1.0);
    static HermitianOperator rank_one(double scale, const StateVector& direction);

    std::size_t dim() const noexcept { return dim_; }

    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    // Requires row <= col. Diagonal entries must be real.
    void set(std::size_t row, std::size_t col, Complex value);

    // this += scale * |v><v|
    void add_rank_one(double scale, std::span<const Complex> v);

    HermitianOperator& operator+=(const HermitianOperator& other);
    HermitianOperator& operator*=(double scale);

    std::vector<Complex> apply(std::span<const Complex> v) const;
    void apply(std::span<const Complex> v, std::span<Complex> out) const;

    double frobenius_norm() const;

    // Row-major, dim*dim entries.
    std::span<const Complex> data() const noexcept { return entries_; }

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double scale, HermitianOperator h);

// <v|h|v>, real for Hermitian h.
double expectation(const HermitianOperator& h, const StateVector& v);

// E |v><v|. Both the oracle term E|w><w| and the driver E'|s><s| have this
// shape. Applying it costs O(N); materialize with to_operator() when a dense
// matrix is needed.
class RankOneHamiltonian {
public:
    // Throws InvalidParameter for a negative or non-finite scale.
    RankOneHamiltonian(double scale, StateVector direction);

    double scale() const noexcept { return scale_; }
    const StateVector& direction() const noexcept { return direction_; }
    std::size_t dim() const noexcept { return direction_.dim(); }

    HermitianOperator to_operator() const { return HermitianOperator::rank_one(scale_, direction_); }

    // out += E <v|x> v
    void apply_add(std::span<const Complex> x, std::span<Complex> out) const;

private:
    double scale_;
    StateVector direction_;
};

struct Eigensystem {
    std::size_t dim = 0;
    std::vector<double> values;   // ascending
    std::vector<Complex> vectors; // row k holds eigenvector k
    int sweeps = 0;

    std::span<const Complex> vector(std::size_t k) const { return {vectors.data() + k * dim, dim}; }
    StateVector eigenvector(std::size_t k) const;
};

// Cyclic complex Jacobi in round-robin ordering (see kernels.hpp for the
// serial row-cyclic reference). Stops once the off-diagonal Frobenius norm
// falls below 1e-13 * ||h||_F. Eigenvalues ascend; ties keep the original
// diagonal order.
Eigensystem eigendecompose(const HermitianOperator& h);

// e^{-iHt} for a fixed time-independent H, through its eigensystem.
class Propagator {
public:
    explicit Propagator(const HermitianOperator& h);
    explicit Propagator(Eigensystem eig);

    std::size_t dim() const noexcept { return eig_.dim; }
    const Eigensystem& eigensystem() const noexcept { return eig_; }

    StateVector apply(double t, const StateVector& v) const;

    // <v_k|v> for every eigenvector v_k.
    std::vector<Complex> coefficients(std::span<const Complex> v) const;

    // sum_k e^{-i lambda_k t} c_k |v_k>, written into `out`.
    void evaluate(std::span<const Complex> coefficients, double t, std::span<Complex> out) const;

private:
    Eigensystem eig_;
};

// e^{-iht} v. Negative t evolves backwards.
StateVector expm_apply(const HermitianOperator& h, double t, const StateVector& v);

// y = H x for an operator that is only available as a map.
using LinearMap = std::function<void(std::span<const Complex> x, std::span<Complex> y)>;

// e^{-iHt} v by a truncated Taylor series in substeps of ||H|| * h <= 1/2.
// `norm_bound` must bound the spectral norm of H. Needs only matrix-vector
// products, so it scales to dimensions where a dense eigensystem is too slow.
StateVector taylor_propagate(const LinearMap& h, double norm_bound, double t, const StateVector& v);

} // namespace asearch
