#include "asearch/linalg.hpp"

#include <cmath>
#include <string>

namespace asearch {

namespace {

double squared_norm(std::span<const Complex> v)
{
    double acc = 0.0;
    for (const Complex& a : v) {
        acc += std::norm(a);
    }
    return acc;
}

void check_same_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

StateVector::StateVector(std::vector<Complex> amplitudes, Adopt) : amps_(std::move(amplitudes))
{
    if (amps_.empty()) {
        throw DimensionError("StateVector: dimension must be at least 1");
    }
}

StateVector::StateVector(std::vector<Complex> amplitudes) : StateVector(std::move(amplitudes), Adopt{})
{
    const double n = std::sqrt(squared_norm(amps_));
    if (!(std::abs(n - 1.0) <= kNormalizationSlack)) {
        throw NormalizationError("StateVector: norm " + std::to_string(n) + " is not within tolerance of 1");
    }
    if (n != 1.0) {
        for (Complex& a : amps_) {
            a /= n;
        }
    }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes)
{
    const double n = std::sqrt(squared_norm(amplitudes));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw NormalizationError("StateVector::normalized: vector has zero or non-finite norm");
    }
    for (Complex& a : amplitudes) {
        a /= n;
    }
    return StateVector(std::move(amplitudes), Adopt{});
}

StateVector StateVector::unitary_image(std::vector<Complex> amplitudes)
{
    const double n = std::sqrt(squared_norm(amplitudes));
    if (!(std::abs(n - 1.0) <= kNormalizationSlack)) {
        throw NormalizationError("StateVector::unitary_image: norm drifted to " + std::to_string(n));
    }
    return StateVector(std::move(amplitudes), Adopt{});
}

StateVector StateVector::basis(std::size_t dim, std::size_t index)
{
    if (index >= dim) {
        throw DimensionError("StateVector::basis: index out of range");
    }
    std::vector<Complex> v(dim);
    v[index] = 1.0;
    return StateVector(std::move(v), Adopt{});
}

StateVector StateVector::uniform(std::size_t dim)
{
    if (dim == 0) {
        throw DimensionError("StateVector::uniform: dimension must be at least 1");
    }
    const double a = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVector(std::vector<Complex>(dim, Complex(a, 0.0)), Adopt{});
}

double StateVector::norm() const
{
    return std::sqrt(squared_norm(amps_));
}

StateVector StateVector::rephased(Complex phase) const
{
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
        throw InvalidParameter("StateVector::rephased: phase must have unit modulus");
    }
    std::vector<Complex> v(amps_);
    for (Complex& a : v) {
        a *= phase;
    }
    return StateVector(std::move(v), Adopt{});
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b)
{
    check_same_dim(a.size(), b.size(), "inner_product");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

Complex inner_product(const StateVector& a, const StateVector& b)
{
    return inner_product(a.amplitudes(), b.amplitudes());
}

double distance_squared(std::span<const Complex> a, std::span<const Complex> b)
{
    check_same_dim(a.size(), b.size(), "distance_squared");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::norm(a[i] - b[i]);
    }
    return acc;
}

HermitianOperator::HermitianOperator(std::size_t dim) : dim_(dim), entries_(dim * dim)
{
    if (dim == 0) {
        throw DimensionError("HermitianOperator: dimension must be at least 1");
    }
}

HermitianOperator HermitianOperator::identity(std::size_t dim, double scale)
{
    HermitianOperator h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h.entries_[i * dim + i] = scale;
    }
    return h;
}

HermitianOperator HermitianOperator::rank_one(double scale, const StateVector& direction)
{
    HermitianOperator h(direction.dim());
    h.add_rank_one(scale, direction.amplitudes());
    return h;
}

void HermitianOperator::set(std::size_t row, std::size_t col, Complex value)
{
    if (row >= dim_ || col >= dim_) {
        throw DimensionError("HermitianOperator::set: index out of range");
    }
    if (row > col) {
        throw InvalidParameter("HermitianOperator::set: only the upper triangle (row <= col) is writable");
    }
    if (row == col) {
        if (value.imag() != 0.0) {
            throw InvalidParameter("HermitianOperator::set: diagonal entries must be real");
        }
        entries_[row * dim_ + row] = value;
        return;
    }
    entries_[row * dim_ + col] = value;
    entries_[col * dim_ + row] = std::conj(value);
}

void HermitianOperator::add_rank_one(double scale, std::span<const Complex> v)
{
    check_same_dim(dim_, v.size(), "HermitianOperator::add_rank_one");
    for (std::size_t i = 0; i < dim_; ++i) {
        entries_[i * dim_ + i] += scale * std::norm(v[i]);
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const Complex upper = scale * v[i] * std::conj(v[j]);
            entries_[i * dim_ + j] += upper;
            entries_[j * dim_ + i] += std::conj(upper);
        }
    }
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other)
{
    check_same_dim(dim_, other.dim_, "HermitianOperator::operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

HermitianOperator& HermitianOperator::operator*=(double scale)
{
    for (Complex& a : entries_) {
        a *= scale;
    }
    return *this;
}

void HermitianOperator::apply(std::span<const Complex> v, std::span<Complex> out) const
{
    check_same_dim(dim_, v.size(), "HermitianOperator::apply");
    check_same_dim(dim_, out.size(), "HermitianOperator::apply");
    for (std::size_t i = 0; i < dim_; ++i) {
        const Complex* row = entries_.data() + i * dim_;
        Complex acc = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            acc += row[j] * v[j];
        }
        out[i] = acc;
    }
}

std::vector<Complex> HermitianOperator::apply(std::span<const Complex> v) const
{
    std::vector<Complex> out(dim_);
    apply(v, out);
    return out;
}

double HermitianOperator::frobenius_norm() const
{
    return std::sqrt(squared_norm(entries_));
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b)
{
    a += b;
    return a;
}

HermitianOperator operator*(double scale, HermitianOperator h)
{
    h *= scale;
    return h;
}

double expectation(const HermitianOperator& h, const StateVector& v)
{
    const std::vector<Complex> hv = h.apply(v.amplitudes());
    return inner_product(v.amplitudes(), hv).real();
}

RankOneHamiltonian::RankOneHamiltonian(double scale, StateVector direction)
    : scale_(scale), direction_(std::move(direction))
{
    if (!(scale >= 0.0) || !std::isfinite(scale)) {
        throw InvalidParameter("RankOneHamiltonian: scale must be finite and non-negative");
    }
}

void RankOneHamiltonian::apply_add(std::span<const Complex> x, std::span<Complex> out) const
{
    check_same_dim(dim(), x.size(), "RankOneHamiltonian::apply_add");
    check_same_dim(dim(), out.size(), "RankOneHamiltonian::apply_add");
    const Complex c = scale_ * inner_product(direction_.amplitudes(), x);
    const auto v = direction_.amplitudes();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += c * v[i];
    }
}

StateVector Eigensystem::eigenvector(std::size_t k) const
{
    const auto row = vector(k);
    return StateVector::unitary_image(std::vector<Complex>(row.begin(), row.end()));
}

} // namespace asearch
