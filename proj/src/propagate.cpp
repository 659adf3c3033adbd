#include <cmath>

#include "asearch/linalg.hpp"

namespace asearch {

Propagator::Propagator(const HermitianOperator& h) : eig_(eigendecompose(h)) {}

Propagator::Propagator(Eigensystem eig) : eig_(std::move(eig)) {}

std::vector<Complex> Propagator::coefficients(std::span<const Complex> v) const
{
    if (v.size() != eig_.dim) {
        throw DimensionError("Propagator::coefficients: dimension mismatch");
    }
    std::vector<Complex> c(eig_.dim);
    for (std::size_t k = 0; k < eig_.dim; ++k) {
        c[k] = inner_product(eig_.vector(k), v);
    }
    return c;
}

void Propagator::evaluate(std::span<const Complex> coefficients, double t, std::span<Complex> out) const
{
    const std::size_t n = eig_.dim;
    if (coefficients.size() != n || out.size() != n) {
        throw DimensionError("Propagator::evaluate: dimension mismatch");
    }
    std::fill(out.begin(), out.end(), Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const Complex weight = std::polar(1.0, -eig_.values[k] * t) * coefficients[k];
        const Complex* vk = eig_.vectors.data() + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += weight * vk[i];
        }
    }
}

StateVector Propagator::apply(double t, const StateVector& v) const
{
    if (t == 0.0) {
        return v;
    }
    const std::vector<Complex> c = coefficients(v.amplitudes());
    std::vector<Complex> out(eig_.dim);
    evaluate(c, t, out);
    return StateVector::unitary_image(std::move(out));
}

StateVector expm_apply(const HermitianOperator& h, double t, const StateVector& v)
{
    if (h.dim() != v.dim()) {
        throw DimensionError("expm_apply: operator and state dimensions differ");
    }
    if (!std::isfinite(t)) {
        throw InvalidParameter("expm_apply: time must be finite");
    }
    if (t == 0.0) {
        return v;
    }
    return Propagator(h).apply(t, v);
}

StateVector taylor_propagate(const LinearMap& h, double norm_bound, double t, const StateVector& v)
{
    if (!std::isfinite(t) || !(norm_bound >= 0.0)) {
        throw InvalidParameter("taylor_propagate: time and norm bound must be finite and non-negative");
    }
    if (t == 0.0 || norm_bound == 0.0) {
        return v;
    }
    const std::size_t n = v.dim();
    std::vector<Complex> psi(v.amplitudes().begin(), v.amplitudes().end());

    const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * norm_bound * std::abs(t))));
    const double h_step = t / steps;
    std::vector<Complex> term(n), next(n);
    for (int s = 0; s < steps; ++s) {
        term = psi;
        std::vector<Complex> acc = psi;
        // term_k = (-i h_step H)^k / k! psi; ||term_k|| <= (1/2)^k / k!
        for (int k = 1; k <= 40; ++k) {
            h(term, next);
            const Complex factor = Complex(0.0, -h_step / k);
            double term_norm = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                term[i] = factor * next[i];
                acc[i] += term[i];
                term_norm += std::norm(term[i]);
            }
            if (term_norm < 1e-36) {
                break;
            }
        }
        psi = std::move(acc);
    }
    return StateVector::unitary_image(std::move(psi));
}

} // namespace asearch
