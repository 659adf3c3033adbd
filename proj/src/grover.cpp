#include "asearch/grover.hpp"

#include <cmath>
#include <numbers>

namespace asearch {

namespace {

constexpr std::size_t kDenseReferenceLimit = 64;

// Angle of psi away from |r> toward |w>, using <r|psi> = sum_{a != w} psi_a / sqrt(N-1).
double plane_angle(const GroverInstance& inst, const StateVector& psi)
{
    double rest = 0.0;
    for (std::size_t a = 0; a < psi.dim(); ++a) {
        if (a != inst.marked()) {
            rest += psi[a].real();
        }
    }
    const double amp_r = rest / std::sqrt(static_cast<double>(inst.dim() - 1));
    return std::atan2(psi[inst.marked()].real(), amp_r);
}

double unwrap_near(double angle, double previous)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return angle + two_pi * std::round((previous - angle) / two_pi);
}

} // namespace

GroverInstance::GroverInstance(std::size_t dim, std::size_t marked) : dim_(dim), marked_(marked)
{
    if (dim < 2) {
        throw InvalidParameter("GroverInstance: need N >= 2");
    }
    if (marked >= dim) {
        throw InvalidParameter("GroverInstance: marked index out of range");
    }
}

StateVector apply_uf(const GroverInstance& inst, const StateVector& v)
{
    if (v.dim() != inst.dim()) {
        throw DimensionError("apply_uf: state dimension does not match the instance");
    }
    std::vector<Complex> out(v.amplitudes().begin(), v.amplitudes().end());
    out[inst.marked()] = -out[inst.marked()];
    return StateVector::unitary_image(std::move(out));
}

StateVector apply_us(const StateVector& v)
{
    Complex sum = 0.0;
    for (const Complex& a : v.amplitudes()) {
        sum += a;
    }
    const Complex twice_mean = 2.0 * sum / static_cast<double>(v.dim());
    std::vector<Complex> out(v.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = twice_mean - v[i];
    }
    return StateVector::unitary_image(std::move(out));
}

HermitianOperator diffusion_matrix(std::size_t n)
{
    HermitianOperator h = HermitianOperator::identity(n, -1.0);
    h.add_rank_one(2.0, StateVector::uniform(n).amplitudes());
    return h;
}

StateVector apply_us_dense(const StateVector& v)
{
    if (v.dim() > kDenseReferenceLimit) {
        throw DimensionError("apply_us_dense: reference path is limited to N <= 64");
    }
    return StateVector::unitary_image(diffusion_matrix(v.dim()).apply(v.amplitudes()));
}

double rotation_angle(std::size_t n)
{
    if (n < 2) {
        throw InvalidParameter("rotation_angle: need N >= 2");
    }
    return 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n)));
}

Rotation2 reduced_step_matrix(std::size_t n)
{
    const double theta = rotation_angle(n);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // (|w>, |r>) ordering: U_f flips the first axis, U_s reflects about s.
    return {{{c, s}, {-s, c}}};
}

Rotation2 matrix_power(const Rotation2& m, std::size_t k)
{
    Rotation2 result{{{1.0, 0.0}, {0.0, 1.0}}};
    Rotation2 base = m;
    auto mul = [](const Rotation2& a, const Rotation2& b) {
        Rotation2 c{};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        return c;
    };
    while (k > 0) {
        if (k & 1U) {
            result = mul(result, base);
        }
        base = mul(base, base);
        k >>= 1U;
    }
    return result;
}

std::array<double, 2> reduced_initial_state(std::size_t n)
{
    const double nn = static_cast<double>(n);
    return {1.0 / std::sqrt(nn), std::sqrt(1.0 - 1.0 / nn)};
}

double reduced_success_probability(std::size_t n, std::size_t k)
{
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * rotation_angle(n) / 2.0);
    return s * s;
}

GroverRun run_grover(const GroverInstance& inst, std::size_t k)
{
    StateVector psi = StateVector::uniform(inst.dim());
    std::vector<double> probabilities;
    std::vector<double> angles;
    probabilities.reserve(k + 1);
    angles.reserve(k + 1);
    probabilities.push_back(std::norm(psi[inst.marked()]));
    angles.push_back(plane_angle(inst, psi));
    for (std::size_t step = 0; step < k; ++step) {
        psi = apply_us(apply_uf(inst, psi));
        probabilities.push_back(std::norm(psi[inst.marked()]));
        angles.push_back(unwrap_near(plane_angle(inst, psi), angles.back()));
    }
    return GroverRun{inst, k, std::move(probabilities), std::move(angles), 2 * k, std::move(psi)};
}

std::size_t optimal_iterations(std::size_t n)
{
    const double theta = rotation_angle(n);
    const double guess = std::round(std::numbers::pi / (2.0 * theta) - 0.5);
    const std::size_t center = guess > 0.0 ? static_cast<std::size_t>(guess) : 0;
    // sin^2 has one peak within the window center +- 1; scan it in ascending
    // k so equal values resolve to the smallest k.
    std::size_t best = center > 0 ? center - 1 : 0;
    double best_p = reduced_success_probability(n, best);
    for (std::size_t k = best + 1; k <= center + 1; ++k) {
        const double p = reduced_success_probability(n, k);
        if (p > best_p + 1e-12) {
            best = k;
            best_p = p;
        }
    }
    return best;
}

std::size_t sample_measurement(const StateVector& v, Rng& rng)
{
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        cumulative += std::norm(v[i]);
        if (u < cumulative) {
            return i;
        }
    }
    return v.dim() - 1;
}

} // namespace asearch
