#include "asearch/analog.hpp"

#include <cmath>
#include <numbers>

namespace asearch {

namespace {

constexpr double kColinearTolerance = 1e-12;

Complex unit_phase_of(Complex z)
{
    const double m = std::abs(z);
    return m > 0.0 ? z / m : Complex(1.0, 0.0);
}

} // namespace

TwoLevelSystem::TwoLevelSystem(double energy, double overlap, std::optional<std::size_t> dim_hint)
    : energy_(energy), overlap_(overlap), dim_hint_(dim_hint)
{
    if (!(energy > 0.0) || !std::isfinite(energy)) {
        throw InvalidParameter("TwoLevelSystem: energy must be positive and finite");
    }
    if (!(overlap >= 0.0 && overlap <= 1.0)) {
        throw InvalidParameter("TwoLevelSystem: overlap must lie in [0, 1]");
    }
}

TwoLevelState ReducedBasis::project(const StateVector& psi) const
{
    return {absorbed_phase * inner_product(marked, psi), absorbed_phase * inner_product(orthogonal, psi)};
}

StateVector ReducedBasis::embed(const TwoLevelState& state) const
{
    const Complex back = std::conj(absorbed_phase);
    std::vector<Complex> v(marked.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = back * (state.amp_w * marked[i] + state.amp_r * orthogonal[i]);
    }
    return StateVector::unitary_image(std::move(v));
}

double ReducedBasis::residual_norm(const StateVector& psi) const
{
    const Complex cw = inner_product(marked, psi);
    const Complex cr = inner_product(orthogonal, psi);
    double acc = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        acc += std::norm(psi[i] - cw * marked[i] - cr * orthogonal[i]);
    }
    return std::sqrt(acc);
}

ReducedBasis reduced_basis(const StateVector& s, const StateVector& w)
{
    if (s.dim() != w.dim()) {
        throw DimensionError("reduced_basis: s and w have different dimensions");
    }
    const Complex sw = inner_product(s, w);
    const double x = std::abs(sw);
    if (x >= 1.0 - kColinearTolerance) {
        throw DegenerateOverlapError("reduced_basis: s and w are colinear, the subspace is one-dimensional");
    }
    // <s'|w> = conj(u) <s|w> is real and non-negative for u = phase(<s|w>).
    const Complex u = unit_phase_of(sw);
    const double scale = 1.0 / std::sqrt(1.0 - x * x);
    std::vector<Complex> r(s.dim());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = scale * (u * s[i] - x * w[i]);
    }
    return ReducedBasis{x, u, w, StateVector::unitary_image(std::move(r))};
}

HermitianOperator two_level_hamiltonian(const TwoLevelSystem& sys)
{
    const double e = sys.energy();
    const double x = sys.overlap();
    HermitianOperator h(2);
    h.set(0, 0, e * (1.0 + x * x));
    h.set(0, 1, e * x * std::sqrt(1.0 - x * x));
    h.set(1, 1, e * (1.0 - x * x));
    return h;
}

std::pair<double, double> two_level_eigenvalues(const TwoLevelSystem& sys)
{
    return {sys.energy() * (1.0 - sys.overlap()), sys.energy() * (1.0 + sys.overlap())};
}

TwoLevelState evolve_closed_form(const TwoLevelSystem& sys, double t)
{
    const double e = sys.energy();
    const double x = sys.overlap();
    const double angle = e * x * t;
    const Complex global = std::polar(1.0, -e * t);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {global * Complex(x * c, -s), global * std::sqrt(1.0 - x * x) * c};
}

double success_probability(const TwoLevelSystem& sys, double t)
{
    const double angle = sys.energy() * sys.overlap() * t;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    const double x = sys.overlap();
    return s * s + x * x * c * c;
}

double measurement_time(const TwoLevelSystem& sys)
{
    if (sys.overlap() == 0.0) {
        throw NoRotationError("measurement_time: x = 0, the driver never rotates the state toward |w>");
    }
    return std::numbers::pi / (2.0 * sys.energy() * sys.overlap());
}

HermitianOperator assemble_search_hamiltonian(const RankOneHamiltonian& oracle, const RankOneHamiltonian& driver)
{
    if (oracle.dim() != driver.dim()) {
        throw DimensionError("assemble_search_hamiltonian: oracle and driver dimensions differ");
    }
    HermitianOperator h = oracle.to_operator();
    h.add_rank_one(driver.scale(), driver.direction().amplitudes());
    return h;
}

TwoLevelSystem two_level_system(const RankOneHamiltonian& oracle, const RankOneHamiltonian& driver)
{
    if (oracle.dim() != driver.dim()) {
        throw DimensionError("two_level_system: oracle and driver dimensions differ");
    }
    if (oracle.scale() != driver.scale()) {
        throw UnequalScaleError("two_level_system: closed form needs equal oracle and driver scales");
    }
    const double x = std::min(1.0, std::abs(inner_product(driver.direction(), oracle.direction())));
    return TwoLevelSystem(oracle.scale(), x, oracle.dim());
}

} // namespace asearch
