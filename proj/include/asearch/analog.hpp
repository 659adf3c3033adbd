#pragma once

// Continuous-time search with H = E|w><w| + E|s><s|.
//
// All dynamics starting from |s> stay in span{|w>, |r>}, where |r> is the
// normalized part of |s> orthogonal to |w>. In that basis the Hamiltonian is
//
//   E [ 1 + x^2        x sqrt(1-x^2) ]
//     [ x sqrt(1-x^2)  1 - x^2       ]
//
// with x = |<s|w>|, and the state rotates onto |w> at rate E x.

#include <optional>
#include <utility>

#include "asearch/linalg.hpp"

namespace asearch {

// (E, x) parameterization of the two-dimensional invariant subspace.
class TwoLevelSystem {
public:
    // Requires energy > 0 and 0 <= overlap <= 1.
    TwoLevelSystem(double energy, double overlap, std::optional<std::size_t> dim_hint = std::nullopt);

    double energy() const noexcept { return energy_; }
    double overlap() const noexcept { return overlap_; }
    // Metadata only; nothing here depends on N except through x.
    std::optional<std::size_t> dim_hint() const noexcept { return dim_hint_; }

private:
    double energy_;
    double overlap_;
    std::optional<std::size_t> dim_hint_;
};

// Amplitudes in the (|w>, |r>) ordering.
struct TwoLevelState {
    Complex amp_w;
    Complex amp_r;
};

// Orthonormal pair {|w>, |r>} built from a start state s and marked state w.
//
// The phase of <s|w> is absorbed into s: s' = absorbed_phase * s has
// <s'|w> = x >= 0, and every two-level formula refers to s'. Since |s><s| is
// phase blind, H is unchanged; a full-space state evolved from s equals
// conj(absorbed_phase) times the state evolved from s'.
struct ReducedBasis {
    double overlap;
    Complex absorbed_phase;
    StateVector marked;
    StateVector orthogonal;

    // Coordinates of absorbed_phase * psi along (|w>, |r>).
    TwoLevelState project(const StateVector& psi) const;

    // conj(absorbed_phase) * (amp_w |w> + amp_r |r>): the full-space state
    // corresponding to a two-level state evolved from s'.
    StateVector embed(const TwoLevelState& state) const;

    // Norm of the component of psi outside span{|w>, |r>}.
    double residual_norm(const StateVector& psi) const;
};

// Throws DimensionError on mismatched dims and DegenerateOverlapError when
// |<s|w>| >= 1 - 1e-12.
ReducedBasis reduced_basis(const StateVector& s, const StateVector& w);

HermitianOperator two_level_hamiltonian(const TwoLevelSystem& sys);

// (E(1-x), E(1+x)); the gap 2Ex sets the rotation rate.
std::pair<double, double> two_level_eigenvalues(const TwoLevelSystem& sys);

TwoLevelState evolve_closed_form(const TwoLevelSystem& sys, double t);

// sin^2(Ext) + x^2 cos^2(Ext)
double success_probability(const TwoLevelSystem& sys, double t);

// pi / (2Ex), the first time the success probability reaches one. Throws
// NoRotationError when x == 0.
double measurement_time(const TwoLevelSystem& sys);

// E|w><w| + E'|s><s| as a dense N x N matrix. E' may differ from E.
HermitianOperator assemble_search_hamiltonian(const RankOneHamiltonian& oracle, const RankOneHamiltonian& driver);

// The two-level system of oracle + driver. Throws UnequalScaleError unless
// both scales agree, DimensionError on mismatched dims.
TwoLevelSystem two_level_system(const RankOneHamiltonian& oracle, const RankOneHamiltonian& driver);

} // namespace asearch
