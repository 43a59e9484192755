#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gweyl/gamma_basis.hpp"
#include "gweyl/momentum.hpp"

namespace gweyl {

/// Momentum-space value of a generalized wave operator on a plane wave,
/// together with everything needed to re-derive it.
struct WaveOperator {
    ComplexMatrix matrix;
    FourMomentum momentum;
    MassParameters masses;
    Representation representation;
};

/// The two-component factors (E I - c sigma.p, E I + c sigma.p).
/// Their product is (E^2 - c^2 |p|^2) I identically.
std::pair<ComplexMatrix, ComplexMatrix> two_component_factors(const FourMomentum& mom,
                                                              Units units = {});

/// gamma^mu p_mu with p_mu = (E/c, -p). Momentum units.
ComplexMatrix kinetic_operator(const FourMomentum& mom, const GammaBasis& basis,
                               Units units = {});

/// The chiral-projector mass operator, in momentum units:
///   right-seeded: (m_b^2 c / m_a) P_L + (m_a c) P_R
///   left-seeded:  (m_b^2 c / m_a) P_R + (m_a c) P_L
ComplexMatrix mass_term(const MassParameters& masses, const GammaBasis& basis);

/// D(p) = gamma^mu p_mu - mass_term. Reduces to the Dirac operator
/// gamma^mu p_mu - m c for m_a = m_b = m.
WaveOperator generalized_operator(const FourMomentum& mom, const MassParameters& masses,
                                  const GammaBasis& basis);

/// Convenience wrapper: the generalized operator with vanishing physical
/// mass, i.e. gamma^mu p_mu - m_seed c P_R (right-seeded) or ... P_L.
WaveOperator massless_operator(const FourMomentum& mom, double m_seed, SeedChirality chirality,
                               const GammaBasis& basis, Units units = {});

/// H = c alpha.p + c gamma^0 (mass term), obtained by multiplying the wave
/// operator by gamma^0 and isolating the energy term; on plane waves
/// c gamma^0 D(p) = E I - H. Not hermitian unless m_a = m_b.
ComplexMatrix hamiltonian(const FourMomentum& mom, const MassParameters& masses,
                          const GammaBasis& basis);

/// The massless-limit Hamiltonian c alpha.p (no mass term at all).
ComplexMatrix weyl_hamiltonian(const FourMomentum& mom, const GammaBasis& basis,
                               Units units = {});

/// True iff gamma5 D(p) gamma5 = -D(p) for every sample, which holds exactly
/// when the mass term vanishes. Pass std::nullopt to test the pure kinetic
/// operator.
bool chiral_invariance_check(const std::optional<MassParameters>& masses,
                             const std::vector<FourMomentum>& sample_momenta,
                             const GammaBasis& basis, double tol = kDefaultTolerance);

}  // namespace gweyl
