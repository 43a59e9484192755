#pragma once

#include "gweyl/operators.hpp"
#include "gweyl/spinor.hpp"

namespace gweyl {

/// Max-norm residual of the two-component energy-momentum factorization
/// (E I - c sigma.p)(E I + c sigma.p) - (E^2 - c^2 |p|^2) I. An operator
/// identity, so the result is at rounding level for any (E, p).
double verify_factorization(double energy, const Vec3& pvec, Units units = {});

/// Assemble the four-spinor from a right-seeded two-component seed:
/// phi_L = psi, phi_R = (E/c + sigma.p) psi / (m_a c),
/// Psi = column(phi_R + phi_L, phi_R - phi_L)  [standard representation].
/// The seed momentum must lie on the m_b mass shell; the result is
/// annihilated by the corresponding generalized operator.
SpinorState build_four_spinor_right(const TwoSpinor& psi, const MassParameters& masses,
                                    double shell_tol = 1e-8);

/// Mirror construction: phi_R = psi, phi_L = (E/c - sigma.p) psi / (m_a c).
SpinorState build_four_spinor_left(const TwoSpinor& psi, const MassParameters& masses,
                                   double shell_tol = 1e-8);

/// Check the two first-order equations of the coupled set separately on
/// (phi_R, phi_L) in momentum space; returns the larger residual.
/// Right-seeded:  (E/c - sigma.p) phi_R = (m_b^2 c / m_a) phi_L
///                (E/c + sigma.p) phi_L = m_a c phi_R
/// Left-seeded:   (E/c + sigma.p) phi_L = (m_b^2 c / m_a) phi_R
///                (E/c - sigma.p) phi_R = m_a c phi_L
double roundtrip_check(const TwoSpinor& psi, const MassParameters& masses,
                       double shell_tol = 1e-8);

}  // namespace gweyl
