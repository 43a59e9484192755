#pragma once

#include <array>
#include <vector>

#include "gweyl/operators.hpp"
#include "gweyl/spinor.hpp"

namespace gweyl {

/// Exact cofactor-expansion determinant (2x2 or 4x4).
Complex determinant(const ComplexMatrix& m);
Complex determinant(const WaveOperator& op);

/// Coefficients {c0, c1, c2, c3} of det(lambda I - A) = lambda^4 + c3 l^3 +
/// c2 l^2 + c1 l + c0, by the Faddeev-LeVerrier recursion.
std::array<Complex, 4> characteristic_polynomial(const ComplexMatrix& a);

/// All four roots of lambda^4 + c3 l^3 + c2 l^2 + c1 l + c0, closed form
/// (Ferrari) followed by a multiplicity-aware Newton polish so that repeated
/// roots do not lose half the working precision.
std::array<Complex, 4> solve_quartic(Complex c3, Complex c2, Complex c1, Complex c0);

/// Real roots E of det D(E, p) = 0 with multiplicities, sorted descending:
/// {+E0, +E0, -E0, -E0} with E0 = sqrt(c^2 |p|^2 + m_b^2 c^4). The closed
/// form follows from det D = (p.p - (m_b c)^2)^2, which the test suite checks
/// against the cofactor determinant.
std::vector<double> dispersion_roots(const Vec3& pvec, const MassParameters& masses);

/// Raw eigen-decomposition of a 4x4 complex matrix. Eigenvalues sorted by
/// (real desc, imag desc); eigenvectors unit-norm with a deterministic phase.
struct EigenDecomposition {
    std::array<Complex, 4> eigenvalues;
    std::array<Vec4, 4> eigenvectors;
    bool diagonalizable = true;
    double max_residual = 0.0;  // max over pairs of |A v - lambda v|
};

EigenDecomposition eigen_decompose(const ComplexMatrix& a);

struct SpectrumResult {
    std::array<Complex, 4> eigenvalues;
    std::array<SpinorState, 4> eigenvectors;
    bool diagonalizable = true;
    double max_residual = 0.0;
};

/// Full eigen-decomposition of the (generally non-hermitian) Hamiltonian at
/// spatial momentum pvec. Non-diagonalizable parameter points (for example
/// p = 0 with vanishing physical mass, where H is nilpotent) are flagged
/// rather than rejected.
SpectrumResult hamiltonian_spectrum(const Vec3& pvec, const MassParameters& masses,
                                    const GammaBasis& basis);

/// The chiral scaling pair mapping the generalized operator onto the Dirac
/// operator of mass m_b:
///   right-seeded: L = P_L + (m_b/m_a) P_R,  R = P_R + (m_a/m_b) P_L
/// so that L D(p; m_a, m_b) R = gamma.p - m_b c. R blows up as 1/m_b when the
/// physical mass tends to zero, which is why the massless family is not
/// equivalent to the Weyl equation. Defaults to the spinorial representation,
/// where the projectors are diagonal and the max entry of R is exactly
/// max(1, m_a/m_b).
struct EquivalencePair {
    ComplexMatrix left;
    ComplexMatrix right;
    double residual = 0.0;  // validation residual over internal sample momenta
};

EquivalencePair equivalence_transform(const MassParameters& masses,
                                      Representation rep = Representation::Spinorial);

/// Dense solve A x = b by partial-pivot LU; throws EigenFailure on a
/// numerically singular system.
Vec4 solve_linear(const ComplexMatrix& a, const Vec4& b);

}  // namespace gweyl
