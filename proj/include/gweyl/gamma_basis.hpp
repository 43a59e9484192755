#pragma once

#include <array>

#include "gweyl/complex_matrix.hpp"

namespace gweyl {

enum class Representation { Standard, Spinorial };

const char* representation_name(Representation rep);

/// A concrete realization of the Dirac matrices with metric diag(+,-,-,-).
///
/// Standard:  gamma0 = diag(I,-I), gamma^i = offdiag(sigma^i, -sigma^i),
///            gamma5 = offdiag(I, I).
/// Spinorial: gamma0 = offdiag(I, I), gamma^i = offdiag(sigma^i, -sigma^i),
///            gamma5 = diag(-I, I), so P_L / P_R select the upper / lower
///            two-spinor block.
///
/// Every entry is one of {0, +-1, +-i}, so the algebra closes exactly in
/// floating point. Values are immutable after construction and safe to share
/// across threads.
struct GammaBasis {
    Representation representation;
    std::array<ComplexMatrix, 4> gamma;   // gamma^0 .. gamma^3
    ComplexMatrix gamma5;                 // i gamma^0 gamma^1 gamma^2 gamma^3
    std::array<ComplexMatrix, 3> alpha;   // alpha^i = gamma^0 gamma^i
    ComplexMatrix proj_right;             // (1 + gamma5)/2
    ComplexMatrix proj_left;              // (1 - gamma5)/2
    std::array<ComplexMatrix, 3> sigma;   // Pauli matrices

    GammaBasis(Representation rep, std::array<ComplexMatrix, 4> g, ComplexMatrix g5);
};

GammaBasis build_basis(Representation rep);

/// The Pauli matrices, shared by both representations.
const std::array<ComplexMatrix, 3>& pauli_matrices();

/// Unitary U with gamma_to^mu = U gamma_from^mu U^dagger for all mu.
/// Constructed once per direction and validated on first use.
const ComplexMatrix& representation_intertwiner(Representation from, Representation to);

/// Similarity transform U m U^-1 between representations.
ComplexMatrix change_representation(const ComplexMatrix& m, const GammaBasis& from,
                                    const GammaBasis& to);

/// Column-spinor transform v_to = U v_from.
Vec4 change_representation(const Vec4& v, Representation from, Representation to);

}  // namespace gweyl
