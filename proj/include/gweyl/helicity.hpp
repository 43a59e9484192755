#pragma once

#include <vector>

#include "gweyl/spectral.hpp"

namespace gweyl {

/// alpha.p_hat in the requested representation. Its eigenvalue (chirality
/// times helicity) labels the states mixed by the seed-mass term.
ComplexMatrix chiral_helicity_operator(const Vec3& p_hat, const GammaBasis& basis);

/// Orthonormal eigenbasis of alpha.p_hat built from the two-spinor helicity
/// eigenvectors of sigma.p_hat. up_states carry eigenvalue +1, down_states
/// -1; within each pair, index 0 lives in the left-chirality block and
/// index 1 in the right-chirality block.
struct ChiralHelicityBasis {
    Vec3 p_hat;
    Representation representation;
    ComplexMatrix eta_op;
    std::array<SpinorState, 2> up_states;
    std::array<SpinorState, 2> down_states;

    /// Coefficients (up0, up1, down0, down1) of a state in this basis.
    std::array<Complex, 4> decompose(const SpinorState& state) const;
};

ChiralHelicityBasis build_chiral_helicity_basis(const Vec3& pvec, const GammaBasis& basis);

/// Max-norm residual of the commutator identity for the right-seeded
/// massless-family Hamiltonian:
///   [H, alpha.p_hat] = 2 m1 c^2 P_L (gamma.p_hat)
/// (the factor reads 2 m1 c / hbar in natural units). Zero seed mass is
/// allowed and gives a commuting pair.
double commutator_check(const Vec3& pvec, double m1, const GammaBasis& basis, Units units = {});

/// Residual of the coupled chiral-helicity system at fixed four-momentum:
///   gamma.p Psi_eta = m1 c P_R Psi_{-eta}   for eta = +1, -1.
/// The eta-projections of a Hamiltonian eigenstate satisfy it on the
/// massless shell. Throws OffShell away from E^2 = c^2 |p|^2.
double coupled_system_residual(const SpinorState& state_up, const SpinorState& state_down,
                               const FourMomentum& mom, double m1, const GammaBasis& basis,
                               Units units = {}, double shell_tol = 1e-8);

/// Occupation record of a chiral-helicity oscillation.
///
/// prob_down is the transition probability out of the eta = +1 sector,
/// Sum_d |<d|psi(t)>|^2 for a unit-norm initial state, and prob_up its
/// complement, so prob_up + prob_down = 1 by construction. The raw state
/// norm is recorded separately and is not folded into the probabilities:
/// for the non-hermitian family it drifts, and hiding that would defeat the
/// diagnostic.
struct OscillationTrace {
    std::vector<double> times;
    std::vector<double> prob_up;
    std::vector<double> prob_down;
    std::vector<double> norm;

    double amplitude_frequency = 0.0;    // survival-amplitude phase, rad/time
    double probability_frequency = 0.0;  // dominant DFT peak of prob_up, rad/time
    double fitted_frequency = 0.0;       // alias of probability_frequency
    double norm_drift_max = 0.0;
    double dft_bin_width = 0.0;          // zero-padded bin spacing, rad/time
};

/// psi(t) = exp(-i H t / hbar) psi(0) via eigen-decomposition, traced in the
/// given chiral-helicity basis. H must be diagonalizable; the time grid must
/// ascend. Frequencies are fitted only for uniform grids.
OscillationTrace evolve(const SpinorState& initial, const ComplexMatrix& h,
                        const std::vector<double>& t_grid, const ChiralHelicityBasis& chbasis,
                        Units units = {});

/// H + V Pi_minus with Pi_minus = (I - alpha.p_hat)/2: a minimal coupling
/// that only the eta = -1 states feel. Shifts the oscillation frequency.
ComplexMatrix add_chiral_interaction(const ComplexMatrix& h, double v,
                                     const ChiralHelicityBasis& chbasis);

/// Uniform grid of `samples` points covering `periods` periods of the
/// expected probability frequency 2 |p| c^2 / hbar.
std::vector<double> default_time_grid(double p_norm, Units units = {},
                                      std::size_t samples = 4096, double periods = 20.0);

/// Dominant-frequency fit (rad/time): Hann window, 8x zero-padded FFT,
/// parabolic peak interpolation. The real variant ignores the DC bin.
double fit_dominant_frequency(const std::vector<double>& signal, double dt);
double fit_dominant_frequency(const std::vector<Complex>& signal, double dt);

/// Zero-padded DFT bin spacing (rad/time) used by the fit at this grid size.
double dft_bin_width(std::size_t samples, double dt);

}  // namespace gweyl
