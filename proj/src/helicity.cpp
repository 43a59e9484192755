#include "gweyl/helicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gweyl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kZeroPadFactor = 8;

Vec3 unit_direction(const Vec3& pvec) {
    const double p = norm3(pvec);
    if (p == 0.0) {
        throw ZeroMomentumDirection("helicity is undefined at zero momentum");
    }
    return {pvec[0] / p, pvec[1] / p, pvec[2] / p};
}

/// Helicity eigenvectors of sigma.p_hat, i.e. the phase convention
///   h+ = (cos(t/2), e^{i phi} sin(t/2)),  h- = (-e^{-i phi} sin(t/2), cos(t/2)),
/// evaluated through the component form (1 + z, x + iy)/sqrt(2(1+z)) so the
/// eigenvector equation closes exactly. That chart degenerates at -z; within
/// z <= -1/2 the alternate chart (e^{-i phi} h+, e^{+i phi} h-), regular at
/// the south pole, is used instead.
std::pair<Vec2, Vec2> helicity_two_spinors(const Vec3& n) {
    const double x = n[0], y = n[1], z = n[2];
    if (z > -0.5) {
        Vec2 up{1.0 + z, Complex{x, y}};
        Vec2 down{Complex{-x, y}, 1.0 + z};
        const double scale = 1.0 / vec_norm(up);
        return {{up[0] * scale, up[1] * scale}, {down[0] * scale, down[1] * scale}};
    }
    Vec2 up{Complex{x, -y}, 1.0 - z};
    Vec2 down{z - 1.0, Complex{x, y}};
    const double scale = 1.0 / vec_norm(up);
    return {{up[0] * scale, up[1] * scale}, {down[0] * scale, down[1] * scale}};
}

Vec4 lift(const Vec2& upper, const Vec2& lower) {
    return {upper[0], upper[1], lower[0], lower[1]};
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey; n must be a power of two.
void fft_inplace(std::vector<Complex>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        const Complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = x[i + k];
                const Complex v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void apply_hann(std::vector<Complex>& x, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double w =
            0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(k) /
                                  static_cast<double>(n - 1)));
        x[k] *= w;
    }
}

double interpolate_peak(const std::vector<double>& mag, std::size_t k) {
    // Parabolic interpolation on log magnitude; clamp the offset to half a bin.
    if (k == 0 || k + 1 >= mag.size()) return 0.0;
    const double eps = 1e-300;
    const double l = std::log(mag[k - 1] + eps);
    const double c = std::log(mag[k] + eps);
    const double r = std::log(mag[k + 1] + eps);
    const double denom = l - 2.0 * c + r;
    if (denom == 0.0) return 0.0;
    return std::clamp(0.5 * (l - r) / denom, -0.5, 0.5);
}

double fit_peak(std::vector<Complex> x, double dt, bool skip_dc) {
    const std::size_t n = x.size();
    if (n < 16 || dt <= 0.0) return 0.0;
    apply_hann(x, n);
    const std::size_t nfft = next_pow2(n) * kZeroPadFactor;
    x.resize(nfft, Complex{});
    fft_inplace(x);

    std::vector<double> mag(nfft);
    for (std::size_t k = 0; k < nfft; ++k) mag[k] = std::abs(x[k]);

    // For real signals only half the spectrum is informative; for complex
    // ones the peak may sit at a negative frequency, so scan everything and
    // report the magnitude of the angular frequency.
    std::size_t kbest = skip_dc ? 1 : 0;
    const std::size_t kmax = skip_dc ? nfft / 2 : nfft;
    for (std::size_t k = (skip_dc ? 1 : 0); k < kmax; ++k) {
        if (mag[k] > mag[kbest]) kbest = k;
    }
    if (kbest == 0) return 0.0;
    const double delta = interpolate_peak(mag, kbest);
    double kf = static_cast<double>(kbest) + delta;
    if (!skip_dc && kf > static_cast<double>(nfft) / 2.0) kf -= static_cast<double>(nfft);
    return std::abs(2.0 * kPi * kf / (static_cast<double>(nfft) * dt));
}

}  // namespace

double dft_bin_width(std::size_t samples, double dt) {
    const std::size_t nfft = next_pow2(samples) * kZeroPadFactor;
    return 2.0 * kPi / (static_cast<double>(nfft) * dt);
}

double fit_dominant_frequency(const std::vector<double>& signal, double dt) {
    double mean = 0.0;
    for (double v : signal) mean += v;
    mean /= static_cast<double>(signal.size());
    std::vector<Complex> x(signal.size());
    for (std::size_t k = 0; k < signal.size(); ++k) x[k] = signal[k] - mean;
    return fit_peak(std::move(x), dt, /*skip_dc=*/true);
}

double fit_dominant_frequency(const std::vector<Complex>& signal, double dt) {
    return fit_peak(signal, dt, /*skip_dc=*/false);
}

ComplexMatrix chiral_helicity_operator(const Vec3& p_hat, const GammaBasis& basis) {
    const Vec3 n = unit_direction(p_hat);
    if (std::abs(norm3(p_hat) - 1.0) > 1e-12) {
        throw InvalidParameter("chiral_helicity_operator expects a unit direction");
    }
    return basis.alpha[0] * n[0] + basis.alpha[1] * n[1] + basis.alpha[2] * n[2];
}

std::array<Complex, 4> ChiralHelicityBasis::decompose(const SpinorState& state) const {
    return {inner(up_states[0].components, state.components),
            inner(up_states[1].components, state.components),
            inner(down_states[0].components, state.components),
            inner(down_states[1].components, state.components)};
}

ChiralHelicityBasis build_chiral_helicity_basis(const Vec3& pvec, const GammaBasis& basis) {
    const Vec3 n = unit_direction(pvec);
    auto [h_up, h_down] = helicity_two_spinors(n);

    // In the spinorial representation alpha.p_hat = diag(-sigma.p_hat,
    // sigma.p_hat), so eta = +1 pairs the negative-helicity two-spinor in the
    // left block with the positive-helicity one in the right block.
    const Vec2 zero2{};
    std::array<Vec4, 2> up_sp = {lift(h_down, zero2), lift(zero2, h_up)};
    std::array<Vec4, 2> down_sp = {lift(h_up, zero2), lift(zero2, h_down)};

    if (basis.representation != Representation::Spinorial) {
        for (auto& v : up_sp)
            v = change_representation(v, Representation::Spinorial, basis.representation);
        for (auto& v : down_sp)
            v = change_representation(v, Representation::Spinorial, basis.representation);
    }

    const double p = norm3(pvec);
    const double energy = p;  // massless shell at c = 1 units of the caller
    const FourMomentum mom{energy, pvec};

    ChiralHelicityBasis out{
        n,
        basis.representation,
        basis.alpha[0] * n[0] + basis.alpha[1] * n[1] + basis.alpha[2] * n[2],
        {SpinorState{up_sp[0], mom}, SpinorState{up_sp[1], mom}},
        {SpinorState{down_sp[0], mom}, SpinorState{down_sp[1], mom}}};
    return out;
}

double commutator_check(const Vec3& pvec, double m1, const GammaBasis& basis, Units units) {
    const Vec3 n = unit_direction(pvec);
    if (m1 < 0.0) throw InvalidParameter("commutator_check expects m1 >= 0");

    const FourMomentum mom{0.0, pvec};
    const ComplexMatrix eta =
        basis.alpha[0] * n[0] + basis.alpha[1] * n[1] + basis.alpha[2] * n[2];
    ComplexMatrix h = weyl_hamiltonian(mom, basis, units);
    if (m1 > 0.0) {
        h = hamiltonian(mom, MassParameters(m1, 0.0, SeedChirality::RightSeeded, units), basis);
    }

    const ComplexMatrix gamma_n =
        basis.gamma[1] * n[0] + basis.gamma[2] * n[1] + basis.gamma[3] * n[2];
    const double coupling = 2.0 * m1 * units.c * units.c;
    return (commutator(h, eta) - basis.proj_left * gamma_n * coupling).max_abs();
}

double coupled_system_residual(const SpinorState& state_up, const SpinorState& state_down,
                               const FourMomentum& mom, double m1, const GammaBasis& basis,
                               Units units, double shell_tol) {
    const double violation = mom.shell_violation(0.0, units.c);
    const double scale = std::max(1.0, mom.energy * mom.energy);
    if (std::abs(violation) >= shell_tol * scale) {
        throw OffShell("coupled system requires the massless shell, violation " +
                           std::to_string(violation),
                       violation);
    }
    const ComplexMatrix kin = kinetic_operator(mom, basis, units);
    const double coupling = m1 * units.c;
    const Vec4 r_up = vec_sub(kin.apply(state_up.components),
                              vec_scale(coupling, basis.proj_right.apply(state_down.components)));
    const Vec4 r_down = vec_sub(kin.apply(state_down.components),
                                vec_scale(coupling, basis.proj_right.apply(state_up.components)));
    return std::max(vec_norm(r_up), vec_norm(r_down));
}

ComplexMatrix add_chiral_interaction(const ComplexMatrix& h, double v,
                                     const ChiralHelicityBasis& chbasis) {
    const ComplexMatrix pi_minus =
        (ComplexMatrix::identity(4) - chbasis.eta_op) * 0.5;
    return h + pi_minus * v;
}

std::vector<double> default_time_grid(double p_norm, Units units, std::size_t samples,
                                      double periods) {
    if (p_norm <= 0.0) throw InvalidParameter("default_time_grid needs |p| > 0");
    if (samples < 16) throw InvalidParameter("default_time_grid needs at least 16 samples");
    const double omega = 2.0 * p_norm * units.c * units.c / units.hbar;
    const double total = periods * 2.0 * kPi / omega;
    std::vector<double> grid(samples);
    const double dt = total / static_cast<double>(samples);
    for (std::size_t k = 0; k < samples; ++k) grid[k] = dt * static_cast<double>(k);
    return grid;
}

OscillationTrace evolve(const SpinorState& initial, const ComplexMatrix& h,
                        const std::vector<double>& t_grid, const ChiralHelicityBasis& chbasis,
                        Units units) {
    if (t_grid.empty()) throw InvalidParameter("evolve needs a non-empty time grid");
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        if (!(t_grid[k] > t_grid[k - 1])) {
            throw InvalidParameter("evolve needs a strictly ascending time grid");
        }
    }

    EigenDecomposition eig = eigen_decompose(h);
    if (!eig.diagonalizable) {
        throw NonDiagonalizable("evolve requires a diagonalizable Hamiltonian");
    }

    const double n0 = initial.norm();
    if (n0 == 0.0) throw InvalidParameter("evolve needs a nonzero initial state");
    const Vec4 psi0 = vec_scale(1.0 / n0, initial.components);

    // Expansion coefficients: V c = psi0.
    ComplexMatrix v(4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) v(i, j) = eig.eigenvectors[j][i];
    const Vec4 coef = solve_linear(v, psi0);

    OscillationTrace trace;
    const std::size_t nt = t_grid.size();
    trace.times = t_grid;
    trace.prob_up.resize(nt);
    trace.prob_down.resize(nt);
    trace.norm.resize(nt);

    std::vector<Complex> survival(nt);
    for (std::size_t k = 0; k < nt; ++k) {
        const double t = t_grid[k];
        Vec4 psi{};
        for (int j = 0; j < 4; ++j) {
            const Complex phase = std::exp(Complex(0.0, -1.0) * eig.eigenvalues[j] *
                                           (t / units.hbar));
            psi = vec_add(psi, vec_scale(coef[j] * phase, eig.eigenvectors[j]));
        }
        const auto coeffs = chbasis.decompose(SpinorState{psi, initial.momentum});
        const double down = std::norm(coeffs[2]) + std::norm(coeffs[3]);
        trace.prob_down[k] = down;
        trace.prob_up[k] = 1.0 - down;
        trace.norm[k] = vec_norm(psi);
        survival[k] = inner(psi0, psi);
    }

    trace.norm_drift_max = 0.0;
    for (double n : trace.norm) {
        trace.norm_drift_max = std::max(trace.norm_drift_max, std::abs(n - trace.norm[0]));
    }

    bool uniform = nt >= 16;
    const double dt = nt > 1 ? t_grid[1] - t_grid[0] : 0.0;
    for (std::size_t k = 1; k + 1 < nt && uniform; ++k) {
        if (std::abs((t_grid[k + 1] - t_grid[k]) - dt) > 1e-9 * dt) uniform = false;
    }
    if (uniform) {
        trace.probability_frequency = fit_dominant_frequency(trace.prob_up, dt);
        trace.amplitude_frequency = fit_dominant_frequency(survival, dt);
        trace.dft_bin_width = dft_bin_width(nt, dt);
    } else {
        trace.probability_frequency = std::numeric_limits<double>::quiet_NaN();
        trace.amplitude_frequency = std::numeric_limits<double>::quiet_NaN();
        trace.dft_bin_width = std::numeric_limits<double>::quiet_NaN();
    }
    trace.fitted_frequency = trace.probability_frequency;
    return trace;
}

}  // namespace gweyl
