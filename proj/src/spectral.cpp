#include "gweyl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gweyl {

namespace {

Complex det2(const ComplexMatrix& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Complex minor3(const ComplexMatrix& m, std::size_t row, std::size_t col) {
    // 3x3 determinant of the 4x4 with one row/column struck out.
    std::size_t r[3], c[3], ri = 0, ci = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k != row) r[ri++] = k;
        if (k != col) c[ci++] = k;
    }
    return m(r[0], c[0]) * (m(r[1], c[1]) * m(r[2], c[2]) - m(r[1], c[2]) * m(r[2], c[1])) -
           m(r[0], c[1]) * (m(r[1], c[0]) * m(r[2], c[2]) - m(r[1], c[2]) * m(r[2], c[0])) +
           m(r[0], c[2]) * (m(r[1], c[0]) * m(r[2], c[1]) - m(r[1], c[1]) * m(r[2], c[0]));
}

// Minimal deterministic generator for iteration starting vectors; avoids any
// dependence on library distribution internals.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    double next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1p-53 * 2.0 - 1.0;
    }
};

Complex stable_sqrt(Complex z) { return std::sqrt(z); }

// Roots of y^2 + b y + c = 0 with the numerically stable pairing.
std::pair<Complex, Complex> solve_quadratic(Complex b, Complex c) {
    Complex s = stable_sqrt(b * b - 4.0 * c);
    if (std::real(std::conj(b) * s) > 0.0) s = -s;
    Complex y1 = (-b + s) / 2.0;
    Complex y2 = (std::abs(y1) > 0.0) ? c / y1 : -b / 2.0;
    return {y1, y2};
}

// One root of t^3 + a t^2 + b t + c = 0 (Cardano), the branch with the
// largest magnitude for use as a Ferrari resolvent.
Complex cubic_root(Complex a, Complex b, Complex c) {
    const Complex p = b - a * a / 3.0;
    const Complex q = c + (2.0 * a * a * a - 9.0 * a * b) / 27.0;
    const Complex s = stable_sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex w = -q / 2.0 + s;
    if (std::abs(w) < std::abs(-q / 2.0 - s)) w = -q / 2.0 - s;
    Complex best{};
    double best_mag = -1.0;
    if (std::abs(w) == 0.0) {
        best = std::pow(-q, 1.0 / 3.0);
        Complex u = best;
        Complex t = u - a / 3.0;
        return t;
    }
    const Complex u0 = std::pow(w, 1.0 / 3.0);
    const Complex omega{-0.5, std::sqrt(3.0) / 2.0};
    Complex u = u0;
    for (int k = 0; k < 3; ++k) {
        const Complex t = u - p / (3.0 * u) - a / 3.0;
        if (std::abs(t) > best_mag) {
            best_mag = std::abs(t);
            best = t;
        }
        u *= omega;
    }
    return best;
}

Complex eval_poly(const std::array<Complex, 5>& coef, Complex x) {
    // coef[k] multiplies x^k
    Complex acc = coef[4];
    for (int k = 3; k >= 0; --k) acc = acc * x + coef[k];
    return acc;
}

// Newton refinement of repeated roots: a root of multiplicity m of P is a
// simple root of the (m-1)-th derivative, so polish there.
Complex polish_root(const std::array<Complex, 5>& poly, Complex x0, int multiplicity) {
    std::array<Complex, 5> target = poly;
    for (int d = 1; d < multiplicity; ++d) {
        std::array<Complex, 5> deriv{};
        for (int k = 1; k < 5; ++k) deriv[k - 1] = target[k] * static_cast<double>(k);
        target = deriv;
    }
    std::array<Complex, 5> dtarget{};
    for (int k = 1; k < 5; ++k) dtarget[k - 1] = target[k] * static_cast<double>(k);

    Complex x = x0;
    for (int it = 0; it < 40; ++it) {
        const Complex f = eval_poly(target, x);
        const Complex df = eval_poly(dtarget, x);
        if (std::abs(df) == 0.0) break;
        const Complex step = f / df;
        x -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    return x;
}

}  // namespace

Complex determinant(const ComplexMatrix& m) {
    if (m.dim() == 2) return det2(m);
    Complex det{};
    double sign = 1.0;
    for (std::size_t j = 0; j < 4; ++j) {
        det += sign * m(0, j) * minor3(m, 0, j);
        sign = -sign;
    }
    return det;
}

Complex determinant(const WaveOperator& op) { return determinant(op.matrix); }

std::array<Complex, 4> characteristic_polynomial(const ComplexMatrix& a) {
    if (a.dim() != 4) throw ShapeMismatch("characteristic_polynomial needs a 4x4 matrix");
    const ComplexMatrix id = ComplexMatrix::identity(4);
    const Complex c3 = -a.trace();
    const ComplexMatrix m2 = a * (a + id * c3);
    const Complex c2 = -m2.trace() / 2.0;
    const ComplexMatrix m3 = a * (m2 + id * c2);
    const Complex c1 = -m3.trace() / 3.0;
    const ComplexMatrix m4 = a * (m3 + id * c1);
    const Complex c0 = -m4.trace() / 4.0;
    return {c0, c1, c2, c3};
}

std::array<Complex, 4> solve_quartic(Complex c3, Complex c2, Complex c1, Complex c0) {
    // Depress: lambda = y - c3/4.
    const Complex a = c3, b = c2, c = c1, d = c0;
    const Complex p = b - 3.0 * a * a / 8.0;
    const Complex q = c - a * b / 2.0 + a * a * a / 8.0;
    const Complex r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;

    const double scale = 1.0 + std::max({std::abs(p), std::abs(q), std::abs(r)});
    std::array<Complex, 4> y;
    if (std::abs(q) <= 1e-14 * scale) {
        // Biquadratic. This is the exact branch for the spectra of the
        // traceless Hamiltonians, whose characteristic polynomial is
        // (lambda^2 - E0^2)^2.
        auto [u1, u2] = solve_quadratic(p, r);
        const Complex s1 = stable_sqrt(u1);
        const Complex s2 = stable_sqrt(u2);
        y = {s1, -s1, s2, -s2};
    } else {
        // Ferrari: resolvent 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0.
        const Complex m =
            cubic_root(p, (2.0 * p * p - 8.0 * r) / 8.0, -(q * q) / 8.0);
        const Complex s2m = stable_sqrt(2.0 * m);
        const Complex half_p = p / 2.0;
        // y^4 + p y^2 + q y + r = (y^2 - s2m y + half_p + m + q/(2 s2m))
        //                         (y^2 + s2m y + half_p + m - q/(2 s2m))
        const Complex shift = (std::abs(s2m) > 0.0) ? q / (2.0 * s2m) : Complex{};
        auto [y1, y2] = solve_quadratic(-s2m, half_p + m + shift);
        auto [y3, y4] = solve_quadratic(s2m, half_p + m - shift);
        y = {y1, y2, y3, y4};
    }

    std::array<Complex, 4> roots;
    for (int k = 0; k < 4; ++k) roots[k] = y[k] - a / 4.0;

    // Cluster nearby roots and polish each cluster at its multiplicity.
    const std::array<Complex, 5> poly = {c0, c1, c2, c3, Complex{1.0}};
    double rscale = 1.0;
    for (const auto& z : roots) rscale = std::max(rscale, std::abs(z));
    const double cluster_tol = 1e-5 * rscale;

    std::array<bool, 4> used{};
    std::array<Complex, 4> polished;
    std::size_t out = 0;
    for (int i = 0; i < 4; ++i) {
        if (used[i]) continue;
        std::vector<int> cluster{i};
        for (int j = i + 1; j < 4; ++j) {
            if (!used[j] && std::abs(roots[j] - roots[i]) < cluster_tol) {
                used[j] = true;
                cluster.push_back(j);
            }
        }
        Complex mean{};
        double worst = 0.0;
        for (int idx : cluster) {
            mean += roots[idx];
            worst = std::max(worst, std::abs(eval_poly(poly, roots[idx])));
        }
        mean /= static_cast<double>(cluster.size());
        Complex refined = polish_root(poly, mean, static_cast<int>(cluster.size()));
        if (std::abs(eval_poly(poly, refined)) > worst) refined = mean;
        for (std::size_t k = 0; k < cluster.size(); ++k) polished[out++] = refined;
    }
    return polished;
}

std::vector<double> dispersion_roots(const Vec3& pvec, const MassParameters& masses) {
    const double c = masses.units().c;
    const double p = norm3(pvec);
    const double mb = masses.physical_mass();
    const double e0 = std::sqrt(c * c * p * p + mb * mb * c * c * c * c);
    return {e0, e0, -e0, -e0};
}

namespace {

struct Lu {
    ComplexMatrix lu{4};
    std::array<std::size_t, 4> perm{};
    bool patched = false;
};

Lu lu_factor(const ComplexMatrix& a, double pivot_floor) {
    Lu f;
    f.lu = a;
    for (std::size_t i = 0; i < 4; ++i) f.perm[i] = i;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        double best = std::abs(f.lu(col, col));
        for (std::size_t row = col + 1; row < 4; ++row) {
            if (std::abs(f.lu(row, col)) > best) {
                best = std::abs(f.lu(row, col));
                piv = row;
            }
        }
        if (piv != col) {
            for (std::size_t j = 0; j < 4; ++j) std::swap(f.lu(col, j), f.lu(piv, j));
            std::swap(f.perm[col], f.perm[piv]);
        }
        if (std::abs(f.lu(col, col)) < pivot_floor) {
            f.lu(col, col) = pivot_floor;
            f.patched = true;
        }
        for (std::size_t row = col + 1; row < 4; ++row) {
            const Complex factor = f.lu(row, col) / f.lu(col, col);
            f.lu(row, col) = factor;
            for (std::size_t j = col + 1; j < 4; ++j) {
                f.lu(row, j) -= factor * f.lu(col, j);
            }
        }
    }
    return f;
}

Vec4 lu_solve(const Lu& f, const Vec4& b) {
    Vec4 x{};
    for (std::size_t i = 0; i < 4; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < 4; ++i) {
        for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    }
    for (int i = 3; i >= 0; --i) {
        for (std::size_t j = i + 1; j < 4; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

double norm1(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.dim(); ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

bool invert4(const ComplexMatrix& a, ComplexMatrix& out) {
    // Gauss-Jordan with partial pivoting.
    ComplexMatrix work = a;
    out = ComplexMatrix::identity(4);
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        double best = std::abs(work(col, col));
        for (std::size_t row = col + 1; row < 4; ++row) {
            if (std::abs(work(row, col)) > best) {
                best = std::abs(work(row, col));
                piv = row;
            }
        }
        if (best < 1e-300) return false;
        if (piv != col) {
            for (std::size_t j = 0; j < 4; ++j) {
                std::swap(work(col, j), work(piv, j));
                std::swap(out(col, j), out(piv, j));
            }
        }
        const Complex inv = 1.0 / work(col, col);
        for (std::size_t j = 0; j < 4; ++j) {
            work(col, j) *= inv;
            out(col, j) *= inv;
        }
        for (std::size_t row = 0; row < 4; ++row) {
            if (row == col) continue;
            const Complex factor = work(row, col);
            if (factor == Complex{}) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                work(row, j) -= factor * work(col, j);
                out(row, j) -= factor * out(col, j);
            }
        }
    }
    return true;
}

Vec4 orthogonalize(Vec4 v, const std::vector<Vec4>& against) {
    for (const auto& u : against) {
        const Complex proj = inner(u, v);
        v = vec_sub(v, vec_scale(proj, u));
    }
    return v;
}

void fix_phase(Vec4& v) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            imax = i;
        }
    }
    if (best == 0.0) return;
    const Complex phase = std::conj(v[imax]) / best;
    v = vec_scale(phase, v);
}

double residual_of(const ComplexMatrix& a, const Vec4& v, Complex lambda) {
    Vec4 av = a.apply(v);
    return vec_dist(av, vec_scale(lambda, v));
}

}  // namespace

Vec4 solve_linear(const ComplexMatrix& a, const Vec4& b) {
    if (a.dim() != 4) throw ShapeMismatch("solve_linear needs a 4x4 matrix");
    const double scale = std::max(1.0, a.max_abs());
    Lu f = lu_factor(a, 1e-14 * scale);
    if (f.patched) throw EigenFailure("linear system is numerically singular");
    return lu_solve(f, b);
}

EigenDecomposition eigen_decompose(const ComplexMatrix& a) {
    if (a.dim() != 4) throw ShapeMismatch("eigen_decompose needs a 4x4 matrix");
    const double amax = a.max_abs();
    if (!std::isfinite(amax)) throw EigenFailure("matrix has non-finite entries");

    const auto coef = characteristic_polynomial(a);
    auto roots = solve_quartic(coef[3], coef[2], coef[1], coef[0]);

    const double scale = std::max(1.0, amax);
    const double group_tol = 1e-8;

    // Group equal eigenvalues (relative tolerance, scaled by max(1, |l|)).
    std::array<bool, 4> used{};
    std::vector<std::pair<Complex, int>> groups;  // value, multiplicity
    for (int i = 0; i < 4; ++i) {
        if (used[i]) continue;
        int mult = 1;
        for (int j = i + 1; j < 4; ++j) {
            const double tol = group_tol * std::max(1.0, std::abs(roots[i]));
            if (!used[j] && std::abs(roots[j] - roots[i]) < tol) {
                used[j] = true;
                ++mult;
            }
        }
        groups.emplace_back(roots[i], mult);
    }

    EigenDecomposition out;
    bool defect = false;
    std::size_t slot = 0;
    SplitMix64 rng(0x5eed5eed5eed5eedULL);

    for (std::size_t g = 0; g < groups.size(); ++g) {
        const Complex lambda = groups[g].first;
        const int mult = groups[g].second;
        ComplexMatrix shifted = a - ComplexMatrix::identity(4) * lambda;
        Lu f = lu_factor(shifted, 1e-15 * scale);

        std::vector<Vec4> accepted;
        for (int k = 0; k < mult; ++k) {
            Vec4 best_v{};
            double best_res = std::numeric_limits<double>::infinity();
            for (int attempt = 0; attempt < 4 && best_res > 1e-10 * scale; ++attempt) {
                Vec4 v;
                for (auto& x : v) x = Complex(rng.next(), rng.next());
                for (int iter = 0; iter < 4; ++iter) {
                    v = lu_solve(f, v);
                    v = orthogonalize(v, accepted);
                    const double n = vec_norm(v);
                    if (n < 1e-280) break;
                    v = vec_scale(1.0 / n, v);
                }
                const double res = residual_of(a, v, lambda);
                if (res < best_res) {
                    best_res = res;
                    best_v = v;
                }
            }
            if (!(best_res <= 1e-9 * scale)) defect = true;
            fix_phase(best_v);
            accepted.push_back(best_v);
            out.eigenvalues[slot] = lambda;
            out.eigenvectors[slot] = best_v;
            out.max_residual = std::max(out.max_residual, best_res);
            ++slot;
        }
    }

    // Sort by (real desc, imag desc), vectors riding along.
    std::array<int, 4> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const Complex a1 = out.eigenvalues[i], b1 = out.eigenvalues[j];
        if (a1.real() != b1.real()) return a1.real() > b1.real();
        return a1.imag() > b1.imag();
    });
    EigenDecomposition sorted = out;
    for (int i = 0; i < 4; ++i) {
        sorted.eigenvalues[i] = out.eigenvalues[order[i]];
        sorted.eigenvectors[i] = out.eigenvectors[order[i]];
    }

    // Condition of the eigenvector matrix detects the non-diagonalizable case.
    ComplexMatrix v(4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) v(i, j) = sorted.eigenvectors[j][i];
    ComplexMatrix vinv(4);
    double cond = std::numeric_limits<double>::infinity();
    if (invert4(v, vinv)) cond = norm1(v) * norm1(vinv);
    sorted.diagonalizable = !defect && cond < 1e12;
    return sorted;
}

SpectrumResult hamiltonian_spectrum(const Vec3& pvec, const MassParameters& masses,
                                    const GammaBasis& basis) {
    const FourMomentum mom{0.0, pvec};  // H depends on the spatial momentum only
    const ComplexMatrix h = hamiltonian(mom, masses, basis);
    EigenDecomposition eig = eigen_decompose(h);
    SpectrumResult result{{},
                          {SpinorState{}, SpinorState{}, SpinorState{}, SpinorState{}},
                          eig.diagonalizable,
                          eig.max_residual};
    result.eigenvalues = eig.eigenvalues;
    for (int k = 0; k < 4; ++k) {
        result.eigenvectors[k] =
            SpinorState{eig.eigenvectors[k], FourMomentum{eig.eigenvalues[k].real(), pvec}};
    }
    return result;
}

EquivalencePair equivalence_transform(const MassParameters& masses, Representation rep) {
    if (masses.physical_mass() <= 0.0) {
        throw MasslessLimit(
            "the equivalence transform does not exist at vanishing physical mass: its "
            "elements scale as 1/m_b");
    }
    const GammaBasis basis = build_basis(rep);
    const double ratio_lr = masses.physical_mass() / masses.seed_mass();
    const double ratio_rl = masses.seed_mass() / masses.physical_mass();

    ComplexMatrix left(4), right(4);
    if (masses.chirality() == SeedChirality::RightSeeded) {
        left = basis.proj_left + basis.proj_right * ratio_lr;
        right = basis.proj_right + basis.proj_left * ratio_rl;
    } else {
        left = basis.proj_right + basis.proj_left * ratio_lr;
        right = basis.proj_left + basis.proj_right * ratio_rl;
    }

    // Validate against the Dirac operator of mass m_b on a fixed sample of
    // momenta; fresh-momentum validation lives in the test suite.
    const double c = masses.units().c;
    SplitMix64 rng(0xd15ca11eULL);
    double residual = 0.0;
    for (int k = 0; k < 10; ++k) {
        FourMomentum mom{3.0 * rng.next(),
                         {3.0 * rng.next(), 3.0 * rng.next(), 3.0 * rng.next()}};
        const ComplexMatrix d = generalized_operator(mom, masses, basis).matrix;
        const ComplexMatrix dirac =
            kinetic_operator(mom, basis, masses.units()) -
            ComplexMatrix::identity(4) * (masses.physical_mass() * c);
        residual = std::max(residual, (left * d * right - dirac).max_abs());
    }
    return EquivalencePair{std::move(left), std::move(right), residual};
}

}  // namespace gweyl
