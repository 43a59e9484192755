#include "gweyl/derivation.hpp"

#include <cmath>
#include <string>

namespace gweyl {

namespace {

ComplexMatrix sigma_dot_p(const Vec3& p) {
    const auto& s = pauli_matrices();
    return s[0] * p[0] + s[1] * p[1] + s[2] * p[2];
}

void require_on_shell(const TwoSpinor& psi, const MassParameters& masses, double shell_tol) {
    const double violation =
        psi.momentum.shell_violation(masses.physical_mass(), masses.units().c);
    const double scale = std::max(1.0, psi.momentum.energy * psi.momentum.energy);
    if (std::abs(violation) >= shell_tol * scale) {
        throw OffShell("seed momentum violates the mass shell by " + std::to_string(violation),
                       violation);
    }
}

Vec2 scale2(Complex s, const Vec2& v) { return {s * v[0], s * v[1]}; }

Vec2 add2(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }

Vec2 sub2(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

SpinorState assemble(const Vec2& phi_r, const Vec2& phi_l, const FourMomentum& mom) {
    // column(phi_R + phi_L, phi_R - phi_L), the standard-representation spinor
    Vec2 upper = add2(phi_r, phi_l);
    Vec2 lower = sub2(phi_r, phi_l);
    return SpinorState{{upper[0], upper[1], lower[0], lower[1]}, mom};
}

struct ChiralPair {
    Vec2 phi_r;
    Vec2 phi_l;
};

ChiralPair build_pair(const TwoSpinor& psi, const MassParameters& masses) {
    const double c = masses.units().c;
    const ComplexMatrix sp = sigma_dot_p(psi.momentum.p);
    const double e_over_c = psi.momentum.energy / c;
    const Complex inv_mc = 1.0 / (masses.seed_mass() * c);
    if (masses.chirality() == SeedChirality::RightSeeded) {
        Vec2 phi_r = scale2(inv_mc, add2(scale2(e_over_c, psi.components),
                                         sp.apply(psi.components)));
        return {phi_r, psi.components};
    }
    Vec2 phi_l = scale2(inv_mc, sub2(scale2(e_over_c, psi.components),
                                     sp.apply(psi.components)));
    return {psi.components, phi_l};
}

}  // namespace

double verify_factorization(double energy, const Vec3& pvec, Units units) {
    FourMomentum mom{energy, pvec};
    auto [minus, plus] = two_component_factors(mom, units);
    const double p = mom.p_norm();
    ComplexMatrix expected =
        ComplexMatrix::identity(2) * (energy * energy - units.c * units.c * p * p);
    return (minus * plus - expected).max_abs();
}

SpinorState build_four_spinor_right(const TwoSpinor& psi, const MassParameters& masses,
                                    double shell_tol) {
    if (masses.chirality() != SeedChirality::RightSeeded) {
        throw InvalidParameter("build_four_spinor_right expects right-seeded masses");
    }
    require_on_shell(psi, masses, shell_tol);
    auto [phi_r, phi_l] = build_pair(psi, masses);
    return assemble(phi_r, phi_l, psi.momentum);
}

SpinorState build_four_spinor_left(const TwoSpinor& psi, const MassParameters& masses,
                                   double shell_tol) {
    if (masses.chirality() != SeedChirality::LeftSeeded) {
        throw InvalidParameter("build_four_spinor_left expects left-seeded masses");
    }
    require_on_shell(psi, masses, shell_tol);
    auto [phi_r, phi_l] = build_pair(psi, masses);
    return assemble(phi_r, phi_l, psi.momentum);
}

double roundtrip_check(const TwoSpinor& psi, const MassParameters& masses, double shell_tol) {
    require_on_shell(psi, masses, shell_tol);
    auto [phi_r, phi_l] = build_pair(psi, masses);

    const double c = masses.units().c;
    const ComplexMatrix sp = sigma_dot_p(psi.momentum.p);
    const double e_over_c = psi.momentum.energy / c;
    const double a = masses.physical_mass() * masses.physical_mass() * c / masses.seed_mass();
    const double b = masses.seed_mass() * c;

    Vec2 r1, r2;
    if (masses.chirality() == SeedChirality::RightSeeded) {
        r1 = sub2(sub2(scale2(e_over_c, phi_r), sp.apply(phi_r)), scale2(a, phi_l));
        r2 = sub2(add2(scale2(e_over_c, phi_l), sp.apply(phi_l)), scale2(b, phi_r));
    } else {
        r1 = sub2(add2(scale2(e_over_c, phi_l), sp.apply(phi_l)), scale2(a, phi_r));
        r2 = sub2(sub2(scale2(e_over_c, phi_r), sp.apply(phi_r)), scale2(b, phi_l));
    }
    return std::max(vec_norm(r1), vec_norm(r2));
}

}  // namespace gweyl
