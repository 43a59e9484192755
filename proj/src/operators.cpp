#include "gweyl/operators.hpp"

namespace gweyl {

std::pair<ComplexMatrix, ComplexMatrix> two_component_factors(const FourMomentum& mom,
                                                              Units units) {
    const auto& s = pauli_matrices();
    ComplexMatrix sp = s[0] * mom.p[0] + s[1] * mom.p[1] + s[2] * mom.p[2];
    ComplexMatrix e = ComplexMatrix::identity(2) * mom.energy;
    return {e - sp * units.c, e + sp * units.c};
}

ComplexMatrix kinetic_operator(const FourMomentum& mom, const GammaBasis& basis, Units units) {
    ComplexMatrix d = basis.gamma[0] * (mom.energy / units.c);
    for (int i = 0; i < 3; ++i) d = d - basis.gamma[i + 1] * mom.p[i];
    return d;
}

ComplexMatrix mass_term(const MassParameters& masses, const GammaBasis& basis) {
    const double c = masses.units().c;
    const double a = masses.physical_mass() * masses.physical_mass() * c / masses.seed_mass();
    const double b = masses.seed_mass() * c;
    if (masses.chirality() == SeedChirality::RightSeeded) {
        return basis.proj_left * a + basis.proj_right * b;
    }
    return basis.proj_right * a + basis.proj_left * b;
}

WaveOperator generalized_operator(const FourMomentum& mom, const MassParameters& masses,
                                  const GammaBasis& basis) {
    ComplexMatrix d = kinetic_operator(mom, basis, masses.units()) - mass_term(masses, basis);
    return WaveOperator{std::move(d), mom, masses, basis.representation};
}

WaveOperator massless_operator(const FourMomentum& mom, double m_seed, SeedChirality chirality,
                               const GammaBasis& basis, Units units) {
    return generalized_operator(mom, MassParameters(m_seed, 0.0, chirality, units), basis);
}

ComplexMatrix hamiltonian(const FourMomentum& mom, const MassParameters& masses,
                          const GammaBasis& basis) {
    const double c = masses.units().c;
    ComplexMatrix h = (basis.alpha[0] * mom.p[0] + basis.alpha[1] * mom.p[1] +
                       basis.alpha[2] * mom.p[2]) *
                      c;
    return h + basis.gamma[0] * mass_term(masses, basis) * c;
}

ComplexMatrix weyl_hamiltonian(const FourMomentum& mom, const GammaBasis& basis, Units units) {
    return (basis.alpha[0] * mom.p[0] + basis.alpha[1] * mom.p[1] +
            basis.alpha[2] * mom.p[2]) *
           units.c;
}

bool chiral_invariance_check(const std::optional<MassParameters>& masses,
                             const std::vector<FourMomentum>& sample_momenta,
                             const GammaBasis& basis, double tol) {
    if (sample_momenta.empty()) {
        throw InvalidParameter("chiral_invariance_check needs at least one sample momentum");
    }
    for (const auto& mom : sample_momenta) {
        ComplexMatrix d = masses ? generalized_operator(mom, *masses, basis).matrix
                                 : kinetic_operator(mom, basis);
        if ((basis.gamma5 * d * basis.gamma5 + d).max_abs() >= tol) return false;
    }
    return true;
}

}  // namespace gweyl
