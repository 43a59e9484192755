#include "gweyl/momentum.hpp"

#include <cmath>
#include <string>

namespace gweyl {

double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double FourMomentum::shell_violation(double mass, double c) const {
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    return energy * energy - c * c * p2 - mass * mass * c * c * c * c;
}

bool FourMomentum::is_on_shell(double mass, double tol, double c) const {
    return std::abs(shell_violation(mass, c)) < tol;
}

bool FourMomentum::is_massless_on_shell(double tol, double c) const {
    return is_on_shell(0.0, tol, c);
}

MassParameters::MassParameters(double seed_mass, double physical_mass, SeedChirality chirality,
                               Units units)
    : seed_mass_(seed_mass),
      physical_mass_(physical_mass),
      chirality_(chirality),
      units_(units) {
    if (!(seed_mass_ > 0.0)) {
        throw NonPositiveSeedMass("seed mass must be > 0, got " + std::to_string(seed_mass_));
    }
    if (physical_mass_ < 0.0) {
        throw InvalidParameter("physical mass must be >= 0, got " +
                               std::to_string(physical_mass_));
    }
    if (!(units_.hbar > 0.0) || !(units_.c > 0.0)) {
        throw InvalidParameter("hbar and c must be > 0");
    }
}

MassParameters::MassParameters(unchecked_t, double seed_mass, double physical_mass,
                               SeedChirality chirality, Units units)
    : seed_mass_(seed_mass),
      physical_mass_(physical_mass),
      chirality_(chirality),
      units_(units) {}

MassParameters MassParameters::dirac(double mass, Units units) {
    return MassParameters(mass, mass, SeedChirality::RightSeeded, units);
}

MassParameters MassParameters::flip_seed_sign() const {
    return MassParameters(unchecked_t{}, -seed_mass_, physical_mass_, chirality_, units_);
}

}  // namespace gweyl
