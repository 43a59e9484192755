#pragma once

#include <array>

#include "gweyl/errors.hpp"

namespace gweyl {

/// Unit constants. Defaults are natural units hbar = c = 1, which keeps the
/// worked examples exact; SI-like values remain possible.
struct Units {
    double hbar = 1.0;
    double c = 1.0;
};

using Vec3 = std::array<double, 3>;

double norm3(const Vec3& v);

/// Plane-wave four-momentum (E, p). Sign convention throughout:
/// Psi ~ exp(-i(E t - p.x)/hbar), so i hbar d/dt -> E and -i hbar grad -> p.
struct FourMomentum {
    double energy = 0.0;
    Vec3 p{0.0, 0.0, 0.0};

    double p_norm() const { return norm3(p); }

    /// |E^2 - c^2 p^2 - m^2 c^4| < tol
    bool is_on_shell(double mass, double tol, double c = 1.0) const;
    bool is_massless_on_shell(double tol, double c = 1.0) const;

    /// Signed shell residual E^2 - c^2 p^2 - m^2 c^4.
    double shell_violation(double mass, double c = 1.0) const;
};

enum class SeedChirality { RightSeeded, LeftSeeded };

/// The mass pair of the generalized equations. seed_mass divides in the
/// construction (the right-seeded family calls it m1, the left-seeded m3) and
/// must be strictly positive; physical_mass (m2 / m4) enters the dispersion
/// relation and may vanish.
class MassParameters {
public:
    MassParameters(double seed_mass, double physical_mass, SeedChirality chirality,
                   Units units = {});

    static MassParameters dirac(double mass, Units units = {});

    double seed_mass() const { return seed_mass_; }
    double physical_mass() const { return physical_mass_; }
    SeedChirality chirality() const { return chirality_; }
    const Units& units() const { return units_; }

    /// Copy with the seed mass negated, bypassing validation. Only intended
    /// for the gamma5 / PT checks; everything else goes through the
    /// validating constructor.
    MassParameters flip_seed_sign() const;

private:
    struct unchecked_t {};
    MassParameters(unchecked_t, double seed_mass, double physical_mass, SeedChirality chirality,
                   Units units);

    double seed_mass_;
    double physical_mass_;
    SeedChirality chirality_;
    Units units_;
};

}  // namespace gweyl
