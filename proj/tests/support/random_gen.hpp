#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gweyl/momentum.hpp"
#include "gweyl/spinor.hpp"

namespace gweyl_test {

// Deterministic uniform doubles straight from the engine bits, so results do
// not depend on libstdc++ distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1p-53;
        return lo + (hi - lo) * u;
    }

    gweyl::Vec3 vec3(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    gweyl::Vec3 unit_vec3() {
        const double cos_theta = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * 3.14159265358979323846);
        const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
        return {sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
    }

    gweyl::Complex complex_unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

    gweyl::Vec2 vec2c() { return {complex_unit_box(), complex_unit_box()}; }

    gweyl::Vec4 vec4c() {
        return {complex_unit_box(), complex_unit_box(), complex_unit_box(), complex_unit_box()};
    }

private:
    std::mt19937_64 engine_;
};

/// Random seed spinor sitting exactly on the m_b mass shell (positive or
/// negative energy branch).
inline gweyl::TwoSpinor on_shell_seed(Rng& rng, double physical_mass, double c = 1.0,
                                      bool negative_energy = false) {
    gweyl::Vec3 p = rng.vec3(-3.0, 3.0);
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    double energy = std::sqrt(c * c * p2 + physical_mass * physical_mass * c * c * c * c);
    if (negative_energy) energy = -energy;
    return gweyl::TwoSpinor{rng.vec2c(), gweyl::FourMomentum{energy, p}};
}

}  // namespace gweyl_test
