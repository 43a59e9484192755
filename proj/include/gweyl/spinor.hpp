#pragma once

#include "gweyl/complex_matrix.hpp"
#include "gweyl/gamma_basis.hpp"
#include "gweyl/momentum.hpp"

namespace gweyl {

/// Two-component seed spinor attached to a plane-wave momentum.
struct TwoSpinor {
    Vec2 components{};
    FourMomentum momentum;

    double norm() const { return vec_norm(components); }
};

/// Four-component plane-wave spinor.
struct SpinorState {
    Vec4 components{};
    FourMomentum momentum;

    double norm() const { return vec_norm(components); }

    SpinorState normalized() const {
        const double n = norm();
        if (n == 0.0) return *this;
        return SpinorState{vec_scale(1.0 / n, components), momentum};
    }

    /// Chirality projections P_R psi and P_L psi in the given basis.
    Vec4 right_chiral(const GammaBasis& basis) const { return basis.proj_right.apply(components); }
    Vec4 left_chiral(const GammaBasis& basis) const { return basis.proj_left.apply(components); }
};

}  // namespace gweyl
