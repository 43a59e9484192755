#pragma once

#include <cmath>

#include "gweyl/complex_matrix.hpp"

namespace gweyl_test {

/// Independent matrix exponential by scaling and squaring with a Taylor
/// kernel. Deliberately unrelated to the eigen-decomposition path it is used
/// to cross-check.
inline gweyl::ComplexMatrix expm(const gweyl::ComplexMatrix& a) {
    using gweyl::ComplexMatrix;

    int squarings = 0;
    double scale = a.max_abs() * static_cast<double>(a.dim());
    while (scale > 0.5 && squarings < 60) {
        scale /= 2.0;
        ++squarings;
    }
    const double factor = std::ldexp(1.0, -squarings);
    const ComplexMatrix b = a * factor;

    ComplexMatrix sum = ComplexMatrix::identity(a.dim());
    ComplexMatrix term = ComplexMatrix::identity(a.dim());
    for (int k = 1; k <= 40; ++k) {
        term = term * b * (1.0 / static_cast<double>(k));
        sum = sum + term;
        if (term.max_abs() < 1e-20 * (1.0 + sum.max_abs())) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

}  // namespace gweyl_test
