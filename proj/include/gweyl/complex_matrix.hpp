#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "gweyl/errors.hpp"

namespace gweyl {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;
using Vec4 = std::array<Complex, 4>;

/// Default absolute tolerance for matrix comparisons. All basis entries are
/// O(1), so an absolute threshold is appropriate.
inline constexpr double kDefaultTolerance = 1e-12;

/// Dense square complex matrix restricted to the two shapes the equations
/// need: 2x2 (Pauli block) and 4x4 (Dirac block). Row-major storage.
/// Immutable use is the norm; nothing here mutates shared state.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

    /// Build from row lists: ComplexMatrix::from_rows({{a,b},{c,d}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    /// Assemble a 4x4 from four 2x2 blocks [[a, b], [c, d]].
    static ComplexMatrix from_blocks(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const ComplexMatrix& c, const ComplexMatrix& d);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-() const;
    ComplexMatrix operator*(Complex s) const;
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;

    /// Largest entry magnitude (the max norm used by every residual check).
    double max_abs() const;

    /// Entrywise comparison with an explicit absolute tolerance.
    bool approx_equal(const ComplexMatrix& rhs, double tol = kDefaultTolerance) const;

    Vec4 apply(const Vec4& v) const;
    Vec2 apply(const Vec2& v) const;

private:
    std::size_t dim_;
    std::array<Complex, 16> data_{};  // 2x2 uses the first 4 entries

    void require_same_shape(const ComplexMatrix& rhs) const;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Small vector helpers shared by the spinor code.
double vec_norm(const Vec2& v);
double vec_norm(const Vec4& v);
Complex inner(const Vec4& a, const Vec4& b);  // conjugate-linear in the first slot
Vec4 vec_add(const Vec4& a, const Vec4& b);
Vec4 vec_sub(const Vec4& a, const Vec4& b);
Vec4 vec_scale(Complex s, const Vec4& v);
double vec_dist(const Vec4& a, const Vec4& b);

}  // namespace gweyl
