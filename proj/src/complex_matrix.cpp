#include "gweyl/complex_matrix.hpp"

#include <cmath>
#include <string>

namespace gweyl {

namespace {

void require_valid_dim(std::size_t dim) {
    if (dim != 2 && dim != 4) {
        throw ShapeMismatch("only 2x2 and 4x4 matrices are supported, got dim=" +
                            std::to_string(dim));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
    require_valid_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    require_valid_dim(n);
    ComplexMatrix m(n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw ShapeMismatch("row length does not match matrix dimension");
        }
        std::size_t j = 0;
        for (const auto& entry : row) m(i, j++) = entry;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_blocks(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const ComplexMatrix& c, const ComplexMatrix& d) {
    if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2 || d.dim() != 2) {
        throw ShapeMismatch("from_blocks expects four 2x2 blocks");
    }
    ComplexMatrix m(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    }
    return m;
}

void ComplexMatrix::require_same_shape(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw ShapeMismatch("matrix shape mismatch: " + std::to_string(dim_) + "x" +
                            std::to_string(dim_) + " vs " + std::to_string(rhs.dim_) + "x" +
                            std::to_string(rhs.dim_));
    }
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    require_same_shape(rhs);
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) out.data_[k] = data_[k] + rhs.data_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    require_same_shape(rhs);
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    require_same_shape(rhs);
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-() const {
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) out.data_[k] = -data_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) out.data_[k] = s * data_[k];
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) out.data_[k] = std::conj(data_[k]);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (std::size_t k = 0; k < dim_ * dim_; ++k) m = std::max(m, std::abs(data_[k]));
    return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& rhs, double tol) const {
    if (dim_ != rhs.dim_) return false;
    return (*this - rhs).max_abs() < tol;
}

Vec4 ComplexMatrix::apply(const Vec4& v) const {
    if (dim_ != 4) throw ShapeMismatch("apply(Vec4) needs a 4x4 matrix");
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Vec2 ComplexMatrix::apply(const Vec2& v) const {
    if (dim_ != 2) throw ShapeMismatch("apply(Vec2) needs a 2x2 matrix");
    Vec2 out{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b + b * a;
}

double vec_norm(const Vec2& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

double vec_norm(const Vec4& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]));
}

Complex inner(const Vec4& a, const Vec4& b) {
    Complex s{};
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Vec4 vec_add(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 vec_sub(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 vec_scale(Complex s, const Vec4& v) {
    return {s * v[0], s * v[1], s * v[2], s * v[3]};
}

double vec_dist(const Vec4& a, const Vec4& b) {
    return vec_norm(vec_sub(a, b));
}

}  // namespace gweyl
