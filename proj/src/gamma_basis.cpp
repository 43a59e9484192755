#include "gweyl/gamma_basis.hpp"

#include <cassert>
#include <cmath>

namespace gweyl {

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix pauli(int k) {
    switch (k) {
        case 0:
            return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
        case 1:
            return ComplexMatrix::from_rows({{0, -kI}, {kI, 0}});
        default:
            return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
    }
}

}  // namespace

const char* representation_name(Representation rep) {
    return rep == Representation::Standard ? "standard" : "spinorial";
}

const std::array<ComplexMatrix, 3>& pauli_matrices() {
    static const std::array<ComplexMatrix, 3> sigmas = {pauli(0), pauli(1), pauli(2)};
    return sigmas;
}

GammaBasis::GammaBasis(Representation rep, std::array<ComplexMatrix, 4> g, ComplexMatrix g5)
    : representation(rep),
      gamma(std::move(g)),
      gamma5(std::move(g5)),
      alpha{gamma[0] * gamma[1], gamma[0] * gamma[2], gamma[0] * gamma[3]},
      proj_right((ComplexMatrix::identity(4) + gamma5) * 0.5),
      proj_left((ComplexMatrix::identity(4) - gamma5) * 0.5),
      sigma(pauli_matrices()) {}

GammaBasis build_basis(Representation rep) {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix z2 = ComplexMatrix::zero(2);
    const auto& s = pauli_matrices();

    // The spatial gammas are shared: gamma^i = offdiag(sigma^i, -sigma^i).
    std::array<ComplexMatrix, 4> g = {
        ComplexMatrix::zero(4),
        ComplexMatrix::from_blocks(z2, s[0], -s[0], z2),
        ComplexMatrix::from_blocks(z2, s[1], -s[1], z2),
        ComplexMatrix::from_blocks(z2, s[2], -s[2], z2),
    };

    if (rep == Representation::Standard) {
        g[0] = ComplexMatrix::from_blocks(i2, z2, z2, -i2);
        ComplexMatrix g5 = ComplexMatrix::from_blocks(z2, i2, i2, z2);
        return GammaBasis(rep, std::move(g), std::move(g5));
    }
    g[0] = ComplexMatrix::from_blocks(z2, i2, i2, z2);
    ComplexMatrix g5 = ComplexMatrix::from_blocks(-i2, z2, z2, i2);
    return GammaBasis(rep, std::move(g), std::move(g5));
}

namespace {

ComplexMatrix make_intertwiner(Representation from, Representation to) {
    if (from == to) return ComplexMatrix::identity(4);
    const double r = 1.0 / std::sqrt(2.0);
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    // Spinorial -> Standard: U = (I, I; -I, I)/sqrt(2). The reverse direction
    // is its adjoint.
    ComplexMatrix u = ComplexMatrix::from_blocks(i2, i2, -i2, i2) * r;
    if (from == Representation::Spinorial) return u;
    return u.adjoint();
}

void validate_intertwiner(const ComplexMatrix& u, Representation from, Representation to) {
    const GammaBasis a = build_basis(from);
    const GammaBasis b = build_basis(to);
    const ComplexMatrix ui = u.adjoint();  // unitary
    for (int mu = 0; mu < 4; ++mu) {
        assert((u * a.gamma[mu] * ui).approx_equal(b.gamma[mu], 1e-14));
    }
    assert((u * a.gamma5 * ui).approx_equal(b.gamma5, 1e-14));
    (void)a;
    (void)b;
    (void)ui;
}

}  // namespace

const ComplexMatrix& representation_intertwiner(Representation from, Representation to) {
    static const ComplexMatrix id = ComplexMatrix::identity(4);
    static const ComplexMatrix std_to_sp = [] {
        ComplexMatrix u = make_intertwiner(Representation::Standard, Representation::Spinorial);
        validate_intertwiner(u, Representation::Standard, Representation::Spinorial);
        return u;
    }();
    static const ComplexMatrix sp_to_std = [] {
        ComplexMatrix u = make_intertwiner(Representation::Spinorial, Representation::Standard);
        validate_intertwiner(u, Representation::Spinorial, Representation::Standard);
        return u;
    }();
    if (from == to) return id;
    return from == Representation::Standard ? std_to_sp : sp_to_std;
}

ComplexMatrix change_representation(const ComplexMatrix& m, const GammaBasis& from,
                                    const GammaBasis& to) {
    const ComplexMatrix& u = representation_intertwiner(from.representation, to.representation);
    return u * m * u.adjoint();
}

Vec4 change_representation(const Vec4& v, Representation from, Representation to) {
    return representation_intertwiner(from, to).apply(v);
}

}  // namespace gweyl
