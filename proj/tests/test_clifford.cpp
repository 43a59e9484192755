#include <doctest.h>

#include "gweyl/gamma_basis.hpp"
#include "support/random_gen.hpp"

using namespace gweyl;

namespace {

const double kMetric[4] = {1.0, -1.0, -1.0, -1.0};

void check_clifford_relations(const GammaBasis& b) {
    const ComplexMatrix id = ComplexMatrix::identity(4);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu; nu < 4; ++nu) {
            const double g = (mu == nu) ? kMetric[mu] : 0.0;
            const ComplexMatrix lhs = anticommutator(b.gamma[mu], b.gamma[nu]);
            CHECK((lhs - id * (2.0 * g)).max_abs() < 1e-14);
        }
    }
    CHECK((b.gamma5 * b.gamma5 - id).max_abs() < 1e-14);
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(anticommutator(b.gamma5, b.gamma[mu]).max_abs() < 1e-14);
    }
    CHECK((b.proj_right * b.proj_right - b.proj_right).max_abs() < 1e-14);
    CHECK((b.proj_left * b.proj_left - b.proj_left).max_abs() < 1e-14);
    CHECK((b.proj_right * b.proj_left).max_abs() < 1e-14);
    CHECK((b.proj_right + b.proj_left - id).max_abs() < 1e-14);

    // gamma5 = i g0 g1 g2 g3 must reproduce the stored matrix.
    const ComplexMatrix product =
        b.gamma[0] * b.gamma[1] * b.gamma[2] * b.gamma[3] * Complex{0.0, 1.0};
    CHECK((product - b.gamma5).max_abs() < 1e-14);
}

}  // namespace

TEST_CASE("clifford relations hold in both representations") {
    check_clifford_relations(build_basis(Representation::Standard));
    check_clifford_relations(build_basis(Representation::Spinorial));
}

TEST_CASE("standard representation block layout") {
    const GammaBasis b = build_basis(Representation::Standard);
    ComplexMatrix g0 = ComplexMatrix::zero(4);
    g0(0, 0) = 1.0;
    g0(1, 1) = 1.0;
    g0(2, 2) = -1.0;
    g0(3, 3) = -1.0;
    CHECK(b.gamma[0].approx_equal(g0, 1e-15));
    CHECK((b.gamma[0] * b.gamma[0]).approx_equal(ComplexMatrix::identity(4), 1e-15));
    CHECK(anticommutator(b.gamma[1], b.gamma[2]).max_abs() == 0.0);
}

TEST_CASE("spinorial representation selects chirality blocks") {
    const GammaBasis b = build_basis(Representation::Spinorial);
    // gamma5 = diag(-I, I): P_L keeps the upper two components, P_R the lower.
    Vec4 v{1.0, 2.0, 3.0, 4.0};
    const Vec4 left = b.proj_left.apply(v);
    const Vec4 right = b.proj_right.apply(v);
    CHECK(left[0] == Complex{1.0});
    CHECK(left[1] == Complex{2.0});
    CHECK(std::abs(left[2]) == 0.0);
    CHECK(std::abs(right[0]) == 0.0);
    CHECK(right[2] == Complex{3.0});
    CHECK(right[3] == Complex{4.0});
    CHECK((b.proj_right * b.proj_left).max_abs() == 0.0);
}

TEST_CASE("pauli algebra") {
    const auto& s = pauli_matrices();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const Complex i{0.0, 1.0};
    // sigma_a sigma_b = delta_ab I + i eps_abc sigma_c
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            ComplexMatrix expected = (a == b) ? id : ComplexMatrix::zero(2);
            if (a != b) {
                const int c = 3 - a - b;
                const double eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
                expected = s[c] * (i * eps);
            }
            CHECK((s[a] * s[b] - expected).max_abs() < 1e-15);
        }
    }
    CHECK((commutator(s[0], s[1]) - s[2] * (2.0 * i)).max_abs() < 1e-15);
    CHECK(anticommutator(s[0], s[1]).max_abs() == 0.0);
}

TEST_CASE("anticommutator and commutator examples") {
    const GammaBasis b = build_basis(Representation::Standard);
    const ComplexMatrix id = ComplexMatrix::identity(4);
    CHECK(anticommutator(b.gamma[0], b.gamma[0]).approx_equal(id * 2.0, 1e-15));
    CHECK(anticommutator(b.gamma5, b.gamma[1]).max_abs() == 0.0);
    CHECK(commutator(id, b.gamma[2]).max_abs() == 0.0);
    // [g0, g5] = 2 g0 g5 because they anticommute.
    CHECK(commutator(b.gamma[0], b.gamma5).approx_equal(b.gamma[0] * b.gamma5 * 2.0, 1e-15));
}

TEST_CASE("shape mismatch is rejected") {
    const ComplexMatrix m2 = ComplexMatrix::identity(2);
    const ComplexMatrix m4 = ComplexMatrix::identity(4);
    CHECK_THROWS_AS((void)anticommutator(m2, m4), ShapeMismatch);
    CHECK_THROWS_AS((void)commutator(m4, m2), ShapeMismatch);
    CHECK_THROWS_AS(ComplexMatrix(3), ShapeMismatch);
    CHECK_THROWS_AS(ComplexMatrix(1), ShapeMismatch);
}

TEST_CASE("matrix equality uses an explicit tolerance") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix b = a;
    b(0, 0) += 1e-13;
    CHECK(a.approx_equal(b));  // default 1e-12
    CHECK_FALSE(a.approx_equal(b, 1e-14));
    CHECK(a.approx_equal(b, 1e-10));
}

TEST_CASE("representation change maps the bases onto each other") {
    const GammaBasis std_basis = build_basis(Representation::Standard);
    const GammaBasis sp_basis = build_basis(Representation::Spinorial);

    for (int mu = 0; mu < 4; ++mu) {
        const ComplexMatrix mapped =
            change_representation(std_basis.gamma[mu], std_basis, sp_basis);
        CHECK(mapped.approx_equal(sp_basis.gamma[mu], 1e-14));
    }
    CHECK(change_representation(std_basis.gamma5, std_basis, sp_basis)
              .approx_equal(sp_basis.gamma5, 1e-14));

    const ComplexMatrix id = ComplexMatrix::identity(4);
    CHECK(change_representation(id, std_basis, sp_basis).approx_equal(id, 1e-14));
}

TEST_CASE("representation round trip is the identity") {
    const GammaBasis std_basis = build_basis(Representation::Standard);
    const GammaBasis sp_basis = build_basis(Representation::Spinorial);
    gweyl_test::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.complex_unit_box();
        const ComplexMatrix there = change_representation(m, std_basis, sp_basis);
        const ComplexMatrix back = change_representation(there, sp_basis, std_basis);
        CHECK((back - m).max_abs() < 1e-14);
    }
}

TEST_CASE("intertwiner is unitary") {
    const ComplexMatrix& u =
        representation_intertwiner(Representation::Standard, Representation::Spinorial);
    CHECK((u * u.adjoint() - ComplexMatrix::identity(4)).max_abs() < 1e-15);
}
