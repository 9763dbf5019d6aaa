#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qgeo/entanglement.hpp"
#include "test_util.hpp"

using namespace qgeo;
using qgeo_test::max_abs_diff;
using qgeo_test::random_interior_bloch;

namespace {

// projector onto the -/+1 sigma_axis eigenstate
ComplexMatrix eigprojector(PauliAxis axis, int column) {
    const ComplexMatrix b = axis_basis(axis);
    ComplexMatrix p(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            p(i, j) = b(i, static_cast<std::size_t>(column)) *
                      std::conj(b(j, static_cast<std::size_t>(column)));
    return p;
}

}  // namespace

TEST_CASE("cnot_in_basis(z) is the plain controlled flip") {
    const EntanglingUnitary u = cnot_in_basis(PauliAxis::z);
    CHECK(u.axis() == PauliAxis::z);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool one = (i == j && i < 2) || (i == 2 && j == 3) || (i == 3 && j == 2);
            CHECK(u.mat()(i, j) == (one ? cplx(1.0) : cplx(0.0)));
        }
}

TEST_CASE("axis_basis diagonalizes its Pauli matrix") {
    for (PauliAxis axis : {PauliAxis::x, PauliAxis::y, PauliAxis::z}) {
        const ComplexMatrix b = axis_basis(axis);
        CHECK(max_abs_diff(b * adjoint(b), ComplexMatrix::identity(2)) < 1e-15);
        CHECK(max_abs_diff(b * pauli_z() * adjoint(b), pauli(axis)) < 1e-15);
    }
}

TEST_CASE("plus_eigenstate projects onto the +1 eigenvector") {
    const DensityMatrix pz = plus_eigenstate(PauliAxis::z);
    CHECK(pz.mat()(0, 0) == cplx(1.0));
    CHECK(pz.mat()(1, 1) == cplx(0.0));

    const DensityMatrix px = plus_eigenstate(PauliAxis::x);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(px.mat()(i, j) - cplx(0.5)) < 1e-15);

    for (PauliAxis axis : {PauliAxis::x, PauliAxis::y, PauliAxis::z}) {
        const ComplexMatrix p = plus_eigenstate(axis).mat();
        CHECK(max_abs_diff(pauli(axis) * p, p) < 1e-15);
    }
}

TEST_CASE("x-basis unitary fixes |+,+> and flips the ancilla on |-,+>") {
    const EntanglingUnitary ux = cnot_in_basis(PauliAxis::x);
    const ComplexMatrix plus = eigprojector(PauliAxis::x, 0);
    const ComplexMatrix minus = eigprojector(PauliAxis::x, 1);

    const ComplexMatrix in_fix = tensor(plus, plus);
    CHECK(max_abs_diff(ux.mat() * in_fix * adjoint(ux.mat()), in_fix) < 1e-14);

    const ComplexMatrix in_flip = tensor(minus, plus);
    const ComplexMatrix want = tensor(minus, minus);
    CHECK(max_abs_diff(ux.mat() * in_flip * adjoint(ux.mat()), want) < 1e-14);
}

TEST_CASE("EntanglingUnitary validates") {
    CHECK_THROWS_AS(EntanglingUnitary(ComplexMatrix(4), PauliAxis::z), std::invalid_argument);
    CHECK_THROWS_AS(EntanglingUnitary(ComplexMatrix::identity(2), PauliAxis::z),
                    std::invalid_argument);
    CHECK_NOTHROW(EntanglingUnitary(ComplexMatrix::identity(4), PauliAxis::z));
}

TEST_CASE("generate_joint_state reproduces the explicit four-entry form") {
    Rng rng(41);
    const EntanglingUnitary u = cnot_in_basis(PauliAxis::z);
    const DensityMatrix anc = plus_eigenstate(PauliAxis::z);
    for (int k = 0; k < 200; ++k) {
        const BlochVector n = random_interior_bloch(rng);
        const DensityMatrix joint = generate_joint_state(bloch_to_density(n), anc, u);
        ComplexMatrix want(4);
        want(0, 0) = 0.5 * (1.0 + n.nz);
        want(0, 3) = 0.5 * cplx(n.nx, -n.ny);
        want(3, 0) = 0.5 * cplx(n.nx, n.ny);
        want(3, 3) = 0.5 * (1.0 - n.nz);
        CHECK(max_abs_diff(joint.mat(), want) < 1e-14);
    }
}

TEST_CASE("negativity of the Bell projector is one half") {
    ComplexMatrix bell(4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    CHECK(std::abs(negativity(validate_state(bell)) - 0.5) < 1e-14);
}

TEST_CASE("negativity vanishes on product states") {
    const DensityMatrix a = bloch_to_density({0.3, -0.2, 0.5});
    const DensityMatrix b = bloch_to_density({-0.1, 0.6, 0.2});
    const DensityMatrix prod = validate_state(tensor(a.mat(), b.mat()));
    CHECK(negativity(prod) < 1e-14);
}

TEST_CASE("pipeline negativity equals the closed form") {
    Rng rng(42);
    const EntanglingUnitary u = cnot_in_basis(PauliAxis::z);
    const DensityMatrix anc = plus_eigenstate(PauliAxis::z);
    for (int k = 0; k < 300; ++k) {
        const BlochVector n = random_interior_bloch(rng);
        const double from_matrix = negativity(generate_joint_state(bloch_to_density(n), anc, u));
        CHECK(std::abs(from_matrix - negativity_closed_form(n)) < 1e-12);
    }
    CHECK(std::abs(negativity_closed_form({0.6, 0.8, 0.0}) - 0.5) < 1e-15);
    CHECK(negativity_closed_form({0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("z-aligned states generate no entanglement") {
    const EntanglingUnitary u = cnot_in_basis(PauliAxis::z);
    const DensityMatrix anc = plus_eigenstate(PauliAxis::z);
    for (double nz : {-0.9, -0.3, 0.0, 0.4, 0.95}) {
        const double neg =
            negativity(generate_joint_state(bloch_to_density({0.0, 0.0, nz}), anc, u));
        CHECK(neg < 1e-14);
    }
}

TEST_CASE("x pipeline: ancilla choice decides everything") {
    Rng rng(43);
    const EntanglingUnitary ux = cnot_in_basis(PauliAxis::x);
    const DensityMatrix plus = plus_eigenstate(PauliAxis::x);
    const DensityMatrix zero = plus_eigenstate(PauliAxis::z);
    for (int k = 0; k < 100; ++k) {
        const BlochVector n = random_interior_bloch(rng);
        // |+><+| ancilla: transverse component to x, mirroring the z case
        const double with_plus =
            negativity(generate_joint_state(bloch_to_density(n), plus, ux));
        const double want = 0.5 * std::sqrt(n.ny * n.ny + n.nz * n.nz);
        CHECK(std::abs(with_plus - want) < 1e-12);
        // |0><0| ancilla: the x-basis flip never entangles it
        const double with_zero =
            negativity(generate_joint_state(bloch_to_density(n), zero, ux));
        CHECK(with_zero < 1e-14);
    }
}

TEST_CASE("negativity rejects wrong dimensions") {
    CHECK_THROWS_AS(negativity(bloch_to_density({0.0, 0.0, 0.0})), std::invalid_argument);
    CHECK_THROWS_AS(
        generate_joint_state(validate_state(cplx(0.25) * ComplexMatrix::identity(4)),
                             plus_eigenstate(PauliAxis::z), cnot_in_basis(PauliAxis::z)),
        std::invalid_argument);
}
