#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qgeo/states.hpp"
#include "test_util.hpp"

using namespace qgeo;
using qgeo_test::random_interior_bloch;

TEST_CASE("bloch_to_density basics") {
    const DensityMatrix mixed = bloch_to_density({0.0, 0.0, 0.0});
    CHECK(std::abs(mixed.mat()(0, 0) - cplx(0.5)) < 1e-15);
    CHECK(std::abs(mixed.mat()(0, 1)) == 0.0);

    const DensityMatrix rx = bloch_to_density({0.8, 0.0, 0.0});
    CHECK(std::abs(rx.mat()(0, 1) - cplx(0.4)) < 1e-15);
    CHECK(std::abs(rx.mat()(1, 0) - cplx(0.4)) < 1e-15);
    CHECK(std::abs(rx.mat()(0, 0) - cplx(0.5)) < 1e-15);

    const DensityMatrix ry = bloch_to_density({0.0, 0.6, 0.0});
    CHECK(std::abs(ry.mat()(0, 1) - cplx(0.0, -0.3)) < 1e-15);

    CHECK_THROWS_WITH_AS(bloch_to_density({1.5, 0.0, 0.0}),
                         doctest::Contains("Bloch vector outside ball"), std::domain_error);
}

TEST_CASE("density_to_bloch inverts bloch_to_density") {
    Rng rng(21);
    for (int k = 0; k < 200; ++k) {
        const BlochVector n = random_interior_bloch(rng);
        const BlochVector back = density_to_bloch(bloch_to_density(n));
        CHECK(std::abs(back.nx - n.nx) < 1e-14);
        CHECK(std::abs(back.ny - n.ny) < 1e-14);
        CHECK(std::abs(back.nz - n.nz) < 1e-14);
    }
}

TEST_CASE("qubit_spectrum from the Bloch radius") {
    const auto s = qubit_spectrum({0.6, 0.0, 0.0});
    CHECK(std::abs(s[0] - 0.8) < 1e-15);
    CHECK(std::abs(s[1] - 0.2) < 1e-15);

    // matches eigh of the assembled state
    Rng rng(22);
    for (int k = 0; k < 100; ++k) {
        const BlochVector n = random_interior_bloch(rng);
        const auto spec = qubit_spectrum(n);
        const auto ed = eigh(bloch_to_density(n).mat());
        CHECK(std::abs(ed.eigenvalues[0] - spec[1]) < 1e-14);
        CHECK(std::abs(ed.eigenvalues[1] - spec[0]) < 1e-14);
    }
}

TEST_CASE("mixedness is (1 - |n|^2)/2 for qubits") {
    CHECK(mixedness(bloch_to_density({0.0, 0.0, 0.0})) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(mixedness(bloch_to_density({0.0, 0.0, 1.0}))) < 1e-14);
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
        const BlochVector n = random_interior_bloch(rng);
        CHECK(std::abs(mixedness(bloch_to_density(n)) - 0.5 * (1.0 - n.norm2())) < 1e-14);
    }
}

TEST_CASE("validate_state rejects each defect with a telling message") {
    ComplexMatrix notherm(2, {0.5, 0.1, 0.3, 0.5});
    CHECK_THROWS_WITH_AS(validate_state(notherm), doctest::Contains("not Hermitian"),
                         std::invalid_argument);

    ComplexMatrix badtrace(2, {0.7, 0.0, 0.0, 0.7});
    CHECK_THROWS_WITH_AS(validate_state(badtrace), doctest::Contains("trace"),
                         std::invalid_argument);

    ComplexMatrix negeig(2, {1.2, 0.0, 0.0, -0.2});
    CHECK_THROWS_WITH_AS(validate_state(negeig), doctest::Contains("negative eigenvalue"),
                         std::invalid_argument);

    ComplexMatrix good(2, {0.5, cplx(0.0, -0.25), cplx(0.0, 0.25), 0.5});
    CHECK_NOTHROW(validate_state(good));
}

TEST_CASE("validate_state tolerates roundoff-scale defects") {
    ComplexMatrix m(2, {0.5 + 5e-13, 0.0, 0.0, 0.5});
    CHECK_NOTHROW(validate_state(m));
}
