#include "qgeo/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qgeo/pauli.hpp"

namespace qgeo {

double BlochVector::norm() const { return std::sqrt(norm2()); }

void validate_bloch(const BlochVector& n) {
    if (!std::isfinite(n.nx) || !std::isfinite(n.ny) || !std::isfinite(n.nz))
        throw std::domain_error("Bloch vector has a non-finite component");
    if (n.norm2() > 1.0 + 1e-12)
        throw std::domain_error("Bloch vector outside ball: |n| = " + std::to_string(n.norm()));
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : mat_(m) {
    if (mat_.dim() == 0) throw std::invalid_argument("state validation: empty matrix");
    if (!mat_.all_finite()) throw std::invalid_argument("state validation: non-finite entry");
    const double hd = mat_.hermiticity_defect();
    if (hd > 1e-12)
        throw std::invalid_argument("state validation: not Hermitian (defect " +
                                    std::to_string(hd) + ")");
    const double td = std::abs(mat_.trace() - cplx(1.0));
    if (td > 1e-12)
        throw std::invalid_argument("state validation: trace differs from 1 by " +
                                    std::to_string(td));
    const auto ed = eigh(mat_);
    if (ed.eigenvalues.front() < -1e-12)
        throw std::invalid_argument("state validation: negative eigenvalue " +
                                    std::to_string(ed.eigenvalues.front()));
}

DensityMatrix bloch_to_density(const BlochVector& n) {
    validate_bloch(n);
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + n.nz);
    m(0, 1) = 0.5 * cplx(n.nx, -n.ny);
    m(1, 0) = 0.5 * cplx(n.nx, n.ny);
    m(1, 1) = 0.5 * (1.0 - n.nz);
    return DensityMatrix(m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2)
        throw std::invalid_argument("density_to_bloch: need dim 2, got " +
                                    std::to_string(rho.dim()));
    const ComplexMatrix& m = rho.mat();
    BlochVector n;
    n.nx = (m(0, 1) + m(1, 0)).real();
    n.ny = (cplx(0.0, 1.0) * (m(0, 1) - m(1, 0))).real();
    n.nz = (m(0, 0) - m(1, 1)).real();
    return n;
}

std::array<double, 2> qubit_spectrum(const BlochVector& n) {
    validate_bloch(n);
    const double r = std::min(n.norm(), 1.0);
    return {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
}

double mixedness(const DensityMatrix& rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double p = 0.0;
    const std::size_t d = rho.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p += std::norm(rho.mat()(i, j));
    return 1.0 - p;
}

DensityMatrix validate_state(const ComplexMatrix& m) { return DensityMatrix(m); }

}  // namespace qgeo
