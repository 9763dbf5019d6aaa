#pragma once

#include <array>

#include "qgeo/matrix.hpp"

namespace qgeo {

struct BlochVector {
    double nx = 0.0;
    double ny = 0.0;
    double nz = 0.0;

    double norm2() const { return nx * nx + ny * ny + nz * nz; }
    double norm() const;
};

// throws std::domain_error when |n| > 1 beyond 1e-12, or entries non-finite
void validate_bloch(const BlochVector& n);

// Validated density matrix: Hermitian to 1e-12, unit trace to 1e-12,
// eigenvalues >= -1e-12. Construction is the only validation point;
// a held instance is trusted downstream.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    const ComplexMatrix& mat() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }

private:
    ComplexMatrix mat_;
};

// rho = (I + n . sigma)/2
DensityMatrix bloch_to_density(const BlochVector& n);

// n_k = Re tr(rho sigma_k); requires dim 2
BlochVector density_to_bloch(const DensityMatrix& rho);

// {(1+|n|)/2, (1-|n|)/2}, larger first
std::array<double, 2> qubit_spectrum(const BlochVector& n);

// 1 - tr(rho^2); 0 for pure states, 1 - 1/d at the maximally mixed state
double mixedness(const DensityMatrix& rho);

// validation entry point for raw matrices; throws on any defect with a
// message naming the failed check
DensityMatrix validate_state(const ComplexMatrix& m);

}  // namespace qgeo
