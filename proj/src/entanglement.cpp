#include "qgeo/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace qgeo {

namespace {

double unitarity_defect(const ComplexMatrix& m) {
    return (m * adjoint(m) - ComplexMatrix::identity(m.dim())).max_abs();
}

const ComplexMatrix& cnot_matrix() {
    static const ComplexMatrix m(4, {1, 0, 0, 0,   //
                                     0, 1, 0, 0,   //
                                     0, 0, 0, 1,   //
                                     0, 0, 1, 0});
    return m;
}

}  // namespace

EntanglingUnitary::EntanglingUnitary(const ComplexMatrix& m, PauliAxis axis)
    : mat_(m), axis_(axis) {
    if (mat_.dim() != 4)
        throw std::invalid_argument("EntanglingUnitary: need dim 4, got " +
                                    std::to_string(mat_.dim()));
    const double d = unitarity_defect(mat_);
    if (d > 1e-12)
        throw std::invalid_argument("EntanglingUnitary: not unitary (defect " +
                                    std::to_string(d) + ")");
}

ComplexMatrix axis_basis(PauliAxis axis) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (axis) {
        case PauliAxis::z: return ComplexMatrix::identity(2);
        case PauliAxis::x: return ComplexMatrix(2, {s, s, s, -s});
        case PauliAxis::y: return ComplexMatrix(2, {s, s, cplx(0.0, s), cplx(0.0, -s)});
    }
    throw std::invalid_argument("axis_basis: bad axis");
}

DensityMatrix plus_eigenstate(PauliAxis axis) {
    const ComplexMatrix b = axis_basis(axis);
    ComplexMatrix proj(2);
    // |b0><b0| from the first column of B
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) proj(i, j) = b(i, 0) * std::conj(b(j, 0));
    return DensityMatrix(proj);
}

EntanglingUnitary cnot_in_basis(PauliAxis axis) {
    if (axis == PauliAxis::z) return EntanglingUnitary(cnot_matrix(), axis);
    const ComplexMatrix bb = tensor(axis_basis(axis), axis_basis(axis));
    return EntanglingUnitary(bb * cnot_matrix() * adjoint(bb), axis);
}

DensityMatrix generate_joint_state(const DensityMatrix& rho, const DensityMatrix& ancilla,
                                   const EntanglingUnitary& u) {
    if (rho.dim() != 2 || ancilla.dim() != 2)
        throw std::invalid_argument("generate_joint_state: system and ancilla must be qubits");
    const ComplexMatrix joint = u.mat() * tensor(rho.mat(), ancilla.mat()) * adjoint(u.mat());
    return validate_state(joint);
}

double negativity(const DensityMatrix& joint) {
    if (joint.dim() != 4)
        throw std::invalid_argument("negativity: need a two-qubit state, got dim " +
                                    std::to_string(joint.dim()));
    const double n = 0.5 * (trace_norm(partial_transpose_first(joint.mat())) - 1.0);
    // the trace norm of any unit-trace Hermitian matrix is >= 1, so a
    // negative value here is pure roundoff
    return std::max(0.0, n);
}

double negativity_closed_form(const BlochVector& n) {
    validate_bloch(n);
    return 0.5 * std::hypot(n.nx, n.ny);
}

}  // namespace qgeo
