#pragma once

#include "qgeo/matrix.hpp"
#include "qgeo/pauli.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

// 4x4 unitary tagged with the Pauli axis whose eigenbasis it acts in.
// Construction checks U U^dagger = I to 1e-12.
class EntanglingUnitary {
public:
    EntanglingUnitary(const ComplexMatrix& m, PauliAxis axis);

    const ComplexMatrix& mat() const { return mat_; }
    PauliAxis axis() const { return axis_; }

private:
    ComplexMatrix mat_;
    PauliAxis axis_;
};

// Single-qubit basis change B with B sigma_z B^dagger = sigma_axis; columns
// are the +1 and -1 eigenvectors of sigma_axis.
ComplexMatrix axis_basis(PauliAxis axis);

// Projector onto the +1 eigenstate of sigma_axis (|0><0| for z, |+><+| for x).
DensityMatrix plus_eigenstate(PauliAxis axis);

// (B tensor B) CNOT (B tensor B)^dagger: the controlled flip acting in the
// sigma_axis eigenbasis of both qubits. For z this is the plain CNOT.
EntanglingUnitary cnot_in_basis(PauliAxis axis);

// U (rho tensor ancilla) U^dagger, validated as a state; system qubit is the
// first tensor factor
DensityMatrix generate_joint_state(const DensityMatrix& rho, const DensityMatrix& ancilla,
                                   const EntanglingUnitary& u);

// (||joint^{T_first}||_1 - 1)/2, clamped at 0 against roundoff; dim must be 4
double negativity(const DensityMatrix& joint);

// sqrt(nx^2 + ny^2)/2: what the z-axis pipeline produces from a system qubit
// at n with the |0><0| ancilla
double negativity_closed_form(const BlochVector& n);

}  // namespace qgeo
