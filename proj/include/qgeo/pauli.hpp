#pragma once

#include <string>

#include "qgeo/matrix.hpp"

namespace qgeo {

enum class PauliAxis { x, y, z };

const ComplexMatrix& pauli(PauliAxis axis);
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

// throws std::invalid_argument for anything but "x", "y", "z"
PauliAxis axis_from_string(const std::string& s);
const char* axis_name(PauliAxis axis);

}  // namespace qgeo
