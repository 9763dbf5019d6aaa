#include "qgeo/pauli.hpp"

#include <stdexcept>

namespace qgeo {

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

const ComplexMatrix& pauli(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::x: return pauli_x();
        case PauliAxis::y: return pauli_y();
        case PauliAxis::z: return pauli_z();
    }
    throw std::invalid_argument("pauli: bad axis");
}

PauliAxis axis_from_string(const std::string& s) {
    if (s == "x") return PauliAxis::x;
    if (s == "y") return PauliAxis::y;
    if (s == "z") return PauliAxis::z;
    throw std::invalid_argument("axis must be one of x, y, z; got \"" + s + "\"");
}

const char* axis_name(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::x: return "x";
        case PauliAxis::y: return "y";
        case PauliAxis::z: return "z";
    }
    return "?";
}

}  // namespace qgeo
