#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgeo/matrix.hpp"
#include "qgeo/rng.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

// Completely positive trace-preserving map in Kraus form. Construction
// checks sum_k K_k^dagger K_k = I to 1e-12 (complete positivity is free in
// this representation).
class KrausChannel {
public:
    KrausChannel(std::vector<ComplexMatrix> ops, std::string label);

    const std::vector<ComplexMatrix>& ops() const { return ops_; }
    const std::string& label() const { return label_; }
    std::size_t dim() const { return ops_.front().dim(); }

private:
    std::vector<ComplexMatrix> ops_;
    std::string label_;
};

// sum_k K_k M K_k^dagger on a raw matrix (works for tangents too)
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& m);

// same, revalidated as a state
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

KrausChannel identity_channel();

// p in [0, 1]; Bloch ball contraction by 1 - p
KrausChannel depolarizing(double p);

// gamma in [0, 1]; decay toward |0>
KrausChannel amplitude_damping(double gamma);

// lambda in [0, 1]; off-diagonal contraction by 1 - lambda
KrausChannel phase_damping(double lambda);

// Stinespring-random qubit channel: a seeded Gaussian 8x2 matrix is
// orthonormalized into an isometry and cut into four 2x2 Kraus blocks.
KrausChannel random_channel(std::uint64_t seed);

// single-Kraus channel rho -> U rho U^dagger
KrausChannel unitary_channel(const ComplexMatrix& u, std::string label);

// Haar-ish random unitary from Gram-Schmidt on a Gaussian matrix
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);

// lift a qubit channel to act on the second factor of a two-qubit system:
// Kraus ops I tensor K_k
KrausChannel on_second_qubit(const KrausChannel& ch);

}  // namespace qgeo
