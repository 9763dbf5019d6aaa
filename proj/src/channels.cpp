#include "qgeo/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qgeo/pauli.hpp"

namespace qgeo {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, std::string label)
    : ops_(std::move(ops)), label_(std::move(label)) {
    if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
    const std::size_t d = ops_.front().dim();
    if (d == 0) throw std::invalid_argument("KrausChannel: empty operator");
    ComplexMatrix sum(d);
    for (const auto& k : ops_) {
        if (k.dim() != d) throw std::invalid_argument("KrausChannel: mixed operator dimensions");
        if (!k.all_finite()) throw std::invalid_argument("KrausChannel: non-finite entry");
        sum += adjoint(k) * k;
    }
    const double defect = (sum - ComplexMatrix::identity(d)).max_abs();
    if (defect > 1e-12)
        throw std::invalid_argument("KrausChannel \"" + label_ +
                                    "\": not trace preserving (defect " +
                                    std::to_string(defect) + ")");
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& m) {
    if (m.dim() != ch.dim())
        throw std::invalid_argument("apply: channel dim " + std::to_string(ch.dim()) +
                                    " vs matrix dim " + std::to_string(m.dim()));
    ComplexMatrix out(m.dim());
    for (const auto& k : ch.ops()) out += k * m * adjoint(k);
    return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    return validate_state(apply(ch, rho.mat()));
}

KrausChannel identity_channel() {
    return KrausChannel({ComplexMatrix::identity(2)}, "identity");
}

KrausChannel depolarizing(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("depolarizing: p must be in [0, 1], got " +
                                    std::to_string(p));
    const double w0 = std::sqrt(1.0 - 0.75 * p);
    const double w1 = std::sqrt(0.25 * p);
    std::vector<ComplexMatrix> ops;
    ops.push_back(w0 * ComplexMatrix::identity(2));
    ops.push_back(w1 * pauli_x());
    ops.push_back(w1 * pauli_y());
    ops.push_back(w1 * pauli_z());
    return KrausChannel(std::move(ops), "depolarizing");
}

KrausChannel amplitude_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("amplitude_damping: gamma must be in [0, 1], got " +
                                    std::to_string(gamma));
    ComplexMatrix k0(2, {1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)});
    ComplexMatrix k1(2, {0.0, std::sqrt(gamma), 0.0, 0.0});
    return KrausChannel({k0, k1}, "amplitude_damping");
}

KrausChannel phase_damping(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("phase_damping: lambda must be in [0, 1], got " +
                                    std::to_string(lambda));
    ComplexMatrix k0 = std::sqrt(1.0 - lambda) * ComplexMatrix::identity(2);
    ComplexMatrix k1(2, {std::sqrt(lambda), 0.0, 0.0, 0.0});
    ComplexMatrix k2(2, {0.0, 0.0, 0.0, std::sqrt(lambda)});
    return KrausChannel({k0, k1, k2}, "phase_damping");
}

KrausChannel random_channel(std::uint64_t seed) {
    Rng rng(seed);
    // 8x2 Gaussian, orthonormalize the two columns (vectors in C^8), then
    // slice into four stacked 2x2 blocks; W^dagger W = I makes the blocks a
    // trace-preserving Kraus set.
    for (int attempt = 0; attempt < 16; ++attempt) {
        cplx w[8][2];
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 2; ++j) w[i][j] = cplx(rng.gaussian(), rng.gaussian());

        double n0 = 0.0;
        for (int i = 0; i < 8; ++i) n0 += std::norm(w[i][0]);
        n0 = std::sqrt(n0);
        if (n0 < 1e-8) continue;
        for (int i = 0; i < 8; ++i) w[i][0] /= n0;

        cplx proj = 0.0;
        for (int i = 0; i < 8; ++i) proj += std::conj(w[i][0]) * w[i][1];
        for (int i = 0; i < 8; ++i) w[i][1] -= proj * w[i][0];
        double n1 = 0.0;
        for (int i = 0; i < 8; ++i) n1 += std::norm(w[i][1]);
        n1 = std::sqrt(n1);
        if (n1 < 1e-8) continue;
        for (int i = 0; i < 8; ++i) w[i][1] /= n1;

        std::vector<ComplexMatrix> ops;
        for (int k = 0; k < 4; ++k) {
            ComplexMatrix op(2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) op(i, j) = w[2 * k + i][j];
            ops.push_back(op);
        }
        return KrausChannel(std::move(ops), "random");
    }
    throw std::runtime_error("random_channel: orthonormalization kept degenerating");
}

KrausChannel unitary_channel(const ComplexMatrix& u, std::string label) {
    const double d = (u * adjoint(u) - ComplexMatrix::identity(u.dim())).max_abs();
    if (d > 1e-12)
        throw std::invalid_argument("unitary_channel: not unitary (defect " + std::to_string(d) +
                                    ")");
    return KrausChannel({u}, std::move(label));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());
    // modified Gram-Schmidt over columns
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) throw std::runtime_error("random_unitary: degenerate draw");
        for (std::size_t i = 0; i < dim; ++i) g(i, j) /= nrm;
    }
    return g;
}

KrausChannel on_second_qubit(const KrausChannel& ch) {
    if (ch.dim() != 2)
        throw std::invalid_argument("on_second_qubit: base channel must act on a qubit");
    const ComplexMatrix id = ComplexMatrix::identity(2);
    std::vector<ComplexMatrix> ops;
    ops.reserve(ch.ops().size());
    for (const auto& k : ch.ops()) ops.push_back(tensor(id, k));
    return KrausChannel(std::move(ops), ch.label() + "_on_ancilla");
}

}  // namespace qgeo
