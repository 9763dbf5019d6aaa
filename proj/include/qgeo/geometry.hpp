#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qgeo/matrix.hpp"
#include "qgeo/pauli.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

// Traceless Hermitian direction in state space. Validated on construction:
// Hermitian to 1e-12 and |trace| <= 1e-12.
class TangentVector {
public:
    explicit TangentVector(const ComplexMatrix& m);

    const ComplexMatrix& mat() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }

private:
    ComplexMatrix mat_;
};

// A = i[rho, K] for Hermitian K: the velocity of rho under the unitary flow
// generated by K. Always traceless Hermitian, so it lands in TangentVector.
TangentVector tangent_from_observable(const DensityMatrix& rho, const ComplexMatrix& k);

// A symmetric function c(l, m) on positive pairs together with its value
// convention C = l * c(l, l). Each instance defines one Riemannian metric on
// the state space via eval_metric below. `extension` marks entries carried
// for comparison runs only; the verification suite gates on Wigner-Yanase.
struct MetricFunction {
    std::string name;
    double constant;  // C = l * c(l, l)
    bool extension;
    std::function<double(double, double)> c;
};

const MetricFunction& mc_wigner_yanase();  // c = 4/(sqrt(l)+sqrt(m))^2
const MetricFunction& mc_bures();          // c = 2/(l+m), extension
const MetricFunction& mc_kubo_mori();      // c = log(l/m)/(l-m), extension
const std::vector<const MetricFunction*>& metric_registry();

// K(A, A) = C sum_i Atil_ii^2 / lambda_i + 2 sum_{i<j} |Atil_ij|^2 c(lambda_i, lambda_j)
// with Atil = V^dagger A V in the eigenbasis of rho. Throws std::domain_error
// when any eigenvalue of rho is at or below 1e-10 (boundary of the faithful
// region) and std::invalid_argument on dimension mismatch.
double metric_eval(const DensityMatrix& rho, const TangentVector& a, const MetricFunction& f);

// Closed form of metric_eval for a qubit with A = i[rho, sigma_axis] and the
// Wigner-Yanase function: 8 t2 (1 - sqrt(1-r2)) / r2 where r2 = |n|^2 and
// t2 = r2 - n_axis^2, continued by 0 at n = 0. Requires |n| < 1.
double metric_wy_qubit(const BlochVector& n, PauliAxis axis);

struct MetricFunctionReport {
    std::string name;
    int samples = 0;
    double max_symmetry_violation = 0.0;    // |c(l,m) - c(m,l)|
    double max_diagonal_violation = 0.0;    // |c(l,l) - C/l|
    double max_homogeneity_violation = 0.0; // relative, |t c(tl,tm) - c(l,m)| / c(l,m)
};

// Samples (l, m, t) log-uniformly over [1e-2, 1e1]^2 x [1e-1, 1e1] and
// records the worst violation of each defining property.
MetricFunctionReport check_mc_properties(const MetricFunction& f, int samples,
                                         std::uint64_t seed = 12345);

}  // namespace qgeo
