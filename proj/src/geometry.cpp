#include "qgeo/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "qgeo/rng.hpp"

namespace qgeo {

TangentVector::TangentVector(const ComplexMatrix& m) : mat_(m) {
    if (mat_.dim() == 0) throw std::invalid_argument("tangent: empty matrix");
    if (!mat_.all_finite()) throw std::invalid_argument("tangent: non-finite entry");
    const double hd = mat_.hermiticity_defect();
    if (hd > 1e-12)
        throw std::invalid_argument("tangent: not Hermitian (defect " + std::to_string(hd) + ")");
    const double tr = std::abs(mat_.trace());
    if (tr > 1e-12)
        throw std::invalid_argument("tangent: trace not zero (|tr| = " + std::to_string(tr) + ")");
}

TangentVector tangent_from_observable(const DensityMatrix& rho, const ComplexMatrix& k) {
    if (k.dim() != rho.dim())
        throw std::invalid_argument("tangent_from_observable: dimension mismatch");
    if (k.hermiticity_defect() > 1e-12)
        throw std::invalid_argument("tangent_from_observable: observable not Hermitian");
    ComplexMatrix a = cplx(0.0, 1.0) * commutator(rho.mat(), k);
    // i[rho, K] is Hermitian in exact arithmetic; make it exact so the
    // TangentVector gate never trips on roundoff.
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    return TangentVector(a);
}

const MetricFunction& mc_wigner_yanase() {
    static const MetricFunction f{
        "wigner_yanase", 1.0, false,
        [](double l, double m) {
            const double r = std::sqrt(l) + std::sqrt(m);
            return 4.0 / (r * r);
        }};
    return f;
}

const MetricFunction& mc_bures() {
    static const MetricFunction f{"bures", 1.0, true,
                                  [](double l, double m) { return 2.0 / (l + m); }};
    return f;
}

const MetricFunction& mc_kubo_mori() {
    static const MetricFunction f{
        "kubo_mori", 1.0, true,
        [](double l, double m) {
            const double d = l - m;
            const double s = l + m;
            // log(l/m)/(l-m) -> 2/(l+m) as l -> m; the branch point keeps
            // the relative truncation error below ~3e-17
            if (std::abs(d) <= 1e-8 * s) return 2.0 / s;
            return std::log(l / m) / d;
        }};
    return f;
}

const std::vector<const MetricFunction*>& metric_registry() {
    static const std::vector<const MetricFunction*> reg = {&mc_wigner_yanase(), &mc_bures(),
                                                           &mc_kubo_mori()};
    return reg;
}

double metric_eval(const DensityMatrix& rho, const TangentVector& a, const MetricFunction& f) {
    if (rho.dim() != a.dim())
        throw std::invalid_argument("metric_eval: state dim " + std::to_string(rho.dim()) +
                                    " vs tangent dim " + std::to_string(a.dim()));
    const auto ed = eigh(rho.mat());
    for (double lam : ed.eigenvalues)
        if (lam <= 1e-10)
            throw std::domain_error("metric_eval: state eigenvalue " + std::to_string(lam) +
                                    " at or below the 1e-10 floor");

    const ComplexMatrix atil = adjoint(ed.eigenvectors) * a.mat() * ed.eigenvectors;
    const std::size_t n = rho.dim();
    double diag = 0.0;
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double aii = atil(i, i).real();
        diag += aii * aii / ed.eigenvalues[i];
        for (std::size_t j = i + 1; j < n; ++j)
            off += std::norm(atil(i, j)) * f.c(ed.eigenvalues[i], ed.eigenvalues[j]);
    }
    return f.constant * diag + 2.0 * off;
}

double metric_wy_qubit(const BlochVector& n, PauliAxis axis) {
    validate_bloch(n);
    const double r2 = n.norm2();
    if (r2 >= 1.0)
        throw std::domain_error("metric_wy_qubit: pure state (|n| = 1) is outside the domain");
    double comp = 0.0;
    switch (axis) {
        case PauliAxis::x: comp = n.nx; break;
        case PauliAxis::y: comp = n.ny; break;
        case PauliAxis::z: comp = n.nz; break;
    }
    const double t2 = std::max(0.0, r2 - comp * comp);
    // (1 - sqrt(1-r2))/r2 == 1/(1 + sqrt(1-r2)) exactly; the right-hand form
    // has no cancellation and carries the r2 -> 0 limit on its own
    return 8.0 * t2 / (1.0 + std::sqrt(1.0 - r2));
}

MetricFunctionReport check_mc_properties(const MetricFunction& f, int samples,
                                         std::uint64_t seed) {
    if (samples <= 0) throw std::invalid_argument("check_mc_properties: samples must be > 0");
    Rng rng(seed);
    MetricFunctionReport rep;
    rep.name = f.name;
    rep.samples = samples;
    const double llo = std::log(1e-2), lhi = std::log(1e1);
    const double tlo = std::log(1e-1), thi = std::log(1e1);
    for (int k = 0; k < samples; ++k) {
        const double l = std::exp(rng.uniform(llo, lhi));
        const double m = std::exp(rng.uniform(llo, lhi));
        const double t = std::exp(rng.uniform(tlo, thi));
        const double clm = f.c(l, m);
        rep.max_symmetry_violation =
            std::max(rep.max_symmetry_violation, std::abs(clm - f.c(m, l)));
        rep.max_diagonal_violation =
            std::max(rep.max_diagonal_violation, std::abs(f.c(l, l) - f.constant / l));
        rep.max_homogeneity_violation =
            std::max(rep.max_homogeneity_violation, std::abs(t * f.c(t * l, t * m) - clm) / clm);
    }
    return rep;
}

}  // namespace qgeo
