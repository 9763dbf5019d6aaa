#include "qgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qgeo/channels.hpp"
#include "qgeo/rng.hpp"

namespace qgeo {

namespace {

const EntanglingUnitary& cached_cnot(PauliAxis axis) {
    static const EntanglingUnitary ux = cnot_in_basis(PauliAxis::x);
    static const EntanglingUnitary uy = cnot_in_basis(PauliAxis::y);
    static const EntanglingUnitary uz = cnot_in_basis(PauliAxis::z);
    switch (axis) {
        case PauliAxis::x: return ux;
        case PauliAxis::y: return uy;
        case PauliAxis::z: return uz;
    }
    throw std::invalid_argument("cached_cnot: bad axis");
}

const DensityMatrix& cached_ancilla(PauliAxis axis) {
    static const DensityMatrix ax = plus_eigenstate(PauliAxis::x);
    static const DensityMatrix ay = plus_eigenstate(PauliAxis::y);
    static const DensityMatrix az = plus_eigenstate(PauliAxis::z);
    switch (axis) {
        case PauliAxis::x: return ax;
        case PauliAxis::y: return ay;
        case PauliAxis::z: return az;
    }
    throw std::invalid_argument("cached_ancilla: bad axis");
}

// negativity the pipeline must reproduce: half the Bloch component
// transverse to the axis
double transverse_negativity(const BlochVector& n, PauliAxis axis) {
    double comp = 0.0;
    switch (axis) {
        case PauliAxis::x: comp = n.nx; break;
        case PauliAxis::y: comp = n.ny; break;
        case PauliAxis::z: comp = n.nz; break;
    }
    return 0.5 * std::sqrt(std::max(0.0, n.norm2() - comp * comp));
}

}  // namespace

double SweepReport::max_spread() const {
    double m = 0.0;
    for (const auto& s : shells)
        if (s.directions > s.excluded) m = std::max(m, s.spread_rel);
    return m;
}

bool SweepReport::direction_independent(double tol) const { return max_spread() < tol; }

double paper_coefficient_formula(double shell) {
    return 2.0 * std::sqrt(2.0) / std::sqrt(1.0 - std::sqrt(1.0 - shell * shell));
}

double derived_coefficient_formula(double shell) {
    return std::sqrt(1.0 + std::sqrt(1.0 - shell * shell)) / (4.0 * std::sqrt(2.0));
}

RelationSample relation_check(const BlochVector& n, PauliAxis axis) {
    validate_bloch(n);
    const double r = n.norm();
    if (r >= 1.0 - 1e-6)
        throw std::domain_error("boundary state: |n| = " + std::to_string(r) +
                                ", the pipeline needs |n| < 1 - 1e-6");

    const DensityMatrix rho = bloch_to_density(n);
    const TangentVector a = tangent_from_observable(rho, pauli(axis));
    const double metric = metric_eval(rho, a, mc_wigner_yanase());

    const DensityMatrix joint = generate_joint_state(rho, cached_ancilla(axis), cached_cnot(axis));
    const double neg = negativity(joint);

    const double closed = transverse_negativity(n, axis);
    if (std::abs(neg - closed) > 1e-12)
        throw std::logic_error("relation_check: matrix negativity " + std::to_string(neg) +
                               " drifted from the closed form " + std::to_string(closed));

    RelationSample s;
    s.n = n;
    s.shell = r;
    s.axis = axis;
    s.negativity = neg;
    s.metric = metric;
    s.sqrt_metric = std::sqrt(metric);
    s.mixedness = mixedness(rho);
    if (s.sqrt_metric > 1e-12) {
        s.ratio_defined = true;
        s.ratio = neg / s.sqrt_metric;
    }
    return s;
}

std::vector<std::array<double, 3>> fibonacci_sphere(int count) {
    if (count < 1) throw std::invalid_argument("fibonacci_sphere: count must be >= 1");
    // golden-angle spiral: z descends through the midpoints of `count` equal
    // bands, so the exact poles never appear
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<std::array<double, 3>> dirs;
    dirs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / count;
        const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = golden_angle * k;
        dirs.push_back({rxy * std::cos(th), rxy * std::sin(th), z});
    }
    return dirs;
}

SweepReport sweep_bloch_ball(const std::vector<double>& shells, int directions_per_shell,
                             PauliAxis axis) {
    if (shells.empty()) throw std::invalid_argument("sweep_bloch_ball: no shells");
    for (double r : shells)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("sweep_bloch_ball: shell radius " + std::to_string(r) +
                                        " outside (0, 1)");
    if (directions_per_shell < 8)
        throw std::invalid_argument("sweep_bloch_ball: need at least 8 directions, got " +
                                    std::to_string(directions_per_shell));

    const auto dirs = fibonacci_sphere(directions_per_shell);

    SweepReport report;
    report.axis = axis;
    report.directions_per_shell = directions_per_shell;
    report.samples.reserve(shells.size() * dirs.size());

    for (double r : shells) {
        ShellStats st;
        st.shell = r;
        st.directions = directions_per_shell;
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        int defined = 0;
        for (const auto& d : dirs) {
            RelationSample s = relation_check({r * d[0], r * d[1], r * d[2]}, axis);
            s.shell = r;
            if (s.ratio_defined) {
                ++defined;
                sum += s.ratio;
                lo = std::min(lo, s.ratio);
                hi = std::max(hi, s.ratio);
            } else {
                ++st.excluded;
            }
            report.samples.push_back(std::move(s));
        }
        if (defined > 0) {
            st.ratio_min = lo;
            st.ratio_max = hi;
            st.ratio_mean = sum / defined;
            st.spread_rel = (hi - lo) / st.ratio_mean;
        }
        report.shells.push_back(st);
    }
    return report;
}

std::vector<ShellCoefficients> compare_coefficients(const SweepReport& report) {
    if (report.shells.empty())
        throw std::invalid_argument("compare_coefficients: empty report");
    std::vector<ShellCoefficients> rows;
    rows.reserve(report.shells.size());
    for (const auto& st : report.shells) {
        ShellCoefficients c;
        c.shell = st.shell;
        c.measured_coefficient = st.ratio_mean;
        c.paper_coefficient = paper_coefficient_formula(st.shell);
        c.derived_coefficient = derived_coefficient_formula(st.shell);
        c.rel_dev_paper = std::abs(c.measured_coefficient - c.paper_coefficient) /
                          c.paper_coefficient;
        c.rel_dev_derived = std::abs(c.measured_coefficient - c.derived_coefficient) /
                            c.derived_coefficient;
        c.quotient_paper_over_measured =
            st.ratio_mean > 0.0 ? c.paper_coefficient / c.measured_coefficient : 0.0;
        rows.push_back(c);
    }
    return rows;
}

namespace {

struct MonotonicityInputs {
    BlochVector n;
    DensityMatrix rho;
    TangentVector a;
};

MonotonicityInputs sample_inputs(Rng& rng) {
    // direction from normalized Gaussians, radius law r^3 ~ uniform so the
    // ball is covered evenly, capped at 0.9 to stay clear of the metric's
    // eigenvalue floor even after damping channels
    double dx = 0.0, dy = 0.0, dz = 0.0, nrm = 0.0;
    do {
        dx = rng.gaussian();
        dy = rng.gaussian();
        dz = rng.gaussian();
        nrm = std::sqrt(dx * dx + dy * dy + dz * dz);
    } while (nrm < 1e-12);
    const double r = 0.9 * std::cbrt(rng.uniform());
    const BlochVector n{r * dx / nrm, r * dy / nrm, r * dz / nrm};

    ComplexMatrix h(2);
    double fro = 0.0;
    do {
        const double g1 = rng.gaussian();
        const double g2 = rng.gaussian();
        const double g3 = rng.gaussian();
        h(0, 0) = g1;
        h(1, 1) = -g1;
        h(0, 1) = cplx(g2, g3);
        h(1, 0) = cplx(g2, -g3);
        fro = h.frobenius_norm();
    } while (fro < 1e-12);
    h *= cplx(1.0 / fro);

    return {n, bloch_to_density(n), TangentVector(h)};
}

KrausChannel family_channel(const std::string& family, Rng& rng, std::uint64_t sub_seed) {
    if (family == "identity") return identity_channel();
    if (family == "depolarizing") return depolarizing(rng.uniform());
    if (family == "amplitude_damping") return amplitude_damping(0.9 * rng.uniform());
    if (family == "phase_damping") return phase_damping(rng.uniform());
    if (family == "random") return random_channel(sub_seed);
    if (family == "unitary") return unitary_channel(random_unitary(rng, 2), "unitary");
    throw std::invalid_argument("monotonicity_scan: unknown channel family \"" + family + "\"");
}

}  // namespace

double MonotonicityReport::max_violation_transformed() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& f : families) m = std::max(m, f.max_violation_transformed);
    return m;
}

const std::vector<std::string>& monotonicity_families() {
    static const std::vector<std::string> fams = {"identity",      "depolarizing",
                                                  "amplitude_damping", "phase_damping",
                                                  "random",        "unitary"};
    return fams;
}

MonotonicityReport monotonicity_scan(int samples, std::uint64_t seed,
                                     const std::vector<std::string>& families) {
    if (samples < 1) throw std::invalid_argument("monotonicity_scan: samples must be >= 1");
    const std::vector<std::string>& fams =
        families.empty() ? monotonicity_families() : families;

    MonotonicityReport report;
    report.seed = seed;
    report.samples_per_family = samples;

    const auto& known = monotonicity_families();
    int index = 0;
    for (const auto& family : fams) {
        const auto it = std::find(known.begin(), known.end(), family);
        if (it == known.end())
            throw std::invalid_argument("monotonicity_scan: unknown channel family \"" + family +
                                        "\"");
        // substream position comes from the canonical family index so a
        // subset run reproduces the full run's numbers for that family
        const std::uint64_t family_index = static_cast<std::uint64_t>(it - known.begin());
        const std::uint64_t base = seed * 1000003ULL + family_index;
        Rng rng(base);

        FamilyStats fs;
        fs.family = family;

        const MetricFunction& wy = mc_wigner_yanase();
        bool first = true;
        for (int k = 0; k < samples; ++k) {
            const MonotonicityInputs in = sample_inputs(rng);
            const KrausChannel ch = family_channel(family, rng, base * 1000003ULL + k);

            MonotonicitySample ms;
            ms.index = index;
            ms.family = family;
            ms.metric_before = metric_eval(in.rho, in.a, wy);

            ComplexMatrix pushed = apply(ch, in.a.mat());
            ms.trace_adjustment = std::abs(pushed.trace());
            if (ms.trace_adjustment > 1e-12) {
                const double half_tr = 0.5 * pushed.trace().real();
                pushed(0, 0) -= half_tr;
                pushed(1, 1) -= half_tr;
            }

            try {
                const DensityMatrix rho_after = apply(ch, in.rho);
                ms.metric_after_transformed = metric_eval(rho_after, TangentVector(pushed), wy);
                ms.metric_after_fixed = metric_eval(rho_after, in.a, wy);
            } catch (const std::domain_error&) {
                ++fs.skipped;
                ++index;
                continue;
            }
            ms.violation_transformed = ms.metric_after_transformed - ms.metric_before;
            ms.violation_fixed = ms.metric_after_fixed - ms.metric_before;

            const DensityMatrix joint =
                generate_joint_state(in.rho, cached_ancilla(PauliAxis::z),
                                     cached_cnot(PauliAxis::z));
            ms.negativity_before = negativity(joint);
            ms.negativity_after = negativity(apply(on_second_qubit(ch), joint));
            ms.negativity_violation = ms.negativity_after - ms.negativity_before;

            if (first) {
                fs.max_violation_transformed = ms.violation_transformed;
                fs.max_violation_fixed = ms.violation_fixed;
                fs.max_negativity_violation = ms.negativity_violation;
                first = false;
            } else {
                fs.max_violation_transformed =
                    std::max(fs.max_violation_transformed, ms.violation_transformed);
                fs.max_violation_fixed = std::max(fs.max_violation_fixed, ms.violation_fixed);
                fs.max_negativity_violation =
                    std::max(fs.max_negativity_violation, ms.negativity_violation);
            }
            fs.max_abs_change_transformed =
                std::max(fs.max_abs_change_transformed, std::abs(ms.violation_transformed));
            fs.max_trace_adjustment = std::max(fs.max_trace_adjustment, ms.trace_adjustment);
            ++fs.samples;

            report.samples.push_back(std::move(ms));
            ++index;
        }
        report.families.push_back(std::move(fs));
    }
    return report;
}

}  // namespace qgeo
