#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgeo/entanglement.hpp"
#include "qgeo/geometry.hpp"
#include "qgeo/pauli.hpp"
#include "qgeo/states.hpp"

namespace qgeo {

// One point of the negativity-vs-metric comparison. ratio is
// negativity / sqrt(metric), defined only when sqrt(metric) > 1e-12;
// ratio_defined says which.
struct RelationSample {
    BlochVector n;
    double shell = 0.0;  // nominal |n| (grid radius for sweep samples)
    PauliAxis axis = PauliAxis::z;
    double negativity = 0.0;
    double metric = 0.0;
    double sqrt_metric = 0.0;
    double mixedness = 0.0;
    bool ratio_defined = false;
    double ratio = 0.0;
};

struct ShellStats {
    double shell = 0.0;
    int directions = 0;
    int excluded = 0;  // samples with sqrt_metric <= 1e-12
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double ratio_mean = 0.0;          // the fitted coefficient for this shell
    double spread_rel = 0.0;          // (max - min)/mean over defined ratios
};

struct SweepReport {
    PauliAxis axis = PauliAxis::z;
    int directions_per_shell = 0;
    std::vector<RelationSample> samples;  // shell-major, grid order
    std::vector<ShellStats> shells;

    double max_spread() const;
    bool direction_independent(double tol = 1e-9) const;
};

// Per-shell comparison of the fitted coefficient against two closed-form
// candidates: 2 sqrt(2) (1 - sqrt(2 mixedness))^(-1/2) and
// sqrt(1 + sqrt(1-r^2))/(4 sqrt(2)). Both are reported with relative
// deviations; no judgment beyond the numbers.
struct ShellCoefficients {
    double shell = 0.0;
    double measured_coefficient = 0.0;
    double paper_coefficient = 0.0;
    double derived_coefficient = 0.0;
    double rel_dev_paper = 0.0;
    double rel_dev_derived = 0.0;
    double quotient_paper_over_measured = 0.0;
};

double paper_coefficient_formula(double shell);
double derived_coefficient_formula(double shell);

// Full pipeline at one Bloch vector: state -> tangent i[rho, sigma_axis] ->
// Wigner-Yanase metric, and state -> joint state (basis CNOT, +1-eigenstate
// ancilla) -> negativity. Cross-checks the matrix negativity against the
// transverse closed form to 1e-12 and throws std::logic_error on drift.
// Requires |n| < 1 - 1e-6; throws std::domain_error("boundary state ...").
RelationSample relation_check(const BlochVector& n, PauliAxis axis);

// Deterministic near-uniform unit vectors (golden-angle spiral); count >= 1.
std::vector<std::array<double, 3>> fibonacci_sphere(int count);

// relation_check over shells x Fibonacci directions. Radii must lie in
// (0, 1); directions_per_shell >= 8. Samples with sqrt_metric <= 1e-12 are
// excluded from the per-shell statistics and counted.
SweepReport sweep_bloch_ball(const std::vector<double>& shells, int directions_per_shell,
                             PauliAxis axis);

// Requires a report with at least one shell.
std::vector<ShellCoefficients> compare_coefficients(const SweepReport& report);

struct MonotonicitySample {
    int index = 0;
    std::string family;
    double metric_before = 0.0;
    double metric_after_transformed = 0.0;  // tangent pushed through the channel
    double metric_after_fixed = 0.0;        // same tangent reused at the output state
    double violation_transformed = 0.0;     // after - before, signed
    double violation_fixed = 0.0;
    double negativity_before = 0.0;
    double negativity_after = 0.0;          // channel lifted to the ancilla
    double negativity_violation = 0.0;
    double trace_adjustment = 0.0;          // |tr| removed from the pushed tangent
};

struct FamilyStats {
    std::string family;
    int samples = 0;
    int skipped = 0;  // metric undefined after the channel (eigenvalue floor)
    double max_violation_transformed = 0.0;
    double max_violation_fixed = 0.0;
    double max_abs_change_transformed = 0.0;  // |after - before|, the equality check
    double max_negativity_violation = 0.0;
    double max_trace_adjustment = 0.0;
};

struct MonotonicityReport {
    std::uint64_t seed = 0;
    int samples_per_family = 0;
    std::vector<MonotonicitySample> samples;
    std::vector<FamilyStats> families;

    double max_violation_transformed() const;
};

const std::vector<std::string>& monotonicity_families();  // canonical order

// Seeded scan of metric contractivity and negativity monotonicity over the
// named channel families. Both condition readings are recorded; only the
// transformed-tangent reading is a contract (<= 1e-10), the fixed-tangent
// numbers are informational. families defaults to all known ones.
MonotonicityReport monotonicity_scan(int samples, std::uint64_t seed,
                                     const std::vector<std::string>& families = {});

}  // namespace qgeo
