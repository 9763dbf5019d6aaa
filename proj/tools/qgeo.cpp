#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgeo/channels.hpp"
#include "qgeo/entanglement.hpp"
#include "qgeo/geometry.hpp"
#include "qgeo/pauli.hpp"
#include "qgeo/states.hpp"
#include "qgeo/verify.hpp"

namespace {

using namespace qgeo;

// All machine-readable floats go through here: 17 significant digits round-
// trip a double exactly, and the emitters below are the only writers, so
// reruns are byte-identical. Negative zero is canonicalized away.
std::string fmt17(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

void write_or_stdout(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file \"" + path + "\"");
    out << content;
    if (!out) throw std::runtime_error("write failed for \"" + path + "\"");
}

std::string relation_csv(const SweepReport& report) {
    std::string csv = "shell,nx,ny,nz,axis,negativity,metric,sqrt_metric,mixedness,ratio\n";
    for (const auto& s : report.samples) {
        csv += fmt17(s.shell) + ',' + fmt17(s.n.nx) + ',' + fmt17(s.n.ny) + ',' +
               fmt17(s.n.nz) + ',' + axis_name(s.axis) + ',' + fmt17(s.negativity) + ',' +
               fmt17(s.metric) + ',' + fmt17(s.sqrt_metric) + ',' + fmt17(s.mixedness) + ',' +
               (s.ratio_defined ? fmt17(s.ratio) : std::string("nan")) + '\n';
    }
    return csv;
}

std::string relation_json(const SweepReport& report,
                          const std::vector<ShellCoefficients>& coeffs) {
    std::string j = "{\n";
    j += "  \"axis\": \"" + std::string(axis_name(report.axis)) + "\",\n";
    j += "  \"directions_per_shell\": " + std::to_string(report.directions_per_shell) + ",\n";
    j += "  \"shell_count\": " + std::to_string(report.shells.size()) + ",\n";
    j += "  \"max_spread\": " + fmt17(report.max_spread()) + ",\n";
    j += "  \"direction_independent\": " + fmt_bool(report.direction_independent()) + ",\n";
    j += "  \"shells\": [\n";
    for (std::size_t i = 0; i < report.shells.size(); ++i) {
        const auto& st = report.shells[i];
        const auto& c = coeffs[i];
        j += "    {\n";
        j += "      \"shell\": " + fmt17(st.shell) + ",\n";
        j += "      \"directions\": " + std::to_string(st.directions) + ",\n";
        j += "      \"excluded\": " + std::to_string(st.excluded) + ",\n";
        j += "      \"ratio_min\": " + fmt17(st.ratio_min) + ",\n";
        j += "      \"ratio_max\": " + fmt17(st.ratio_max) + ",\n";
        j += "      \"spread_rel\": " + fmt17(st.spread_rel) + ",\n";
        j += "      \"measured_coefficient\": " + fmt17(c.measured_coefficient) + ",\n";
        j += "      \"paper_coefficient\": " + fmt17(c.paper_coefficient) + ",\n";
        j += "      \"derived_coefficient\": " + fmt17(c.derived_coefficient) + ",\n";
        j += "      \"rel_dev_paper\": " + fmt17(c.rel_dev_paper) + ",\n";
        j += "      \"rel_dev_derived\": " + fmt17(c.rel_dev_derived) + ",\n";
        j += "      \"quotient_paper_over_measured\": " +
             fmt17(c.quotient_paper_over_measured) + "\n";
        j += i + 1 < report.shells.size() ? "    },\n" : "    }\n";
    }
    j += "  ]\n}\n";
    return j;
}

std::string monotonicity_csv(const MonotonicityReport& report) {
    std::string csv =
        "sample,family,metric_before,metric_after_transformed,metric_after_fixed,"
        "violation_transformed,violation_fixed,negativity_before,negativity_after,"
        "negativity_violation,trace_adjustment\n";
    for (const auto& s : report.samples) {
        csv += std::to_string(s.index) + ',' + s.family + ',' + fmt17(s.metric_before) + ',' +
               fmt17(s.metric_after_transformed) + ',' + fmt17(s.metric_after_fixed) + ',' +
               fmt17(s.violation_transformed) + ',' + fmt17(s.violation_fixed) + ',' +
               fmt17(s.negativity_before) + ',' + fmt17(s.negativity_after) + ',' +
               fmt17(s.negativity_violation) + ',' + fmt17(s.trace_adjustment) + '\n';
    }
    return csv;
}

std::string monotonicity_json(const MonotonicityReport& report, double threshold) {
    std::string j = "{\n";
    j += "  \"seed\": " + std::to_string(report.seed) + ",\n";
    j += "  \"samples_per_family\": " + std::to_string(report.samples_per_family) + ",\n";
    j += "  \"families\": [\n";
    for (std::size_t i = 0; i < report.families.size(); ++i) {
        const auto& f = report.families[i];
        j += "    {\n";
        j += "      \"family\": \"" + f.family + "\",\n";
        j += "      \"samples\": " + std::to_string(f.samples) + ",\n";
        j += "      \"skipped\": " + std::to_string(f.skipped) + ",\n";
        j += "      \"max_violation_transformed\": " + fmt17(f.max_violation_transformed) +
             ",\n";
        j += "      \"max_violation_fixed\": " + fmt17(f.max_violation_fixed) + ",\n";
        j += "      \"max_abs_change_transformed\": " + fmt17(f.max_abs_change_transformed) +
             ",\n";
        j += "      \"max_negativity_violation\": " + fmt17(f.max_negativity_violation) + ",\n";
        j += "      \"max_trace_adjustment\": " + fmt17(f.max_trace_adjustment) + "\n";
        j += i + 1 < report.families.size() ? "    },\n" : "    }\n";
    }
    j += "  ],\n";
    j += "  \"max_violation_transformed\": " + fmt17(report.max_violation_transformed()) + ",\n";
    j += "  \"contractive_transformed\": " +
         fmt_bool(report.max_violation_transformed() <= threshold) + "\n";
    j += "}\n";
    return j;
}

BlochVector bloch_from_flag(const std::vector<double>& v) {
    return BlochVector{v.at(0), v.at(1), v.at(2)};
}

int cmd_metric(const std::vector<double>& bloch, const std::string& axis_token) {
    const PauliAxis axis = axis_from_string(axis_token);
    const BlochVector n = bloch_from_flag(bloch);
    const DensityMatrix rho = bloch_to_density(n);
    const TangentVector a = tangent_from_observable(rho, pauli(axis));
    const double metric = metric_eval(rho, a, mc_wigner_yanase());
    const auto spectrum = qubit_spectrum(n);

    std::cout << "bloch = " << fmt17(n.nx) << ',' << fmt17(n.ny) << ',' << fmt17(n.nz) << '\n';
    std::cout << "axis = " << axis_name(axis) << '\n';
    std::cout << "state_eigenvalues = " << fmt17(spectrum[1]) << ' ' << fmt17(spectrum[0])
              << '\n';
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            std::cout << "tangent[" << i << "][" << j << "] = " << fmt17(a.mat()(i, j).real())
                      << ' ' << fmt17(a.mat()(i, j).imag()) << '\n';
    std::cout << "metric = " << fmt17(metric) << '\n';
    return 0;
}

int cmd_negativity(const std::vector<double>& bloch) {
    const BlochVector n = bloch_from_flag(bloch);
    const DensityMatrix rho = bloch_to_density(n);
    const DensityMatrix joint =
        generate_joint_state(rho, plus_eigenstate(PauliAxis::z), cnot_in_basis(PauliAxis::z));
    const double from_matrix = negativity(joint);
    const double closed = negativity_closed_form(n);

    std::cout << "negativity_matrix = " << fmt17(from_matrix) << '\n';
    std::cout << "negativity_closed_form = " << fmt17(closed) << '\n';
    std::cout << "difference = " << fmt17(from_matrix - closed) << '\n';
    return 0;
}

int cmd_verify_relation(const std::vector<double>& shells, int dirs,
                        const std::string& axis_token, const std::string& out_path,
                        const std::string& summary_path) {
    const PauliAxis axis = axis_from_string(axis_token);
    const SweepReport report = sweep_bloch_ball(shells, dirs, axis);
    const auto coeffs = compare_coefficients(report);

    write_or_stdout(out_path, relation_csv(report));
    write_or_stdout(summary_path, relation_json(report, coeffs));

    const bool ok = report.direction_independent();
    std::cout << "shells=" << report.shells.size() << " dirs=" << dirs
              << " max_spread=" << fmt17(report.max_spread())
              << " direction_independent=" << (ok ? "yes" : "no") << '\n';
    return ok ? 0 : 3;
}

int cmd_monotonicity(int samples, std::uint64_t seed, const std::string& channels,
                     const std::string& out_path, const std::string& summary_path) {
    std::vector<std::string> fams;
    if (!channels.empty() && channels != "all") {
        std::string token;
        for (char c : channels + ",") {
            if (c == ',') {
                if (!token.empty()) fams.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
    }
    const double threshold = 1e-10;
    const MonotonicityReport report = monotonicity_scan(samples, seed, fams);

    if (!out_path.empty()) write_or_stdout(out_path, monotonicity_csv(report));
    if (!summary_path.empty()) write_or_stdout(summary_path, monotonicity_json(report, threshold));

    for (const auto& f : report.families)
        std::cout << "family=" << f.family << " samples=" << f.samples
                  << " skipped=" << f.skipped
                  << " max_violation_transformed=" << fmt17(f.max_violation_transformed)
                  << " max_violation_fixed=" << fmt17(f.max_violation_fixed)
                  << " max_negativity_violation=" << fmt17(f.max_negativity_violation) << '\n';
    const double worst = report.max_violation_transformed();
    const bool ok = worst <= threshold;
    std::cout << "max_violation_transformed=" << fmt17(worst)
              << " threshold=" << fmt17(threshold) << " => " << (ok ? "ok" : "VIOLATION")
              << '\n';
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit state-space geometry: monotone metrics, entanglement, channel scans"};
    app.require_subcommand(1);

    std::vector<double> bloch;
    std::string axis = "z";
    std::vector<double> shells = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    int dirs = 256;
    int samples = 500;
    std::uint64_t seed = 0;
    std::string channels = "all";
    std::string out_path;
    std::string summary_path;

    auto* metric = app.add_subcommand("metric", "Wigner-Yanase metric at one Bloch vector");
    metric->add_option("--bloch", bloch, "Bloch vector as nx,ny,nz")
        ->required()
        ->delimiter(',')
        ->expected(3);
    metric->add_option("--axis", axis, "observable axis: x, y or z (default z)")
        ->check(CLI::IsMember({"x", "y", "z"}));

    auto* neg = app.add_subcommand("negativity",
                                   "negativity of the joint state built by the z-basis pipeline");
    neg->add_option("--bloch", bloch, "Bloch vector as nx,ny,nz")
        ->required()
        ->delimiter(',')
        ->expected(3);

    auto* rel = app.add_subcommand("verify-relation",
                                   "sweep shells of the Bloch ball and fit negativity/sqrt(metric)");
    rel->add_option("--shells", shells, "comma-separated shell radii in (0,1)")->delimiter(',');
    rel->add_option("--dirs", dirs, "directions per shell (>= 8, default 256)");
    rel->add_option("--axis", axis, "observable axis: x, y or z (default z)")
        ->check(CLI::IsMember({"x", "y", "z"}));
    rel->add_option("--out", out_path, "CSV path (default: stdout)");
    rel->add_option("--summary", summary_path, "JSON summary path (default: stdout)");

    auto* mono = app.add_subcommand("monotonicity",
                                    "metric contractivity scan over channel families");
    mono->add_option("--samples", samples, "samples per family (default 500)");
    mono->add_option("--seed", seed, "RNG seed (default 0)");
    mono->add_option("--channels", channels,
                     "comma-separated families, or \"all\": identity, depolarizing, "
                     "amplitude_damping, phase_damping, random, unitary");
    mono->add_option("--out", out_path, "CSV path (default: none)");
    mono->add_option("--summary", summary_path, "JSON summary path (default: none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (metric->parsed()) return cmd_metric(bloch, axis);
        if (neg->parsed()) return cmd_negativity(bloch);
        if (rel->parsed()) return cmd_verify_relation(shells, dirs, axis, out_path, summary_path);
        if (mono->parsed()) return cmd_monotonicity(samples, seed, channels, out_path,
                                                    summary_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
