// ctl: holonomy tori from connections and Jordan curves.
//
//   ctl holonomy --scene PATH [--mode lift|flux|both] [--tol FLOAT]
//   ctl tau      --scene PATH [--tol FLOAT]
//   ctl reduce   --tau STR
//   ctl jinv     --tau STR [--terms INT]
//   ctl solve    --target STR --connection example3|hopf [--k INT] [--tol FLOAT]
//   ctl sample   --scene PATH --n INT --seed INT [--out PATH] [--svg PATH]
//
// Exit status: 0 success, 1 invalid input, 2 infeasible target, 3 numerical failure.

#include "ctl/complex_format.hpp"
#include "ctl/error.hpp"
#include "ctl/holonomy.hpp"
#include "ctl/inverse.hpp"
#include "ctl/moduli.hpp"
#include "ctl/records.hpp"
#include "ctl/scene.hpp"
#include "ctl/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

enum ExitCode { Ok = 0, BadInput = 1, InfeasibleTarget = 2, NumericalFailure = 3 };

int exit_code_for(ctl::ErrorKind kind)
{
    using ctl::ErrorKind;
    switch (kind) {
    case ErrorKind::Infeasible:
    case ErrorKind::NotExactlyReachable:
        return InfeasibleTarget;
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::CrossCheckFailure:
        return NumericalFailure;
    default:
        return BadInput;
    }
}

class Stopwatch {
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Timing goes to stderr so standard output stays deterministic.
void emit(const ctl::RunRecord& rec, const Stopwatch& clock)
{
    std::cout << ctl::run_record_header() << '\n' << ctl::run_record_row(rec) << '\n';
    std::cerr << "elapsed_ms=" << clock.elapsed_ms() << '\n';
}

void check_simple_for_flux(const ctl::Scene& scene, ctl::HolonomyMethod mode)
{
    if (mode != ctl::HolonomyMethod::Lift && !ctl::is_simple(scene.curve, scene.options.samples))
        ctl::fail(ctl::ErrorKind::NotSimpleCurve, "curve self-intersects; the flux method needs a Jordan curve");
}

int cmd_holonomy(const std::string& path, const std::optional<std::string>& mode_flag, std::optional<double> tol_flag)
{
    Stopwatch clock;
    const ctl::Scene scene = ctl::load_scene(path);
    const double tol = tol_flag.value_or(scene.options.tol);
    const auto mode = mode_flag ? ctl::parse_holonomy_method(*mode_flag) : ctl::default_method(scene.connection);
    check_simple_for_flux(scene, mode);
    const auto h = ctl::holonomy(scene.connection, scene.curve, tol, mode);

    ctl::RunRecord rec;
    rec.command = "holonomy";
    rec.scene = path;
    rec.mode = std::string(ctl::to_string(mode));
    rec.tol = tol;
    rec.alpha = h.alpha;
    rec.alpha_lift = h.alpha_lift;
    rec.alpha_flux = h.alpha_flux;
    if (mode == ctl::HolonomyMethod::Both)
        rec.discrepancy = h.discrepancy;
    rec.length = h.length;
    emit(rec, clock);
    return Ok;
}

int cmd_tau(const std::string& path, std::optional<double> tol_flag)
{
    Stopwatch clock;
    const ctl::Scene scene = ctl::load_scene(path);
    const double tol = tol_flag.value_or(scene.options.tol);
    const auto mode = ctl::default_method(scene.connection);
    check_simple_for_flux(scene, mode);
    const auto mp = ctl::moduli_point(scene.connection, scene.curve, tol);

    ctl::RunRecord rec;
    rec.command = "tau";
    rec.scene = path;
    rec.mode = std::string(ctl::to_string(mode));
    rec.tol = tol;
    rec.alpha = mp.holonomy.alpha;
    rec.alpha_lift = mp.holonomy.alpha_lift;
    rec.alpha_flux = mp.holonomy.alpha_flux;
    if (mode == ctl::HolonomyMethod::Both)
        rec.discrepancy = mp.holonomy.discrepancy;
    rec.length = mp.holonomy.length;
    rec.tau = mp.tau;
    rec.tau_reduced = mp.tau_reduced;
    rec.j = mp.j;
    emit(rec, clock);
    return Ok;
}

int cmd_reduce(const std::string& text)
{
    const auto red = ctl::reduce_to_fundamental_domain(ctl::parse_complex(text));
    const auto& m = red.matrix;
    std::cout << ctl::format_complex_display(red.tau) << '\n'
              << "matrix [[" << m.p << ',' << m.q << "],[" << m.r << ',' << m.s << "]]\n";
    return Ok;
}

int cmd_jinv(const std::string& text, int terms)
{
    std::cout << ctl::format_complex(ctl::j_invariant(ctl::parse_complex(text), terms)) << '\n';
    return Ok;
}

int cmd_solve(const std::string& target_text, const std::string& connection, int k, double tol)
{
    const ctl::SolveTarget target{ctl::parse_complex(target_text), tol};
    ctl::JordanCurve curve;
    if (connection == "example3")
        curve = ctl::solve_plane_example3(target);
    else if (connection == "hopf")
        curve = ctl::solve_sphere_hopf(target, k);
    else
        ctl::fail(ctl::ErrorKind::Unsupported, "no curve synthesis for connection '" + connection +
                                                   "' (supported: example3, hopf)");
    std::cout << ctl::curve_fragment(curve) << '\n';
    return Ok;
}

int cmd_sample(const std::string& path, int n, std::uint64_t seed, const std::optional<std::string>& out,
               const std::optional<std::string>& svg_path)
{
    Stopwatch clock;
    const ctl::FamilyScene scene = ctl::load_family_scene(path);
    const auto report = ctl::coverage_sample(scene.connection, scene.family, n, seed, scene.options.tol);
    const std::string csv = ctl::coverage_csv(report);

    if (out) {
        std::ofstream file(*out, std::ios::binary);
        if (!file || !(file << csv) || !file.flush())
            ctl::fail(ctl::ErrorKind::InvalidInput, "cannot write " + *out);
    } else {
        std::cout << csv;
    }
    if (svg_path) {
        std::vector<std::complex<double>> points;
        for (const auto& rec : report.records)
            if (rec.ok())
                points.push_back(rec.tau_reduced);
        std::ofstream file(*svg_path, std::ios::binary);
        if (!file || !(file << ctl::fundamental_domain_scatter(points)) || !file.flush())
            ctl::fail(ctl::ErrorKind::InvalidInput, "cannot write " + *svg_path);
    }
    std::cerr << "samples=" << report.records.size() << " skipped=" << report.skipped
              << " in_domain=" << report.in_domain << " elapsed_ms=" << clock.elapsed_ms() << '\n';
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Complex tori from circle-bundle connections and Jordan curves", "ctl"};
    app.require_subcommand(1);

    std::string scene_path, tau_text, target_text, connection = "example3";
    std::optional<std::string> mode, out, svg;
    std::optional<double> tol;
    int terms = 64, k = 1, n = 100;
    std::uint64_t seed = 1;

    auto* holonomy = app.add_subcommand("holonomy", "holonomy angle and curve length for a scene");
    holonomy->add_option("--scene", scene_path, "scene file")->required();
    holonomy->add_option("--mode", mode, "lift, flux or both")->check(CLI::IsMember({"lift", "flux", "both"}));
    holonomy->add_option("--tol", tol, "absolute integration tolerance");

    auto* tau = app.add_subcommand("tau", "lattice parameter, its reduction and j for a scene");
    tau->add_option("--scene", scene_path, "scene file")->required();
    tau->add_option("--tol", tol, "absolute integration tolerance");

    auto* reduce = app.add_subcommand("reduce", "reduce tau into the fundamental domain");
    reduce->add_option("--tau", tau_text, "a+bi")->required();

    auto* jinv = app.add_subcommand("jinv", "j-invariant of tau");
    jinv->add_option("--tau", tau_text, "a+bi")->required();
    jinv->add_option("--terms", terms, "q-series terms (>= 16)");

    auto* solve = app.add_subcommand("solve", "synthesize a curve realising a target tau");
    solve->add_option("--target", target_text, "a+bi")->required();
    solve->add_option("--connection", connection, "example2|example3|constant|hopf|custom")
        ->check(CLI::IsMember({"example2", "example3", "constant", "hopf", "custom"}));
    solve->add_option("--k", k, "Hopf tensor power");
    solve->add_option("--tol", tol, "round-trip tolerance on tau");

    auto* sample = app.add_subcommand("sample", "moduli coverage of a curve family");
    sample->add_option("--scene", scene_path, "family scene file")->required();
    sample->add_option("--n", n, "number of curves");
    sample->add_option("--seed", seed, "random seed");
    sample->add_option("--out", out, "CSV output path (default: stdout)");
    sample->add_option("--svg", svg, "SVG scatter output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        if (*holonomy)
            return cmd_holonomy(scene_path, mode, tol);
        if (*tau)
            return cmd_tau(scene_path, tol);
        if (*reduce)
            return cmd_reduce(tau_text);
        if (*jinv)
            return cmd_jinv(tau_text, terms);
        if (*solve)
            return cmd_solve(target_text, connection, k, tol.value_or(1e-6));
        if (*sample)
            return cmd_sample(scene_path, n, seed, out, svg);
    } catch (const ctl::Error& e) {
        std::cerr << "ctl: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "ctl: " << e.what() << '\n';
        return NumericalFailure;
    }
    return BadInput;
}
