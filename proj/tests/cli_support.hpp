#pragma once

// Runs the ctl binary and compares its output with golden files. Numeric
// fields are compared to 1e-9 relative, everything else byte for byte.

#include "ctl/complex_format.hpp"
#include "ctl/records.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace ctl::testkit {

struct CliRun {
    std::string out;
    int exit_code = -1;
};

/// Runs from the golden directory so scene paths echo as relative paths.
inline CliRun run_ctl(const std::string& args)
{
    std::string cmd = "cd '" CTL_GOLDEN_DIR "' && '" CTL_BINARY "' " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

inline bool field_matches(const std::string& got, const std::string& want)
{
    if (got == want)
        return true;
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * (1 + std::abs(b)); };
    try {
        return close(parse_real(got), parse_real(want));
    } catch (...) {
    }
    try {
        auto g = parse_complex(got), w = parse_complex(want);
        return close(g.real(), w.real()) && close(g.imag(), w.imag());
    } catch (...) {
    }
    return false;
}

/// Empty string on a match, otherwise a description of the first mismatch.
inline std::string golden_mismatch(const std::string& got, const std::string& golden_name)
{
    const std::string want = read_file(std::filesystem::path(CTL_GOLDEN_DIR) / "expected" / golden_name);
    auto g = split_lines(got), w = split_lines(want);
    if (g.size() != w.size())
        return golden_name + ": " + std::to_string(g.size()) + " lines, expected " + std::to_string(w.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto gf = split_csv_line(g[i]), wf = split_csv_line(w[i]);
        if (gf.size() != wf.size())
            return golden_name + ": line " + std::to_string(i) + " has a different field count";
        for (std::size_t k = 0; k < gf.size(); ++k)
            if (!field_matches(gf[k], wf[k]))
                return golden_name + ": line " + std::to_string(i) + " field " + std::to_string(k) + " is " +
                       gf[k] + ", expected " + wf[k];
    }
    return {};
}

struct GoldenCase {
    const char* name;
    const char* args;
    int exit_code;
};

inline const std::vector<GoldenCase>& golden_cases()
{
    static const std::vector<GoldenCase> cases{
        {"holonomy_example3", "holonomy --scene scenes/example3_circle.json", 0},
        {"holonomy_constant", "holonomy --scene scenes/constant_circle.json", 0},
        {"holonomy_hopf_equator", "holonomy --scene scenes/hopf_equator.json --mode flux", 0},
        {"tau_constant", "tau --scene scenes/constant_circle.json", 0},
        {"tau_hopf_equator", "tau --scene scenes/hopf_equator.json", 0},
        {"tau_example3_origin", "tau --scene scenes/example3_origin.json", 0},
        {"reduce_generic", "reduce --tau 2.3+0.8i", 0},
        {"jinv_i", "jinv --tau 0+1i", 0},
        {"reduce_inversion", "reduce --tau 0+0.5i", 0},
        {"solve_example3", "solve --target=-2+1i --connection example3", 0},
        {"solve_hopf_axis", "solve --target 0+1.2i --connection hopf --k 1", 2},
        {"solve_hopf_equator", "solve --target=-0.5+1i --connection hopf --k 1", 0},
        {"sample_latitudes", "sample --scene scenes/hopf_latitudes.json --n 8 --seed 3", 0},
    };
    return cases;
}

}  // namespace ctl::testkit
