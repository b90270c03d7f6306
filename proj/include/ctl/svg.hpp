#pragma once

#include <complex>
#include <string>
#include <vector>

namespace ctl {

struct ScatterStyle {
    int width = 640;
    int height = 640;
    std::string title = "reduced lattice parameters";
};

/// Static SVG scatter of points in the upper half-plane with the boundary of
/// the fundamental domain (Re = ±1/2 and the unit arc) drawn in.
std::string fundamental_domain_scatter(const std::vector<std::complex<double>>& points,
                                       const ScatterStyle& style = {});

}  // namespace ctl
