#include "ctl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace ctl {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Data window → pixel viewport, y flipped.
struct Frame {
    double x_min, x_max, y_min, y_max;
    double left, top, w, h;

    double px(double x) const { return left + (x - x_min) / (x_max - x_min) * w; }
    double py(double y) const { return top + h - (y - y_min) / (y_max - y_min) * h; }
};

}  // namespace

std::string fundamental_domain_scatter(const std::vector<std::complex<double>>& points,
                                       const ScatterStyle& style)
{
    double x_max = 1.0;
    double y_max = 2.0;
    for (const auto& z : points) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            continue;
        x_max = std::max(x_max, std::abs(z.real()) * 1.1);
        y_max = std::max(y_max, z.imag() * 1.1);
    }
    const double margin = 50.0;
    Frame f{-x_max, x_max, 0.0, y_max, margin, margin, style.width - 2 * margin, style.height - 2 * margin};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
        << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(style.width / 2.0) << "\" y=\"" << num(margin / 2.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(style.title) << "</text>\n";

    // axes
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << num(f.px(f.x_min)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(f.x_max))
        << "\" y2=\"" << num(f.py(0)) << "\"/>\n";
    svg << "<line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(0))
        << "\" y2=\"" << num(f.py(f.y_max)) << "\"/>\n";
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0})
        if (std::abs(x) <= f.x_max)
            svg << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.py(0) + 15) << "\">" << x << "</text>\n";
    for (int y = 1; y <= static_cast<int>(f.y_max); ++y)
        svg << "<text x=\"" << num(f.px(f.x_min) - 15) << "\" y=\"" << num(f.py(y) + 4) << "\">" << y
            << "</text>\n";
    svg << "<text x=\"" << num(f.px(f.x_max) - 10) << "\" y=\"" << num(f.py(0) + 30) << "\">Re</text>\n";
    svg << "<text x=\"" << num(f.px(0) + 15) << "\" y=\"" << num(f.py(f.y_max) - 5) << "\">Im</text>\n";
    svg << "</g>\n";

    // fundamental domain boundary
    const double arc_y = std::sqrt(3.0) / 2.0;
    svg << "<g fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\">\n";
    for (double x : {-0.5, 0.5})
        svg << "<line x1=\"" << num(f.px(x)) << "\" y1=\"" << num(f.py(arc_y)) << "\" x2=\"" << num(f.px(x))
            << "\" y2=\"" << num(f.py(f.y_max)) << "\"/>\n";
    svg << "<polyline points=\"";
    constexpr int arc_segments = 64;
    for (int i = 0; i <= arc_segments; ++i) {
        double angle = std::numbers::pi / 3.0 + (std::numbers::pi / 3.0) * i / arc_segments;
        svg << num(f.px(std::cos(angle))) << ',' << num(f.py(std::sin(angle))) << (i < arc_segments ? " " : "");
    }
    svg << "\"/>\n</g>\n";

    svg << "<g fill=\"#d62728\" fill-opacity=\"0.7\">\n";
    for (const auto& z : points) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            continue;
        svg << "<circle cx=\"" << num(f.px(z.real())) << "\" cy=\"" << num(f.py(z.imag())) << "\" r=\"2.5\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace ctl
