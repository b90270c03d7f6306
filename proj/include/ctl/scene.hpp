#pragma once

#include "ctl/connections.hpp"
#include "ctl/curves.hpp"
#include "ctl/inverse.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ctl {

struct SceneOptions {
    double tol = 1e-10;
    int samples = 256;  // chord count of the simplicity check
};

/// One connection/curve pair:
///   {"space": "plane", "connection": {...}, "curve": {...}, "options": {"tol": 1e-10}}
struct Scene {
    ConnectionSpec connection;
    JordanCurve curve;
    SceneOptions options;
};

/// A connection with a curve family, for coverage sampling:
///   {"space": "sphere", "connection": {...}, "family": {...}, "options": {...}}
struct FamilyScene {
    ConnectionSpec connection;
    CurveFamily family;
    SceneOptions options;
};

// Parsers throw InvalidInput on malformed JSON, schema violations or unknown keys.
Scene parse_scene(std::string_view text);
FamilyScene parse_family_scene(std::string_view text);
Scene load_scene(const std::filesystem::path& path);
FamilyScene load_family_scene(const std::filesystem::path& path);

BaseSpace parse_base_space(std::string_view name);
std::string_view to_string(BaseSpace space);

std::string connection_fragment(const ConnectionSpec& conn);
std::string curve_fragment(const JordanCurve& curve);

}  // namespace ctl
