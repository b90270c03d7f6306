#include "ctl/scene.hpp"

#include "ctl/error.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

namespace ctl {

using nlohmann::json;

namespace {

void only_keys(const json& obj, std::string_view what, std::initializer_list<std::string_view> allowed)
{
    if (!obj.is_object())
        fail(ErrorKind::InvalidInput, std::string(what) + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || key == a;
        if (!known)
            fail(ErrorKind::InvalidInput, "unknown key '" + key + "' in " + std::string(what));
    }
}

const json& required(const json& obj, const char* key, std::string_view what)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(ErrorKind::InvalidInput, std::string(what) + " is missing '" + key + "'");
    return *it;
}

double number(const json& v, std::string_view what)
{
    if (!v.is_number())
        fail(ErrorKind::InvalidInput, std::string(what) + " must be a number");
    return v.get<double>();
}

int integer(const json& v, std::string_view what)
{
    if (!v.is_number_integer())
        fail(ErrorKind::InvalidInput, std::string(what) + " must be an integer");
    return v.get<int>();
}

std::vector<double> numbers(const json& v, std::string_view what)
{
    if (!v.is_array())
        fail(ErrorKind::InvalidInput, std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v)
        out.push_back(number(e, what));
    return out;
}

std::array<double, 2> range(const json& v, std::string_view what)
{
    auto r = numbers(v, what);
    if (r.size() != 2 || !(r[0] <= r[1]))
        fail(ErrorKind::InvalidInput, std::string(what) + " must be [min, max] with min <= max");
    return {r[0], r[1]};
}

Polynomial parse_polynomial(const json& v, int dim, std::string_view what)
{
    if (!v.is_array())
        fail(ErrorKind::InvalidInput, std::string(what) + " must be an array of monomials");
    std::vector<Monomial> terms;
    for (const auto& m : v) {
        only_keys(m, what, {"exp", "coef"});
        Monomial mono;
        const auto& exps = required(m, "exp", what);
        if (!exps.is_array())
            fail(ErrorKind::InvalidInput, "monomial exponents must be an array");
        for (const auto& e : exps)
            mono.exponents.push_back(integer(e, "monomial exponent"));
        mono.coef = number(required(m, "coef", what), "monomial coefficient");
        terms.push_back(std::move(mono));
    }
    return Polynomial(dim, std::move(terms));
}

ConnectionSpec parse_connection(const json& v, BaseSpace space)
{
    const std::string type = required(v, "type", "connection").get<std::string>();
    if (type == "polynomial") {
        only_keys(v, "connection", {"type", "dim", "a", "b", "c"});
        const int dim = integer(required(v, "dim", "connection"), "connection dim");
        if (dim != 2 && dim != 3)
            fail(ErrorKind::InvalidInput, "polynomial connection dim must be 2 or 3");
        std::vector<Polynomial> comps;
        const char* names[] = {"a", "b", "c"};
        for (int i = 0; i < dim; ++i) {
            auto it = v.find(names[i]);
            comps.push_back(it == v.end() ? Polynomial(dim, {})
                                          : parse_polynomial(*it, dim, std::string("component ") + names[i]));
        }
        if (dim == 2 && v.contains("c"))
            fail(ErrorKind::InvalidInput, "planar connection has no 'c' component");
        return {space, PolynomialPotential(std::move(comps))};
    }
    if (type == "hopf") {
        only_keys(v, "connection", {"type", "k"});
        int k = v.contains("k") ? integer(v["k"], "hopf k") : 1;
        return {space, HopfConnection{k}};
    }
    fail(ErrorKind::InvalidInput, "unknown connection type '" + type + "'");
}

JordanCurve parse_curve(const json& v)
{
    const std::string type = required(v, "type", "curve").get<std::string>();
    JordanCurve curve;
    if (type == "circle") {
        only_keys(v, "curve", {"type", "center", "radius", "reversed"});
        auto c = numbers(required(v, "center", "circle"), "circle center");
        if (c.size() != 2)
            fail(ErrorKind::InvalidInput, "circle center must have two coordinates");
        curve.shape = Circle{{c[0], c[1]}, number(required(v, "radius", "circle"), "circle radius")};
    } else if (type == "trigloop") {
        only_keys(v, "curve", {"type", "xc", "xs", "yc", "ys", "reversed"});
        TrigLoop l;
        auto get = [&](const char* key) {
            return v.contains(key) ? numbers(v[key], std::string("trigloop ") + key) : std::vector<double>{};
        };
        l.xc = get("xc");
        l.xs = get("xs");
        l.yc = get("yc");
        l.ys = get("ys");
        curve.shape = std::move(l);
    } else if (type == "latitude") {
        only_keys(v, "curve", {"type", "theta0", "reversed"});
        curve.shape = Latitude{number(required(v, "theta0", "latitude"), "theta0")};
    } else if (type == "wavy") {
        only_keys(v, "curve", {"type", "theta0", "eps", "mode", "reversed"});
        WavyLatitude w;
        w.theta0 = number(required(v, "theta0", "wavy"), "theta0");
        w.eps = number(required(v, "eps", "wavy"), "eps");
        w.mode = v.contains("mode") ? integer(v["mode"], "mode") : 5;
        curve.shape = w;
    } else {
        fail(ErrorKind::InvalidInput, "unknown curve type '" + type + "'");
    }
    if (v.contains("reversed")) {
        if (!v["reversed"].is_boolean())
            fail(ErrorKind::InvalidInput, "'reversed' must be a boolean");
        curve.reversed = v["reversed"].get<bool>();
    }
    validate(curve);
    return curve;
}

CurveFamily parse_family(const json& v)
{
    const std::string type = required(v, "type", "family").get<std::string>();
    if (type == "circle") {
        only_keys(v, "family", {"type", "radius", "center"});
        CircleFamily f;
        if (v.contains("radius")) {
            auto r = range(v["radius"], "radius");
            f.radius_min = r[0];
            f.radius_max = r[1];
        }
        if (v.contains("center")) {
            auto c = range(v["center"], "center");
            f.center_min = c[0];
            f.center_max = c[1];
        }
        if (!(f.radius_min >= 0.0 && f.radius_max > 0.0))
            fail(ErrorKind::InvalidInput, "circle family radii must be positive");
        return f;
    }
    if (type == "trigloop") {
        only_keys(v, "family", {"type", "harmonics", "radius", "perturbation"});
        TrigLoopFamily f;
        if (v.contains("harmonics"))
            f.harmonics = integer(v["harmonics"], "harmonics");
        if (v.contains("radius")) {
            auto r = range(v["radius"], "radius");
            f.radius_min = r[0];
            f.radius_max = r[1];
        }
        if (v.contains("perturbation"))
            f.perturbation = number(v["perturbation"], "perturbation");
        if (f.harmonics < 1 || f.harmonics > 32 || !(f.radius_min > 0.0) || !(f.perturbation >= 0.0))
            fail(ErrorKind::InvalidInput, "trigloop family parameters out of range");
        return f;
    }
    if (type == "latitude") {
        only_keys(v, "family", {"type", "theta0"});
        LatitudeFamily f;
        if (v.contains("theta0")) {
            auto r = range(v["theta0"], "theta0");
            f.theta_min = r[0];
            f.theta_max = r[1];
        }
        if (!(f.theta_min > 0.0 && f.theta_max < std::numbers::pi))
            fail(ErrorKind::InvalidInput, "latitude family theta0 must lie in (0, pi)");
        return f;
    }
    if (type == "wavy") {
        only_keys(v, "family", {"type", "theta0", "eps_max", "mode"});
        WavyFamily f;
        if (v.contains("theta0")) {
            auto r = range(v["theta0"], "theta0");
            f.theta_min = r[0];
            f.theta_max = r[1];
        }
        if (v.contains("eps_max"))
            f.eps_max = number(v["eps_max"], "eps_max");
        if (v.contains("mode"))
            f.mode = integer(v["mode"], "mode");
        if (!(f.theta_min > 0.0 && f.theta_max < std::numbers::pi) || !(f.eps_max >= 0.0) || f.mode < 1)
            fail(ErrorKind::InvalidInput, "wavy family parameters out of range");
        return f;
    }
    fail(ErrorKind::InvalidInput, "unknown family type '" + type + "'");
}

SceneOptions parse_options(const json& root)
{
    SceneOptions opts;
    auto it = root.find("options");
    if (it == root.end())
        return opts;
    only_keys(*it, "options", {"tol", "samples"});
    if (it->contains("tol"))
        opts.tol = number((*it)["tol"], "tol");
    if (it->contains("samples"))
        opts.samples = integer((*it)["samples"], "samples");
    if (!(opts.tol > 0.0))
        fail(ErrorKind::InvalidInput, "tol must be positive");
    if (opts.samples < 64)
        fail(ErrorKind::InvalidInput, "samples must be at least 64");
    return opts;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed scene: ") + e.what());
    }
}

template <class F>
auto with_json_errors(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("scene schema error: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InvalidInput, "cannot read scene file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

BaseSpace parse_base_space(std::string_view name)
{
    if (name == "plane") return BaseSpace::EuclideanPlane;
    if (name == "space3") return BaseSpace::EuclideanSpace3;
    if (name == "sphere") return BaseSpace::UnitSphere;
    fail(ErrorKind::InvalidInput, "unknown space '" + std::string(name) + "'");
}

std::string_view to_string(BaseSpace space)
{
    switch (space) {
    case BaseSpace::EuclideanPlane: return "plane";
    case BaseSpace::EuclideanSpace3: return "space3";
    case BaseSpace::UnitSphere: return "sphere";
    }
    return "plane";
}

Scene parse_scene(std::string_view text)
{
    const json root = parse_json(text);
    return with_json_errors([&] {
        only_keys(root, "scene", {"space", "connection", "curve", "options"});
        const BaseSpace space = parse_base_space(required(root, "space", "scene").get<std::string>());
        ConnectionSpec conn = parse_connection(required(root, "connection", "scene"), space);
        JordanCurve curve = parse_curve(required(root, "curve", "scene"));
        if (space == BaseSpace::EuclideanPlane && curve.surface() != Surface::Plane)
            fail(ErrorKind::InvalidInput, "planar scene needs a planar curve");
        if (space == BaseSpace::UnitSphere && curve.surface() != Surface::Sphere)
            fail(ErrorKind::InvalidInput, "sphere scene needs a spherical curve");
        return Scene{std::move(conn), std::move(curve), parse_options(root)};
    });
}

FamilyScene parse_family_scene(std::string_view text)
{
    const json root = parse_json(text);
    return with_json_errors([&] {
        only_keys(root, "scene", {"space", "connection", "family", "options"});
        const BaseSpace space = parse_base_space(required(root, "space", "scene").get<std::string>());
        ConnectionSpec conn = parse_connection(required(root, "connection", "scene"), space);
        CurveFamily family = parse_family(required(root, "family", "scene"));
        const bool planar_family =
            std::holds_alternative<CircleFamily>(family) || std::holds_alternative<TrigLoopFamily>(family);
        if ((space == BaseSpace::UnitSphere) == planar_family)
            fail(ErrorKind::InvalidInput, "curve family does not live on the scene's space");
        return FamilyScene{std::move(conn), std::move(family), parse_options(root)};
    });
}

Scene load_scene(const std::filesystem::path& path)
{
    return parse_scene(read_file(path));
}

FamilyScene load_family_scene(const std::filesystem::path& path)
{
    return parse_family_scene(read_file(path));
}

std::string connection_fragment(const ConnectionSpec& conn)
{
    json out;
    if (conn.is_hopf()) {
        out["type"] = "hopf";
        out["k"] = conn.hopf().tensor_power;
        return out.dump();
    }
    const auto& pot = conn.potential();
    out["type"] = "polynomial";
    out["dim"] = pot.dim();
    const char* names[] = {"a", "b", "c"};
    for (int i = 0; i < pot.dim(); ++i) {
        json terms = json::array();
        for (const auto& m : pot.component(i).terms())
            terms.push_back({{"exp", m.exponents}, {"coef", m.coef}});
        out[names[i]] = terms;
    }
    return out.dump();
}

std::string curve_fragment(const JordanCurve& curve)
{
    json out = std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>)
                return {{"type", "circle"}, {"center", {s.center[0], s.center[1]}}, {"radius", s.radius}};
            else if constexpr (std::is_same_v<T, TrigLoop>)
                return {{"type", "trigloop"}, {"xc", s.xc}, {"xs", s.xs}, {"yc", s.yc}, {"ys", s.ys}};
            else if constexpr (std::is_same_v<T, Latitude>)
                return {{"type", "latitude"}, {"theta0", s.theta0}};
            else
                return {{"type", "wavy"}, {"theta0", s.theta0}, {"eps", s.eps}, {"mode", s.mode}};
        },
        curve.shape);
    if (curve.reversed)
        out["reversed"] = true;
    return out.dump();
}

}  // namespace ctl
