#include <quadconc/instance.hpp>

#include <quadconc/errors.hpp>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace quadconc {

InputError::InputError(const std::string& source, int line, int column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void error(const YAML::Node& node, const std::string& message) const
    {
        const YAML::Mark mark = node.Mark();
        if (mark.is_null()) throw InputError(source_, 1, 1, message);
        throw InputError(source_, mark.line + 1, mark.column + 1, message);
    }

    Rat rational(const YAML::Node& node, const std::string& what) const
    {
        if (!node.IsScalar()) error(node, what + ": expected a rational string");
        try {
            return Rat::parse(node.Scalar());
        } catch (const GeometryError& err) {
            error(node, what + ": " + err.what());
        }
    }

    Point point(const YAML::Node& node, const std::string& what) const
    {
        if (!node.IsSequence() || node.size() != 2) error(node, what + ": expected a pair [x, y]");
        return Point::finite(rational(node[0], what + ".x"), rational(node[1], what + ".y"));
    }

    /// Map with exactly the given keys.
    void require_keys(const YAML::Node& node, const std::string& what, std::initializer_list<const char*> keys) const
    {
        if (!node.IsMap()) error(node, what + ": expected a mapping");
        for (const auto& kv : node) {
            const std::string key = kv.first.Scalar();
            if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) == keys.end()) {
                error(kv.first, what + ": unknown key \"" + key + "\"");
            }
        }
        for (const char* k : keys) {
            if (!node[k]) error(node, what + ": missing key \"" + std::string(k) + "\"");
        }
    }

private:
    std::string source_;
};

nlohmann::ordered_json pair_json(const Point& p)
{
    const Point c = p.canonical();
    return nlohmann::ordered_json::array({c.x().str(), c.y().str()});
}

} // namespace

InstanceFile parse_instance(const std::string& text, const std::string& source)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& err) {
        throw InputError(source, err.mark.line + 1, err.mark.column + 1, err.msg);
    }
    Reader rd(source);
    if (!root.IsMap()) rd.error(root, "instance must be a mapping");
    for (const auto& kv : root) {
        const std::string key = kv.first.Scalar();
        if (key != "vertices" && key != "ratios" && key != "points" && key != "checks") {
            rd.error(kv.first, "unknown key \"" + key + "\"");
        }
    }
    if (!root["vertices"]) rd.error(root, "missing key \"vertices\"");
    const YAML::Node vertices = root["vertices"];
    rd.require_keys(vertices, "vertices", {"A", "B", "C", "D"});
    std::array<Point, 4> v{rd.point(vertices["A"], "A"), rd.point(vertices["B"], "B"), rd.point(vertices["C"], "C"),
                           rd.point(vertices["D"], "D")};
    ShapeClass shape = ShapeClass::Degenerate;
    try {
        shape = Quadrilateral(v[0], v[1], v[2], v[3]).shape();
    } catch (const GeometryError& err) {
        rd.error(vertices, std::string("vertices: ") + err.what());
    }
    const bool convex = shape == ShapeClass::Convex;

    const YAML::Node ratios = root["ratios"];
    const YAML::Node points = root["points"];
    if (ratios && points) rd.error(points, "exactly one of \"ratios\" and \"points\" may be given");
    if (!ratios && !points) rd.error(root, "one of \"ratios\" or \"points\" is required");

    std::variant<SideRatios, std::array<Point, 4>> sides = [&]() -> std::variant<SideRatios, std::array<Point, 4>> {
        if (ratios) {
            rd.require_keys(ratios, "ratios", {"m", "n", "p", "q"});
            const auto ratio = [&](const char* key) {
                Rat r = rd.rational(ratios[key], key);
                if (convex && r.sign() <= 0) rd.error(ratios[key], std::string(key) + ": must be positive");
                if (r.is_zero() || r == Rat(-1)) rd.error(ratios[key], std::string(key) + ": must not be 0 or -1");
                return r;
            };
            Rat m = ratio("m"), n = ratio("n"), p = ratio("p"), q = ratio("q");
            return SideRatios(std::move(m), std::move(n), std::move(p), std::move(q));
        }
        rd.require_keys(points, "points", {"M", "N", "P", "Q"});
        const auto side_point = [&](const char* key, int from) {
            const YAML::Node node = points[key];
            Point pt = rd.point(node, key);
            const Point& a = v[from];
            const Point& b = v[(from + 1) % 4];
            if (!collinear(a, pt, b)) rd.error(node, std::string(key) + ": not on its side line");
            if (pt == a || pt == b) rd.error(node, std::string(key) + ": at a vertex");
            if (convex && directed_ratio(a, pt, b).sign() <= 0) {
                rd.error(node, std::string(key) + ": outside the open side");
            }
            return pt;
        };
        Point m = side_point("M", 0), n = side_point("N", 1), p = side_point("P", 2), q = side_point("Q", 3);
        return std::array<Point, 4>{std::move(m), std::move(n), std::move(p), std::move(q)};
    }();

    std::optional<std::vector<Claim>> checks;
    if (const YAML::Node node = root["checks"]) {
        if (node.IsScalar()) {
            if (node.Scalar() != "all") rd.error(node, "checks: expected \"all\" or a list of claim ids");
        } else if (node.IsSequence()) {
            std::vector<Claim> list;
            for (const auto& item : node) {
                if (!item.IsScalar()) rd.error(item, "checks: expected a claim id");
                const auto claim = claim_from_id(item.Scalar());
                if (!claim) rd.error(item, "checks: unknown claim \"" + item.Scalar() + "\"");
                list.push_back(*claim);
            }
            checks = std::move(list);
        } else {
            rd.error(node, "checks: expected \"all\" or a list of claim ids");
        }
    }
    return InstanceFile{std::move(v), std::move(sides), std::move(checks)};
}

InstanceFile load_instance(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path, 1, 1, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), path);
}

std::string serialize_instance(const InstanceFile& instance)
{
    nlohmann::ordered_json j;
    j["vertices"] = {{"A", pair_json(instance.vertices[0])},
                     {"B", pair_json(instance.vertices[1])},
                     {"C", pair_json(instance.vertices[2])},
                     {"D", pair_json(instance.vertices[3])}};
    if (const auto* r = std::get_if<SideRatios>(&instance.sides)) {
        j["ratios"] = {{"m", r->m().str()}, {"n", r->n().str()}, {"p", r->p().str()}, {"q", r->q().str()}};
    } else {
        const auto& p = std::get<std::array<Point, 4>>(instance.sides);
        j["points"] = {{"M", pair_json(p[0])}, {"N", pair_json(p[1])}, {"P", pair_json(p[2])}, {"Q", pair_json(p[3])}};
    }
    if (instance.checks) {
        auto list = nlohmann::ordered_json::array();
        for (Claim c : *instance.checks) list.push_back(std::string(claim_id(c)));
        j["checks"] = list;
    } else {
        j["checks"] = "all";
    }
    return j.dump(2) + "\n";
}

} // namespace quadconc
