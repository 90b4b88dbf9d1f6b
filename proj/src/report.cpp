#include <quadconc/report.hpp>

#include <quadconc/errors.hpp>

namespace quadconc {

Report run_instance(const Quadrilateral& quad, const std::variant<SideRatios, std::array<Point, 4>>& sides,
                    const std::vector<Claim>& claims)
{
    Report report;
    try {
        if (const auto* r = std::get_if<SideRatios>(&sides)) {
            report.configuration = build_from_ratios(quad, *r);
        } else {
            const auto& p = std::get<std::array<Point, 4>>(sides);
            report.configuration = build_from_points(quad, p[0], p[1], p[2], p[3]);
        }
    } catch (const GeometryError& err) {
        if (err.code() != ErrorCode::DegenerateQuadrilateral && err.code() != ErrorCode::UndefinedPoint) throw;
        report.construction_error = err.what();
        for (Claim claim : claims) {
            Verdict v;
            v.claim_id = std::string(claim_id(claim));
            v.status = Status::Degenerate;
            v.detail = err.what();
            report.verdicts.push_back(std::move(v));
        }
        return report;
    }
    for (Claim claim : claims) report.verdicts.push_back(verify(claim, *report.configuration));
    return report;
}

Report run_instance(const InstanceFile& instance)
{
    const auto& v = instance.vertices;
    return run_instance(Quadrilateral(v[0], v[1], v[2], v[3]), instance.sides, instance.claims());
}

nlohmann::ordered_json point_json(const std::optional<Point>& p)
{
    if (!p) return nullptr;
    const Point c = p->canonical();
    if (c.is_finite()) return nlohmann::ordered_json::array({c.x().str(), c.y().str()});
    return nlohmann::ordered_json::array({c.x().str(), c.y().str(), "0"});
}

nlohmann::ordered_json verdict_json(const Verdict& v)
{
    nlohmann::ordered_json j;
    j["claim"] = v.claim_id;
    j["status"] = std::string(to_string(v.status));
    j["detail"] = v.detail;
    auto witnesses = nlohmann::ordered_json::object();
    for (const auto& [label, p] : v.witnesses) witnesses[label] = point_json(p);
    j["witnesses"] = witnesses;
    auto values = nlohmann::ordered_json::object();
    for (const auto& [key, value] : v.exact_values) values[key] = value.str();
    j["values"] = values;
    return j;
}

nlohmann::ordered_json verdicts_json(const std::vector<Verdict>& verdicts)
{
    auto arr = nlohmann::ordered_json::array();
    for (const Verdict& v : verdicts) arr.push_back(verdict_json(v));
    return arr;
}

nlohmann::ordered_json report_json(const Report& report)
{
    nlohmann::ordered_json j;
    j["instance"] = report.instance;
    if (report.configuration) {
        const Configuration& cfg = *report.configuration;
        nlohmann::ordered_json c;
        c["shape"] = to_string(cfg.quad().shape());
        c["ratios"] = {{"m", cfg.ratios().m().str()},
                       {"n", cfg.ratios().n().str()},
                       {"p", cfg.ratios().p().str()},
                       {"q", cfg.ratios().q().str()}};
        c["gamma"] = cfg.ratios().gamma().str();
        c["r"] = cfg.r_ratio() ? nlohmann::ordered_json(cfg.r_ratio()->str()) : nlohmann::ordered_json(nullptr);
        c["degeneracies"] = nlohmann::ordered_json(std::vector<std::string>(cfg.degeneracies().begin(),
                                                                            cfg.degeneracies().end()));
        nlohmann::ordered_json points;
        for (std::size_t i = 0; i < kPointCount; ++i) {
            const auto id = static_cast<PointId>(i);
            points[std::string(name(id))] = point_json(cfg.get(id));
        }
        c["points"] = points;
        j["configuration"] = c;
    } else {
        j["configuration"] = nullptr;
        j["construction_error"] = report.construction_error;
    }
    j["verdicts"] = verdicts_json(report.verdicts);
    j["overall"] = std::string(to_string(report.overall()));
    return j;
}

} // namespace quadconc
