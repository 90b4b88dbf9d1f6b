#pragma once

#include <quadconc/configuration.hpp>
#include <quadconc/instance.hpp>
#include <quadconc/verifiers.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadconc {

/// Verification result for one instance. Reports serialize to JSON with every
/// number as an exact rational string.
struct Report {
    nlohmann::ordered_json instance;          // source file or generator coordinates
    std::optional<Configuration> configuration; // absent when construction failed
    std::string construction_error;           // why configuration is absent
    std::vector<Verdict> verdicts;

    Status overall() const { return overall_status(verdicts); }
};

/// Builds the configuration for an instance and runs the requested claims.
/// DegenerateQuadrilateral and UndefinedPoint during construction turn every
/// requested claim into a Degenerate verdict. Other construction errors
/// (invalid ratios, points off their sides) propagate.
Report run_instance(const Quadrilateral& quad, const std::variant<SideRatios, std::array<Point, 4>>& sides,
                    const std::vector<Claim>& claims);

/// Same, from a parsed instance file; vertex errors propagate as GeometryError.
Report run_instance(const InstanceFile& instance);

nlohmann::ordered_json point_json(const std::optional<Point>& p);
nlohmann::ordered_json verdict_json(const Verdict& v);
nlohmann::ordered_json verdicts_json(const std::vector<Verdict>& verdicts);
nlohmann::ordered_json report_json(const Report& report);

} // namespace quadconc
