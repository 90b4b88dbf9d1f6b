#include <quadconc/commands.hpp>

#include <quadconc/errors.hpp>
#include <quadconc/report.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

namespace quadconc {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kConvexValue = "M1N1P1Q1 convex";
constexpr const char* kLemma13Value = "lemma13 holds";

int exit_for(Status status) { return status == Status::Fail ? kExitClaimFailed : kExitOk; }

const Verdict* find_verdict(const std::vector<Verdict>& verdicts, Claim claim)
{
    for (const Verdict& v : verdicts) {
        if (v.claim_id == claim_id(claim)) return &v;
    }
    return nullptr;
}

// 0/1 finding recorded by the remarks verdict, if present.
std::optional<bool> remarks_finding(const std::vector<Verdict>& verdicts, const char* key)
{
    const Verdict* v = find_verdict(verdicts, Claim::Remarks);
    if (!v) return std::nullopt;
    const auto it = v->exact_values.find(key);
    if (it == v->exact_values.end()) return std::nullopt;
    return !it->second.is_zero();
}

InstanceFile instance_of(const Quadrilateral& quad, const SideRatios& ratios, std::vector<Claim> claims)
{
    return InstanceFile{{quad.A(), quad.B(), quad.C(), quad.D()}, ratios, std::move(claims)};
}

struct FuzzResult {
    json line;
    std::vector<Verdict> verdicts;
    bool exhausted = false;
    bool construction_degenerate = false;
    std::optional<InstanceFile> failing;
};

FuzzResult fuzz_one(const FuzzOptions& options, const GenSpec& spec, const std::vector<Claim>& claims,
                    std::uint64_t index)
{
    FuzzResult res;
    json meta;
    meta["seed"] = spec.seed;
    meta["index"] = index;
    meta["regime"] = to_string(options.regime);
    meta["shape"] = to_string(spec.shape);
    std::optional<Quadrilateral> quad;
    try {
        quad = gen_quadrilateral(spec, index);
    } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::GenerationExhausted) throw;
        res.exhausted = true;
        res.line["instance"] = meta;
        res.line["error"] = e.what();
        return res;
    }
    const SideRatios ratios = gen_ratios(spec, index);
    Report report = run_instance(*quad, ratios, claims);
    report.instance = meta;
    res.construction_degenerate = !report.configuration.has_value();
    if (report.overall() == Status::Fail) res.failing = instance_of(*quad, ratios, claims);
    res.line = report_json(report);
    res.verdicts = std::move(report.verdicts);
    return res;
}

} // namespace

std::string to_string(Regime regime)
{
    switch (regime) {
    case Regime::GammaOne: return "gamma1";
    case Regime::General: return "general";
    case Regime::Remarks: return "remarks";
    }
    return "unknown";
}

std::optional<Regime> regime_from_string(const std::string& text)
{
    for (auto r : {Regime::GammaOne, Regime::General, Regime::Remarks}) {
        if (to_string(r) == text) return r;
    }
    return std::nullopt;
}

std::vector<Claim> regime_claims(Regime regime)
{
    if (regime == Regime::Remarks) {
        return {Claim::SevenLines, Claim::TransversalExtension, Claim::GeneralConcurrences, Claim::Remarks};
    }
    return all_claims();
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
    try {
        InstanceFile instance = load_instance(options.path);
        if (!options.checks.empty()) {
            std::vector<Claim> claims;
            for (const auto& id : options.checks) {
                const auto claim = claim_from_id(id);
                if (!claim) {
                    err << "error: unknown claim \"" << id << "\"\n";
                    return kExitInputError;
                }
                claims.push_back(*claim);
            }
            instance.checks = std::move(claims);
        }
        Report report = run_instance(instance);
        report.instance = {{"source", options.path}};
        out << report_json(report).dump(2) << "\n";
        return exit_for(report.overall());
    } catch (const InputError& e) {
        err << e.what() << "\n";
        return kExitInputError;
    } catch (const GeometryError& e) {
        err << options.path << ": error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err)
{
    GenSpec spec = options.spec;
    if (options.regime == Regime::GammaOne) spec.force_gamma_one = true;
    if (options.count < 1) {
        err << "error: --count must be at least 1\n";
        return kExitInputError;
    }
    if (options.regime == Regime::Remarks && spec.shape == GenShape::Convex) {
        err << "error: the remarks regime needs --shape concave, crossed or any\n";
        return kExitInputError;
    }
    try {
        validate(spec);
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const std::vector<Claim> claims = regime_claims(options.regime);

    std::vector<FuzzResult> results(options.count);
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        for (std::uint64_t i = 0; i < options.count; ++i) results[i] = fuzz_one(options, spec, claims, i);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::uint64_t i = w; i < options.count; i += jobs) results[i] = fuzz_one(options, spec, claims, i);
            });
        }
    }

    json tallies = json::object();
    for (Claim c : claims) {
        tallies[std::string(claim_id(c))] = {{"pass", 0}, {"fail", 0}, {"degenerate", 0}, {"skipped", 0}};
    }
    std::uint64_t exhausted = 0, construction_degenerate = 0, nonconvex = 0, lemma13_fails = 0;
    json failures = json::array();
    for (std::uint64_t i = 0; i < options.count; ++i) {
        const FuzzResult& r = results[i];
        if (!options.summary_only) out << r.line.dump() << "\n";
        exhausted += r.exhausted;
        construction_degenerate += r.construction_degenerate;
        for (const Verdict& v : r.verdicts) {
            auto& slot = tallies[v.claim_id][std::string(to_string(v.status))];
            slot = slot.get<std::uint64_t>() + 1;
        }
        if (remarks_finding(r.verdicts, kConvexValue) == false) ++nonconvex;
        if (remarks_finding(r.verdicts, kLemma13Value) == false) ++lemma13_fails;
        if (r.failing) {
            const std::string text = serialize_instance(*r.failing);
            failures.push_back({{"index", i}, {"instance", json::parse(text)}});
            if (options.dump_dir) {
                std::filesystem::create_directories(*options.dump_dir);
                const auto path = std::filesystem::path(*options.dump_dir) /
                                  ("fuzz-" + std::to_string(spec.seed) + "-" + std::to_string(i) + ".json");
                std::ofstream(path, std::ios::binary) << text;
            }
        }
    }

    json summary;
    summary["regime"] = to_string(options.regime);
    summary["seed"] = spec.seed;
    summary["count"] = options.count;
    summary["shape"] = to_string(spec.shape);
    summary["coordinate_bound"] = spec.coordinate_bound;
    summary["ratio_bound"] = spec.ratio_bound;
    summary["force_gamma_one"] = spec.force_gamma_one;
    summary["generation_exhausted"] = exhausted;
    summary["construction_degenerate"] = construction_degenerate;
    summary["claims"] = tallies;
    if (options.regime == Regime::Remarks) {
        summary["findings"] = {{"quadruple_not_convex", nonconvex}, {"lemma13_unsigned_r_fails", lemma13_fails}};
    }
    summary["failures"] = failures;
    summary["overall"] = failures.empty() ? "pass" : "fail";
    out << json{{"summary", summary}}.dump() << "\n";
    return failures.empty() ? kExitOk : kExitClaimFailed;
}

const std::vector<std::string>& counterexample_targets()
{
    static const std::vector<std::string> targets{"proposition14_convexity", "lemma13", "seven_lines",
                                                  "transversal_extension", "general_concurrences"};
    return targets;
}

std::optional<Counterexample> find_counterexample(const CounterexampleOptions& options)
{
    if (options.shape == GenShape::Convex) {
        throw GeometryError(ErrorCode::InvalidSpec, "counterexamples are searched among concave or crossed shapes");
    }
    const auto& targets = counterexample_targets();
    if (std::find(targets.begin(), targets.end(), options.target) == targets.end()) {
        throw GeometryError(ErrorCode::InvalidSpec, "unknown target \"" + options.target + "\"");
    }
    GenSpec spec;
    spec.seed = options.seed;
    spec.shape = options.shape;
    spec.coordinate_bound = options.coordinate_bound;
    spec.ratio_bound = options.ratio_bound;
    spec.force_gamma_one = options.target == "seven_lines" || options.target == "transversal_extension";
    validate(spec);

    const bool remarks_target = options.target == "proposition14_convexity" || options.target == "lemma13";
    const std::vector<Claim> claims =
        remarks_target ? std::vector<Claim>{Claim::Remarks} : std::vector<Claim>{*claim_from_id(options.target)};

    for (std::uint64_t i = 0; i < options.budget; ++i) {
        std::optional<Quadrilateral> quad;
        try {
            quad = gen_quadrilateral(spec, i);
        } catch (const GeometryError& e) {
            if (e.code() != ErrorCode::GenerationExhausted) throw;
            continue;
        }
        const SideRatios ratios = gen_ratios(spec, i);
        const Report report = run_instance(*quad, ratios, claims);
        bool found = false;
        if (options.target == "proposition14_convexity") {
            found = remarks_finding(report.verdicts, kConvexValue) == false;
        } else if (options.target == "lemma13") {
            found = remarks_finding(report.verdicts, kLemma13Value) == false;
        } else {
            found = report.overall() == Status::Fail;
        }
        if (found) return Counterexample{i, instance_of(*quad, ratios, claims)};
    }
    return std::nullopt;
}

int cmd_counterexample(const CounterexampleOptions& options, std::ostream& out, std::ostream& err)
{
    std::optional<Counterexample> found;
    try {
        found = find_counterexample(options);
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    json j;
    j["target"] = options.target;
    j["shape"] = to_string(options.shape);
    j["seed"] = options.seed;
    j["budget"] = options.budget;
    j["found"] = found.has_value();
    if (found) {
        const std::string text = serialize_instance(found->instance);
        j["index"] = found->index;
        j["instance"] = json::parse(text);
        if (options.output) {
            std::ofstream file(*options.output, std::ios::binary);
            if (!file) {
                err << "error: cannot write " << *options.output << "\n";
                return kExitInputError;
            }
            file << text;
        }
    }
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_figure(const FigureOptions& options, std::ostream& out, std::ostream& err)
{
    std::string svg;
    try {
        const InstanceFile instance = load_instance(options.path);
        const auto& v = instance.vertices;
        const Quadrilateral quad(v[0], v[1], v[2], v[3]);
        Configuration cfg = [&] {
            if (const auto* r = std::get_if<SideRatios>(&instance.sides)) return build_from_ratios(quad, *r);
            const auto& p = std::get<std::array<Point, 4>>(instance.sides);
            return build_from_points(quad, p[0], p[1], p[2], p[3]);
        }();
        svg = render_svg(cfg, options.layers);
    } catch (const InputError& e) {
        err << e.what() << "\n";
        return kExitInputError;
    } catch (const GeometryError& e) {
        err << options.path << ": error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (options.output == "-") {
        out << svg;
        return kExitOk;
    }
    std::ofstream file(options.output, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << options.output << "\n";
        return kExitInputError;
    }
    file << svg;
    return kExitOk;
}

} // namespace quadconc
