#include "test_support.hpp"

#include <quadconc/commands.hpp>
#include <quadconc/errors.hpp>
#include <quadconc/report.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace quadconc;
using namespace quadconc::testing;
using json = nlohmann::ordered_json;

namespace {

const char* kSquareHeader = "vertices: {A: [\"0\", \"0\"], B: [\"1\", \"0\"], C: [\"1\", \"1\"], D: [\"0\", \"1\"]}\n";

std::string square_with(const std::string& rest) { return kSquareHeader + rest; }

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("quadconc-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter()
    {
        static int n = 0;
        return n;
    }
    std::string write(const std::string& name, const std::string& text) const
    {
        const auto p = path / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int input_error_line(const std::string& text)
{
    try {
        parse_instance(text, "t.yaml");
    } catch (const InputError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_SUITE("instance files") {

TEST_CASE("ratios instance")
{
    const InstanceFile f = parse_instance(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"2\"}\nchecks: all\n"));
    CHECK(f.vertices[2] == F("1", "1"));
    REQUIRE(std::holds_alternative<SideRatios>(f.sides));
    CHECK(std::get<SideRatios>(f.sides) == ratios("1", "1", "1", "2"));
    CHECK_FALSE(f.checks.has_value());
    CHECK(f.claims() == all_claims());
}

TEST_CASE("points instance and claim list")
{
    const InstanceFile f = parse_instance(square_with(
        "points: {M: [\"1/2\", \"0\"], N: [\"1\", \"1/2\"], P: [\"1/2\", \"1\"], Q: [\"0\", \"1/2\"]}\n"
        "checks: [seven_lines, lemma13]\n"));
    REQUIRE(std::holds_alternative<std::array<Point, 4>>(f.sides));
    CHECK(std::get<std::array<Point, 4>>(f.sides)[3] == F("0", "1/2"));
    CHECK(f.claims() == std::vector<Claim>{Claim::SevenLines, Claim::Lemma13});
}

TEST_CASE("JSON documents parse too")
{
    const InstanceFile f = parse_instance(R"({"vertices": {"A": ["0","0"], "B": ["1","0"], "C": ["1","1"], "D": ["0","1"]},
 "ratios": {"m": "2", "n": "1", "p": "1/2", "q": "1"}})");
    CHECK(std::get<SideRatios>(f.sides).gamma_is_one());
}

TEST_CASE("decimal literals are rejected with a position")
{
    const std::string text = square_with("ratios: {m: \"0.5\", n: \"1\", p: \"1\", q: \"1\"}\n");
    try {
        parse_instance(text, "bad.yaml");
        FAIL("accepted a decimal");
    } catch (const InputError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 13);
        CHECK(std::string(e.what()).rfind("bad.yaml:2:13:", 0) == 0);
    }
    // Unquoted numbers are still scalars and get the same treatment.
    CHECK(input_error_line(square_with("ratios: {m: 0.5, n: 1, p: 1, q: 1}\n")) == 2);
}

TEST_CASE("structural errors carry positions")
{
    CHECK(input_error_line(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\"}\n")) == 2);
    CHECK(input_error_line(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\n"
                                       "points: {M: [\"1/2\", \"0\"], N: [\"1\", \"1/2\"], P: [\"1/2\", \"1\"], "
                                       "Q: [\"0\", \"1/2\"]}\n")) == 3);
    CHECK(input_error_line(kSquareHeader) == 1);
    CHECK(input_error_line(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\nextra: 1\n")) == 3);
    CHECK(input_error_line(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\nchecks: [nope]\n")) == 3);
    CHECK(input_error_line(square_with("ratios: {m: \"-1/2\", n: \"1\", p: \"1\", q: \"1\"}\n")) == 2);
    CHECK(input_error_line(square_with("points: {M: [\"1/2\", \"1/100\"], N: [\"1\", \"1/2\"], P: [\"1/2\", \"1\"], "
                                       "Q: [\"0\", \"1/2\"]}\n")) == 2);
    CHECK(input_error_line("vertices: {A: [\"0\", \"0\"], B: [\"0\", \"0\"], C: [\"1\", \"1\"], D: [\"0\", \"1\"]}\n"
                           "ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\n") == 1);
    CHECK(input_error_line("vertices: [unclosed\n") >= 1);
}

TEST_CASE("serialization round trips huge rationals")
{
    const std::string big = "1" + std::string(50, '0');
    const std::string bigger = "-" + std::string(50, '9') + "7/" + big + "1";
    InstanceFile f{{F(bigger.c_str(), "0"), F(big.c_str(), "1/3"), F("1", big.c_str()), F("0", "1")},
                   ratios(("1/" + big).c_str(), big.c_str(), "3/7", ("12345678901234567890123456789012345678901234567890/" + big + "3").c_str()),
                   std::vector<Claim>{Claim::Remarks}};
    const std::string text = serialize_instance(f);
    const InstanceFile back = parse_instance(text);
    for (int k = 0; k < 4; ++k) CHECK(back.vertices[k] == f.vertices[k]);
    CHECK(std::get<SideRatios>(back.sides) == std::get<SideRatios>(f.sides));
    CHECK(back.checks == f.checks);
    CHECK(serialize_instance(back) == text);
    CHECK(text.find(bigger) != std::string::npos);
}

} // TEST_SUITE

TEST_SUITE("reports") {

TEST_CASE("report layout")
{
    const Report rep = run_instance(parse_instance(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"2\"}\n")));
    const json j = report_json(rep);
    CHECK(j["configuration"]["gamma"] == "2");
    CHECK(j["configuration"]["r"] == "2/3");
    CHECK(j["configuration"]["points"]["E"] == json::array({"1/2", "5/12"}));
    CHECK(j["configuration"]["points"]["R"] == json::array({"-2", "0"}));
    CHECK(j["verdicts"].size() == all_claims().size());
    CHECK(j["overall"] == "degenerate");
    const std::string dumped = j.dump();
    CHECK(dumped.find('.') == std::string::npos); // no floating point anywhere

    const Report mid = run_instance(parse_instance(square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\n")));
    CHECK(report_json(mid)["configuration"]["points"]["R"] == json::array({"1", "0", "0"}));
}

TEST_CASE("undefined construction degrades every claim")
{
    const Quadrilateral flat(F("0", "0"), F("1", "0"), F("2", "0"), F("0", "1"));
    const Report rep = run_instance(flat, ratios("1", "1", "1", "1"), all_claims());
    CHECK_FALSE(rep.configuration.has_value());
    CHECK(rep.overall() == Status::Degenerate);
    CHECK(report_json(rep)["configuration"].is_null());
}

TEST_CASE("reports are byte-stable")
{
    const InstanceFile f = parse_instance(square_with("ratios: {m: \"3\", n: \"1/2\", p: \"2/5\", q: \"2\"}\n"));
    CHECK(report_json(run_instance(f)).dump(2) == report_json(run_instance(f)).dump(2));
}

} // TEST_SUITE

TEST_SUITE("commands") {

TEST_CASE("verify exit codes")
{
    TempDir dir;
    std::ostringstream out, err;
    const auto mid = dir.write("mid.yaml", square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\nchecks: all\n"));
    CHECK(cmd_verify({mid, {}}, out, err) == kExitOk);
    CHECK(json::parse(out.str())["overall"] != "fail");

    out.str("");
    const auto g2 = dir.write("g2.yaml", square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"2\"}\n"
                                                     "checks: [seven_lines]\n"));
    CHECK(cmd_verify({g2, {}}, out, err) == kExitOk);
    const json j = json::parse(out.str());
    CHECK(j["verdicts"][0]["status"] == "skipped");
    CHECK(j["overall"] == "pass");

    err.str("");
    const auto bad = dir.write("bad.yaml", square_with("ratios: {m: \"0.5\", n: \"1\", p: \"1\", q: \"1\"}\n"));
    CHECK(cmd_verify({bad, {}}, out, err) == kExitInputError);
    CHECK(std::regex_search(err.str(), std::regex("bad\\.yaml:2:13: ")));

    CHECK(cmd_verify({(dir.path / "missing.yaml").string(), {}}, out, err) == kExitInputError);
    CHECK(cmd_verify({mid, {"not_a_claim"}}, out, err) == kExitInputError);
}

TEST_CASE("fuzz output is deterministic and ordered")
{
    FuzzOptions opts;
    opts.spec.seed = 9;
    opts.count = 40;
    opts.regime = Regime::General;
    std::ostringstream a, b, c, err;
    CHECK(cmd_fuzz(opts, a, err) == kExitOk);
    CHECK(cmd_fuzz(opts, b, err) == kExitOk);
    opts.jobs = 4;
    CHECK(cmd_fuzz(opts, c, err) == kExitOk);
    CHECK(a.str() == b.str());
    CHECK(a.str() == c.str());
    std::istringstream lines(a.str());
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        if (j.contains("summary")) {
            CHECK(j["summary"]["count"] == 40);
            CHECK(j["summary"]["overall"] == "pass");
        } else {
            CHECK(j["instance"]["index"] == n);
        }
        ++n;
    }
    CHECK(n == 41);
}

TEST_CASE("fuzz input errors")
{
    std::ostringstream out, err;
    FuzzOptions opts;
    opts.count = 0;
    CHECK(cmd_fuzz(opts, out, err) == kExitInputError);
    opts.count = 5;
    opts.regime = Regime::Remarks;
    CHECK(cmd_fuzz(opts, out, err) == kExitInputError);
    opts.regime = Regime::General;
    opts.spec.coordinate_bound = 2;
    CHECK(cmd_fuzz(opts, out, err) == kExitInputError);
}

TEST_CASE("remarks regime reports findings without failing")
{
    FuzzOptions opts;
    opts.spec.seed = 3;
    opts.spec.shape = GenShape::Crossed;
    opts.count = 60;
    opts.regime = Regime::Remarks;
    opts.summary_only = true;
    std::ostringstream out, err;
    CHECK(cmd_fuzz(opts, out, err) == kExitOk);
    const json s = json::parse(out.str())["summary"];
    CHECK(s["findings"]["quadruple_not_convex"].get<int>() > 0);
    CHECK(s["claims"].contains("remarks"));
    CHECK_FALSE(s["claims"].contains("lemma13"));
}

TEST_CASE("counterexample search")
{
    CounterexampleOptions opts;
    opts.shape = GenShape::Crossed;
    opts.budget = 500;
    const auto found = find_counterexample(opts);
    REQUIRE(found.has_value());
    // The dumped instance replays to the same finding.
    const InstanceFile back = parse_instance(serialize_instance(found->instance));
    const Report rep = run_instance(back);
    REQUIRE(rep.verdicts.size() == 1);
    CHECK(rep.verdicts[0].exact_values.at("M1N1P1Q1 convex") == Rat(0));

    opts.budget = 0;
    CHECK_FALSE(find_counterexample(opts).has_value());
    opts.shape = GenShape::Convex;
    opts.budget = 10;
    CHECK_THROWS_AS(find_counterexample(opts), GeometryError);
    opts.shape = GenShape::Concave;
    opts.target = "observation2";
    CHECK_THROWS_AS(find_counterexample(opts), GeometryError);

    TempDir dir;
    CounterexampleOptions write;
    write.output = (dir.path / "cx.json").string();
    std::ostringstream out, err;
    CHECK(cmd_counterexample(write, out, err) == kExitOk);
    CHECK(json::parse(out.str())["found"] == true);
    CHECK(parse_instance(slurp(*write.output)).checks == std::vector<Claim>{Claim::Remarks});
}

} // TEST_SUITE

TEST_SUITE("figures") {

TEST_CASE("layers and determinism")
{
    const Configuration mid = build_from_ratios(unit_square(), ratios("1", "1", "1", "1"));
    const std::string all = render_svg(mid, all_layers());
    CHECK(all == render_svg(mid, all_layers()));
    for (const char* id : {"layer-sides", "layer-diagonals", "layer-seven", "layer-fg", "layer-quadruple", "layer-labels"}) {
        CHECK(all.find(id) != std::string::npos);
    }
    const std::string sides = render_svg(mid, {Layer::Sides});
    CHECK(sides.find("layer-sides") != std::string::npos);
    CHECK(sides.find("layer-seven") == std::string::npos);
    CHECK(sides.find("layer-quadruple") == std::string::npos);
    CHECK(sides.find("<text") == std::string::npos);
}

TEST_CASE("seven-line strokes pass through the rendered centre")
{
    const Configuration mid = build_from_ratios(unit_square(), ratios("1", "1", "1", "1"));
    const std::string svg = render_svg(mid, {Layer::SevenLines});
    const std::regex line_re("<line data-name=\"[^\"]+\" x1=\"([^\"]+)\" y1=\"([^\"]+)\" x2=\"([^\"]+)\" y2=\"([^\"]+)\"");
    const std::regex centre_re("<circle data-name=\"E\" cx=\"([^\"]+)\" cy=\"([^\"]+)\"");
    std::smatch cm;
    REQUIRE(std::regex_search(svg, cm, centre_re));
    const double ex = std::stod(cm[1]), ey = std::stod(cm[2]);
    int strokes = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator(); ++it) {
        const double x1 = std::stod((*it)[1]), y1 = std::stod((*it)[2]), x2 = std::stod((*it)[3]), y2 = std::stod((*it)[4]);
        const double cross = (x2 - x1) * (ey - y1) - (y2 - y1) * (ex - x1);
        const double len = std::hypot(x2 - x1, y2 - y1);
        CHECK(std::abs(cross) / len < 1e-6);
        ++strokes;
    }
    CHECK(strokes == 6); // FG is a single point here
}

TEST_CASE("gamma two puts F2 before F1 on AC")
{
    const Quadrilateral generic(F("0", "0"), F("4", "0"), F("5", "3"), F("1", "4"));
    const Configuration cfg = build_from_ratios(generic, ratios("1", "2", "1", "1"));
    const std::string svg = render_svg(cfg, {Layer::FGPoints});
    const auto cx_of = [&](const std::string& label) {
        std::smatch m;
        const std::regex re("<circle data-name=\"" + label + "\" cx=\"([^\"]+)\"");
        REQUIRE(std::regex_search(svg, m, re));
        return std::stod(m[1]);
    };
    // AC runs left to right, so x increases A, F2, F1, C.
    CHECK(cx_of("F2") < cx_of("F1"));
    CHECK(cfg.at(PointId::F1) != cfg.at(PointId::F2));
}

TEST_CASE("figure command")
{
    TempDir dir;
    const auto mid = dir.write("mid.yaml", square_with("ratios: {m: \"1\", n: \"1\", p: \"1\", q: \"1\"}\n"));
    FigureOptions opts;
    opts.path = mid;
    opts.output = (dir.path / "out.svg").string();
    std::ostringstream out, err;
    CHECK(cmd_figure(opts, out, err) == kExitOk);
    CHECK(slurp(opts.output).rfind("<?xml", 0) == 0);
    opts.path = dir.write("bad.yaml", "vertices: 3\n");
    CHECK(cmd_figure(opts, out, err) == kExitInputError);
}

} // TEST_SUITE
