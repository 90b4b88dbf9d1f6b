#include <quadconc/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace quadconc;

namespace {

template <typename E>
std::map<std::string, E> choices(std::initializer_list<E> values)
{
    std::map<std::string, E> out;
    for (E v : values) out.emplace(std::string(to_string(v)), v);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of quadrilateral concurrence identities"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Build an instance file and check its claims");
    verify_cmd->add_option("file", verify.path, "Instance file (YAML or JSON)")->required();
    verify_cmd->add_option("--check", verify.checks, "Claim ids to run instead of the file's list")->delimiter(',');

    FuzzOptions fuzz;
    std::string regime = "general";
    GenShape fuzz_shape = GenShape::Convex;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Check claims on seeded random instances");
    fuzz_cmd->add_option("--seed", fuzz.spec.seed, "Campaign seed")->required();
    fuzz_cmd->add_option("--count", fuzz.count, "Number of instances")->required();
    fuzz_cmd->add_option("--regime", regime, "gamma1, general or remarks")
        ->required()
        ->check(CLI::IsMember({"gamma1", "general", "remarks"}));
    fuzz_cmd->add_option("--shape", fuzz_shape, "convex, concave, crossed or any")
        ->transform(CLI::CheckedTransformer(
            choices({GenShape::Convex, GenShape::Concave, GenShape::Crossed, GenShape::Any})));
    fuzz_cmd->add_option("--bound", fuzz.spec.coordinate_bound, "Coordinate numerator/denominator bound")
        ->capture_default_str();
    fuzz_cmd->add_option("--ratio-bound", fuzz.spec.ratio_bound, "Ratio numerator/denominator bound")
        ->capture_default_str();
    fuzz_cmd->add_flag("--summary-only", fuzz.summary_only, "Print only the summary line");
    fuzz_cmd->add_option("--dump-dir", fuzz.dump_dir, "Also write failing instances here");
    fuzz_cmd->add_option("--jobs,-j", fuzz.jobs, "Worker threads")->capture_default_str();

    CounterexampleOptions cx;
    auto* cx_cmd = app.add_subcommand("counterexample", "Search non-convex shapes for an instance breaking a claim");
    cx_cmd->add_option("--shape", cx.shape, "crossed or concave (any is accepted)")
        ->required()
        ->transform(CLI::CheckedTransformer(
            choices({GenShape::Convex, GenShape::Concave, GenShape::Crossed, GenShape::Any})));
    cx_cmd->add_option("--target", cx.target, "Claim to break")
        ->required()
        ->check(CLI::IsMember(counterexample_targets()));
    cx_cmd->add_option("--budget", cx.budget, "Instances to try")->required();
    cx_cmd->add_option("--seed", cx.seed, "Search seed")->capture_default_str();
    cx_cmd->add_option("--bound", cx.coordinate_bound, "Coordinate bound")->capture_default_str();
    cx_cmd->add_option("--ratio-bound", cx.ratio_bound, "Ratio bound")->capture_default_str();
    cx_cmd->add_option("-o,--output", cx.output, "Write the instance file here");

    FigureOptions figure;
    std::vector<std::string> layers;
    auto* figure_cmd = app.add_subcommand("figure", "Draw an instance as SVG");
    figure_cmd->add_option("file", figure.path, "Instance file")->required();
    figure_cmd->add_option("-o,--output", figure.output, "SVG path, - for stdout")->required();
    figure_cmd->add_option("--layers", layers, "sides,diagonals,seven,fg,quadruple,labels")
        ->delimiter(',')
        ->check(CLI::IsMember({"sides", "diagonals", "seven", "fg", "quadruple", "labels"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
    if (*fuzz_cmd) {
        fuzz.regime = *regime_from_string(regime);
        fuzz.spec.shape = fuzz_shape;
        return cmd_fuzz(fuzz, std::cout, std::cerr);
    }
    if (*cx_cmd) return cmd_counterexample(cx, std::cout, std::cerr);
    if (!layers.empty()) {
        figure.layers.clear();
        for (const auto& l : layers) figure.layers.insert(*layer_from_string(l));
    }
    return cmd_figure(figure, std::cout, std::cerr);
}
