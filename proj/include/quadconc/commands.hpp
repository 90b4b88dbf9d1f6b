#pragma once

#include <quadconc/generators.hpp>
#include <quadconc/instance.hpp>
#include <quadconc/svg.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quadconc {

/// Process exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitClaimFailed = 1, kExitInputError = 2 };

struct VerifyOptions {
    std::string path;
    std::vector<std::string> checks; // overrides the file's list when non-empty
};

/// Prints the report as JSON. Exit 0 on pass/degenerate, 1 on any failed
/// claim, 2 on unreadable or invalid input (diagnostic on `err`).
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

enum class Regime { GammaOne, General, Remarks };

std::string to_string(Regime regime);
std::optional<Regime> regime_from_string(const std::string& text);

/// Claims a fuzz regime evaluates.
std::vector<Claim> regime_claims(Regime regime);

struct FuzzOptions {
    GenSpec spec;                       // force_gamma_one is implied by Regime::GammaOne
    std::uint64_t count = 100;
    Regime regime = Regime::General;
    bool summary_only = false;
    std::optional<std::string> dump_dir; // failing instances are also written here
    unsigned jobs = 1;
};

/// Emits one JSON report per line in index order, then a summary line.
/// Exit 1 iff some claim failed.
int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err);

struct CounterexampleOptions {
    GenShape shape = GenShape::Crossed;
    std::string target = "proposition14_convexity";
    std::uint64_t budget = 500;
    std::uint64_t seed = 1;
    std::int64_t coordinate_bound = 10;
    std::int64_t ratio_bound = 5;
    std::optional<std::string> output;
};

/// Targets: proposition14_convexity, lemma13, seven_lines,
/// transversal_extension, general_concurrences.
const std::vector<std::string>& counterexample_targets();

struct Counterexample {
    std::uint64_t index;
    InstanceFile instance;
};

/// First generated instance (index < budget) on which the target fails.
/// Throws InvalidSpec for convex or unknown shapes and unknown targets.
std::optional<Counterexample> find_counterexample(const CounterexampleOptions& options);

int cmd_counterexample(const CounterexampleOptions& options, std::ostream& out, std::ostream& err);

struct FigureOptions {
    std::string path;
    std::string output = "-"; // "-" writes to `out`
    std::set<Layer> layers = all_layers();
};

int cmd_figure(const FigureOptions& options, std::ostream& out, std::ostream& err);

} // namespace quadconc
