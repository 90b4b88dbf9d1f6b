#pragma once

#include <quadconc/configuration.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadconc {

enum class Status { Pass, Fail, Degenerate, Skipped };

std::string_view to_string(Status status);

/// Stable claim identifiers, in the order verify_all reports them.
enum class Claim {
    DiagonalCollinearity,
    SevenLines,
    TransversalExtension,
    Corollary8,
    GammaOneCollapse,
    DiagonalTrichotomy,
    GeneralConcurrences,
    Observation2,
    Observation3,
    Lemma13,
    Proposition14,
    Remarks,
};

std::string_view claim_id(Claim claim);
std::optional<Claim> claim_from_id(std::string_view id);
const std::vector<Claim>& all_claims();

/// Outcome of checking one claim on one configuration.
///
/// Pass means every asserted identity or incidence held exactly. Degenerate
/// means a named coincidence made part of the claim vacuous; the parts that
/// remained meaningful still held. Skipped means the claim's regime does not
/// apply (for instance gamma != 1 for the gamma = 1 claims).
struct Verdict {
    std::string claim_id;
    Status status = Status::Pass;
    std::vector<std::pair<std::string, Point>> witnesses;
    std::string detail;
    std::map<std::string, Rat> exact_values;
};

Verdict verify_diagonal_collinearity(const Configuration& cfg);
Verdict verify_seven_lines(const Configuration& cfg);
Verdict verify_transversal_extension(const Configuration& cfg);
Verdict verify_corollary8(const Configuration& cfg);
Verdict verify_gamma_one_collapse(const Configuration& cfg);
Verdict verify_diagonal_trichotomy(const Configuration& cfg);
Verdict verify_general_concurrences(const Configuration& cfg);
Verdict verify_observation2(const Configuration& cfg);
Verdict verify_observation3(const Configuration& cfg);
Verdict verify_lemma13(const Configuration& cfg);
Verdict verify_proposition14(const Configuration& cfg);
Verdict verify_remarks(const Configuration& cfg);

Verdict verify(Claim claim, const Configuration& cfg);

/// Every claim, in all_claims() order. Claims outside the configuration's
/// regime come back Skipped.
std::vector<Verdict> verify_all(const Configuration& cfg);

/// Like verify_all, but accepts quadrilaterals that cannot be built: a
/// degenerate quadrilateral yields one Degenerate verdict per claim.
std::vector<Verdict> verify_all(const Quadrilateral& quad, const SideRatios& ratios);

/// Whether M1N1P1Q1 is convex, allowing degenerate collapse: its diagonals
/// [M1 P1] and [N1 Q1] share a point. Empty when one of the points is ideal or
/// undefined.
std::optional<bool> quadruple_points_convex(const Configuration& cfg);

/// Sub-results gathered by verify_remarks.
struct RemarksOutcome {
    std::vector<Verdict> theorem_verdicts; // seven_lines, transversal_extension, general_concurrences
    std::optional<bool> quadruple_convex;
    std::optional<bool> lemma13_holds; // the convex-case ME/EP formula, evaluated anyway
};

RemarksOutcome evaluate_remarks(const Configuration& cfg);

/// Worst status of a verdict list: fail > degenerate > pass; skipped verdicts
/// are ignored. An empty or all-skipped list is Pass.
Status overall_status(const std::vector<Verdict>& verdicts);

} // namespace quadconc
