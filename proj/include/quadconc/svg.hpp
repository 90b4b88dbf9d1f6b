#pragma once

#include <quadconc/configuration.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace quadconc {

enum class Layer { Sides, Diagonals, SevenLines, FGPoints, Quadruple, Labels };

std::string_view to_string(Layer layer);
std::optional<Layer> layer_from_string(std::string_view text);
std::set<Layer> all_layers();

/// Renders the configuration as a standalone SVG document. Exact coordinates
/// are converted to decimals here and only here, at 12 significant digits,
/// so identical configurations give identical bytes.
std::string render_svg(const Configuration& cfg, const std::set<Layer>& layers);

} // namespace quadconc
