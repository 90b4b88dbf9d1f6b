#pragma once

#include <quadconc/configuration.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace quadconc {

/// SplitMix64. The constants are part of the instance-stream contract; see
/// docs/generators.md.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next();
    /// Uniform-ish integer in [lo, hi] by modulo reduction.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t state_;
};

enum class GenShape { Convex, Concave, Crossed, Any };

std::string to_string(GenShape shape);
std::optional<GenShape> gen_shape_from_string(const std::string& text);

struct GenSpec {
    std::uint64_t seed = 0;
    GenShape shape = GenShape::Convex;
    std::int64_t coordinate_bound = 10; // |numerator|, denominator <= bound
    std::int64_t ratio_bound = 5;
    bool force_gamma_one = false;
};

inline constexpr int kMaxGenerationAttempts = 1000;

/// Independent stream for one (seed, index, stream) triple.
SplitMix64 instance_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t stream);

/// Throws InvalidSpec when coordinate_bound < 4 or ratio_bound < 1.
void validate(const GenSpec& spec);

/// Rejection-sampled quadrilateral of the requested shape. Convex results are
/// labelled counter-clockwise. GenerationExhausted after kMaxGenerationAttempts.
Quadrilateral gen_quadrilateral(const GenSpec& spec, std::uint64_t index);

/// Positive ratios with numerator and denominator in [1, ratio_bound]. With
/// force_gamma_one, q is replaced by 1/(m n p).
SideRatios gen_ratios(const GenSpec& spec, std::uint64_t index);

} // namespace quadconc
