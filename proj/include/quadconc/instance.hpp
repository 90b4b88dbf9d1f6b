#pragma once

#include <quadconc/configuration.hpp>
#include <quadconc/verifiers.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace quadconc {

/// Input problem: the file name (if any), 1-based line and column, and a message.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& source, int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// One verification instance.
///
///     vertices: {A: ["0", "0"], B: ["1", "0"], C: ["1", "1"], D: ["0", "1"]}
///     ratios:   {m: "1", n: "1", p: "1", q: "2"}      # or
///     points:   {M: ["1/2", "0"], N: ..., P: ..., Q: ...}
///     checks:   all                                  # or a list of claim ids
///
/// Rationals are integers or "p/q" strings; decimals are rejected.
struct InstanceFile {
    std::array<Point, 4> vertices;
    std::variant<SideRatios, std::array<Point, 4>> sides;
    std::optional<std::vector<Claim>> checks; // empty means all

    std::vector<Claim> claims() const { return checks ? *checks : all_claims(); }
};

/// Parses an instance document (YAML, so JSON documents are accepted as-is).
InstanceFile parse_instance(const std::string& text, const std::string& source = "<input>");
InstanceFile load_instance(const std::string& path);

/// JSON text of the instance, newline terminated; parse_instance reads it back.
std::string serialize_instance(const InstanceFile& instance);

} // namespace quadconc
