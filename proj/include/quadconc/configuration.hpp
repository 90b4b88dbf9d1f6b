#pragma once

#include <quadconc/geometry.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace quadconc {

/// Names of every point stored in a Configuration. A1..D1 are the primed
/// points A', B', C', D'; M1..Q1 are the quadruple-concurrence points.
enum class PointId : std::uint8_t {
    A, B, C, D,
    M, N, P, Q,
    O,
    X, Y, Z, T,
    A1, B1, C1, D1,
    F1, G1, F2, G2,
    E,
    M1, N1, P1, Q1,
    R,
};

inline constexpr std::size_t kPointCount = static_cast<std::size_t>(PointId::R) + 1;

/// Display name: "A", "A'", "F1", ...
std::string_view name(PointId id);
std::optional<PointId> point_id_from_name(std::string_view text);

class Quadrilateral {
public:
    /// Vertices must be finite and pairwise distinct (CoincidentPoints otherwise).
    /// Collinear triples are allowed and classify as degenerate.
    Quadrilateral(Point a, Point b, Point c, Point d);

    const Point& A() const { return a_; }
    const Point& B() const { return b_; }
    const Point& C() const { return c_; }
    const Point& D() const { return d_; }
    const Point& vertex(int i) const;
    ShapeClass shape() const { return shape_; }

private:
    Point a_, b_, c_, d_;
    ShapeClass shape_;
};

/// AM/MB = m, BN/NC = n, CP/PD = p, DQ/QA = q and their product gamma.
class SideRatios {
public:
    SideRatios(Rat m, Rat n, Rat p, Rat q);

    const Rat& m() const { return m_; }
    const Rat& n() const { return n_; }
    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    const Rat& gamma() const { return gamma_; }
    bool gamma_is_one() const { return gamma_ == Rat(1); }

    friend bool operator==(const SideRatios&, const SideRatios&) = default;

private:
    Rat m_, n_, p_, q_, gamma_;
};

/// Every named point of the construction, plus degeneracy flags. Points whose
/// defining lines cannot be formed (coincident defining points) are absent and
/// flagged "<name>_UNDEFINED"; ideal meets are kept and flagged "<name>_IDEAL".
class Configuration {
public:
    const Quadrilateral& quad() const { return quad_; }
    const SideRatios& ratios() const { return ratios_; }

    bool has(PointId id) const { return points_[index(id)].has_value(); }
    const std::optional<Point>& get(PointId id) const { return points_[index(id)]; }
    /// Throws UndefinedPoint when absent.
    const Point& at(PointId id) const;

    /// RA/RB as an unsigned ratio; 1 when NQ is parallel to AB. Absent when R is
    /// undefined or coincides with B.
    const std::optional<Rat>& r_ratio() const { return r_ratio_; }

    const std::set<std::string>& degeneracies() const { return degeneracies_; }
    bool flagged(const std::string& flag) const { return degeneracies_.count(flag) != 0; }

private:
    friend class ConfigurationBuilder;
    Configuration(Quadrilateral quad, SideRatios ratios) : quad_(std::move(quad)), ratios_(std::move(ratios)) {}

    static std::size_t index(PointId id) { return static_cast<std::size_t>(id); }

    Quadrilateral quad_;
    SideRatios ratios_;
    std::array<std::optional<Point>, kPointCount> points_;
    std::optional<Rat> r_ratio_;
    std::set<std::string> degeneracies_;
};

/// Places M, N, P, Q by their ratios and constructs every derived point.
/// Throws DegenerateQuadrilateral for degenerate shapes, InvalidRatio for
/// non-positive ratios on convex quadrilaterals (zero or -1 elsewhere), and
/// UndefinedPoint when the two lines defining a point coincide.
Configuration build_from_ratios(const Quadrilateral& quad, const SideRatios& ratios);

/// Recovers the ratios from explicit side points. Convex quadrilaterals need the
/// points strictly inside their sides; other shapes only need them on the side
/// lines. PointNotOnSide otherwise.
Configuration build_from_points(const Quadrilateral& quad, const Point& m, const Point& n, const Point& p,
                                const Point& q);

struct ConstructedFromTwoPoints {
    Point S; // DM ∩ AC
    Point T; // DN ∩ AC
    Configuration config;
};

/// From M on (AB) and N on (BC) of a convex quadrilateral: S = DM∩AC,
/// T = DN∩AC, Q = BS∩AD, P = BT∩CD. The result always has gamma = 1.
ConstructedFromTwoPoints construct_from_two_points(const Quadrilateral& quad, const Point& m, const Point& n);

} // namespace quadconc
