#pragma once

#include <quadconc/rat.hpp>

#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace quadconc {

/// Point of the projective plane in homogeneous coordinates (x : y : w).
/// Finite points have w != 0; ideal points (directions) have w == 0.
/// Equality is projective: triples proportional by a nonzero factor compare equal.
class Point {
public:
    /// Throws ZeroPoint for (0, 0, 0).
    Point(Rat x, Rat y, Rat w);

    static Point finite(Rat x, Rat y) { return Point(std::move(x), std::move(y), Rat(1)); }
    static Point ideal(Rat dx, Rat dy) { return Point(std::move(dx), std::move(dy), Rat(0)); }

    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    const Rat& w() const { return w_; }

    bool is_finite() const { return !w_.is_zero(); }
    bool is_ideal() const { return w_.is_zero(); }

    /// Affine coordinates; throw NotFinite on ideal points.
    Rat affine_x() const;
    Rat affine_y() const;

    /// w == 1 for finite points; for ideal points the first nonzero of (x, y) is 1.
    Point canonical() const;

    std::string str() const;

    friend bool operator==(const Point& p, const Point& q);
    friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

private:
    Rat x_, y_, w_;
};

/// Line a*x + b*y + c*w = 0. The line at infinity (a = b = 0) is not representable.
class Line {
public:
    /// Throws IdealLine when a == b == 0.
    Line(Rat a, Rat b, Rat c);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }

    Line canonical() const;
    std::string str() const;

    friend bool operator==(const Line& l, const Line& m);
    friend std::ostream& operator<<(std::ostream& os, const Line& l) { return os << l.str(); }

private:
    Rat a_, b_, c_;
};

bool incident(const Point& p, const Line& l);

/// Line through two distinct points. CoincidentPoints if p == q, IdealLine if
/// both are ideal.
Line line_through(const Point& p, const Point& q);

/// Intersection of two distinct lines; parallel lines meet in an ideal point.
/// CoincidentLines if l1 == l2.
Point meet(const Line& l1, const Line& l2);

/// Exact determinant test, valid for finite and ideal points alike.
bool collinear(const Point& p, const Point& q, const Point& r);

/// Common point of three or more pairwise distinct lines, checked against the
/// meet of the first two. CoincidentLines if two inputs are equal,
/// TooFewLines below three.
std::optional<Point> concurrent(std::span<const Line> lines);

/// The finite point P on ab with AP/PB = ratio (directed). Positive ratios
/// fall strictly between a and b.
Point point_dividing(const Point& a, const Point& b, const Rat& ratio);

/// Affine parameter t of p on segment ab, p = a + t (b - a). Requires finite,
/// collinear inputs with a != b.
Rat affine_parameter(const Point& a, const Point& p, const Point& b);

/// Directed ratio AP/PB = t / (1 - t).
Rat directed_ratio(const Point& a, const Point& p, const Point& b);

/// Sign of the signed area of the finite triangle abc: +1 counter-clockwise.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed-segment membership for finite points; a == b degenerates to p == a.
bool on_closed_segment(const Point& a, const Point& b, const Point& p);

/// True when closed segments [a b] and [c d] share at least one point.
bool closed_segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

enum class ShapeClass { Convex, Concave, Crossed, Degenerate };

std::string to_string(ShapeClass shape);
std::optional<ShapeClass> shape_from_string(const std::string& text);

ShapeClass classify_quadrilateral(const Point& a, const Point& b, const Point& c, const Point& d);

} // namespace quadconc
