#include <quadconc/geometry.hpp>

#include <quadconc/errors.hpp>

#include <algorithm>
#include <array>

namespace quadconc {

namespace {

// Minors of the cross product of two homogeneous triples.
std::array<Rat, 3> cross(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& b0, const Rat& b1, const Rat& b2)
{
    return {a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0};
}

bool all_zero(const std::array<Rat, 3>& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Rat det3(const Point& p, const Point& q, const Point& r)
{
    return p.x() * (q.y() * r.w() - q.w() * r.y()) - p.y() * (q.x() * r.w() - q.w() * r.x()) +
           p.w() * (q.x() * r.y() - q.y() * r.x());
}

void require_finite(const Point& p, const char* what)
{
    if (p.is_ideal()) throw GeometryError(ErrorCode::NotFinite, std::string(what) + " is an ideal point " + p.str());
}

} // namespace

Point::Point(Rat x, Rat y, Rat w) : x_(std::move(x)), y_(std::move(y)), w_(std::move(w))
{
    if (x_.is_zero() && y_.is_zero() && w_.is_zero()) throw GeometryError(ErrorCode::ZeroPoint, "(0, 0, 0)");
}

Rat Point::affine_x() const
{
    require_finite(*this, "point");
    return x_ / w_;
}

Rat Point::affine_y() const
{
    require_finite(*this, "point");
    return y_ / w_;
}

Point Point::canonical() const
{
    if (is_finite()) return Point(x_ / w_, y_ / w_, Rat(1));
    const Rat& s = x_.is_zero() ? y_ : x_;
    return Point(x_ / s, y_ / s, Rat(0));
}

std::string Point::str() const
{
    const Point c = canonical();
    if (c.is_finite()) return "(" + c.x_.str() + ", " + c.y_.str() + ")";
    return "(" + c.x_.str() + " : " + c.y_.str() + " : 0)";
}

bool operator==(const Point& p, const Point& q)
{
    return all_zero(cross(p.x_, p.y_, p.w_, q.x_, q.y_, q.w_));
}

Line::Line(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
{
    if (a_.is_zero() && b_.is_zero()) throw GeometryError(ErrorCode::IdealLine, "line at infinity");
}

Line Line::canonical() const
{
    const Rat& s = a_.is_zero() ? b_ : a_;
    return Line(a_ / s, b_ / s, c_ / s);
}

std::string Line::str() const
{
    const Line l = canonical();
    return "[" + l.a_.str() + " : " + l.b_.str() + " : " + l.c_.str() + "]";
}

bool operator==(const Line& l, const Line& m)
{
    return all_zero(cross(l.a_, l.b_, l.c_, m.a_, m.b_, m.c_));
}

bool incident(const Point& p, const Line& l)
{
    return (l.a() * p.x() + l.b() * p.y() + l.c() * p.w()).is_zero();
}

Line line_through(const Point& p, const Point& q)
{
    if (p == q) throw GeometryError(ErrorCode::CoincidentPoints, p.str());
    if (p.is_ideal() && q.is_ideal()) {
        throw GeometryError(ErrorCode::IdealLine, "both " + p.str() + " and " + q.str() + " are ideal");
    }
    auto c = cross(p.x(), p.y(), p.w(), q.x(), q.y(), q.w());
    return Line(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

Point meet(const Line& l1, const Line& l2)
{
    auto c = cross(l1.a(), l1.b(), l1.c(), l2.a(), l2.b(), l2.c());
    if (all_zero(c)) throw GeometryError(ErrorCode::CoincidentLines, l1.str());
    return Point(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

bool collinear(const Point& p, const Point& q, const Point& r) { return det3(p, q, r).is_zero(); }

std::optional<Point> concurrent(std::span<const Line> lines)
{
    if (lines.size() < 3) throw GeometryError(ErrorCode::TooFewLines, std::to_string(lines.size()) + " lines");
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i] == lines[j]) {
                throw GeometryError(ErrorCode::CoincidentLines,
                                    "lines " + std::to_string(i) + " and " + std::to_string(j) + " are equal");
            }
        }
    }
    Point pivot = meet(lines[0], lines[1]);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (!incident(pivot, lines[i])) return std::nullopt;
    }
    return pivot;
}

Point point_dividing(const Point& a, const Point& b, const Rat& ratio)
{
    require_finite(a, "a");
    require_finite(b, "b");
    if (a == b) throw GeometryError(ErrorCode::CoincidentPoints, a.str());
    if (ratio == Rat(-1)) throw GeometryError(ErrorCode::RatioMinusOne, "point would be ideal");
    const Rat s = Rat(1) + ratio;
    return Point::finite((a.affine_x() + ratio * b.affine_x()) / s, (a.affine_y() + ratio * b.affine_y()) / s);
}

Rat affine_parameter(const Point& a, const Point& p, const Point& b)
{
    require_finite(a, "a");
    require_finite(p, "p");
    require_finite(b, "b");
    if (a == b) throw GeometryError(ErrorCode::CoincidentEndpoints, a.str());
    if (!collinear(a, p, b)) throw GeometryError(ErrorCode::NotCollinear, a.str() + ", " + p.str() + ", " + b.str());
    const Rat ax = a.affine_x(), ay = a.affine_y();
    const Rat dx = b.affine_x() - ax, dy = b.affine_y() - ay;
    return ((p.affine_x() - ax) * dx + (p.affine_y() - ay) * dy) / (dx * dx + dy * dy);
}

Rat directed_ratio(const Point& a, const Point& p, const Point& b)
{
    const Rat t = affine_parameter(a, p, b);
    if (t == Rat(1)) throw GeometryError(ErrorCode::PAtB, p.str());
    return t / (Rat(1) - t);
}

int orientation(const Point& a, const Point& b, const Point& c)
{
    require_finite(a, "a");
    require_finite(b, "b");
    require_finite(c, "c");
    return det3(a, b, c).sign() * a.w().sign() * b.w().sign() * c.w().sign();
}

bool on_closed_segment(const Point& a, const Point& b, const Point& p)
{
    require_finite(p, "p");
    if (a == b) return p == a;
    if (!collinear(a, b, p)) return false;
    const Rat t = affine_parameter(a, p, b);
    return t.sign() >= 0 && t <= Rat(1);
}

bool closed_segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && on_closed_segment(a, b, c)) || (o2 == 0 && on_closed_segment(a, b, d)) ||
           (o3 == 0 && on_closed_segment(c, d, a)) || (o4 == 0 && on_closed_segment(c, d, b));
}

std::string to_string(ShapeClass shape)
{
    switch (shape) {
    case ShapeClass::Convex: return "convex";
    case ShapeClass::Concave: return "concave";
    case ShapeClass::Crossed: return "crossed";
    case ShapeClass::Degenerate: return "degenerate";
    }
    return "unknown";
}

std::optional<ShapeClass> shape_from_string(const std::string& text)
{
    for (auto s : {ShapeClass::Convex, ShapeClass::Concave, ShapeClass::Crossed, ShapeClass::Degenerate}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

ShapeClass classify_quadrilateral(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const std::array<int, 4> o{orientation(a, b, c), orientation(b, c, d), orientation(c, d, a), orientation(d, a, b)};
    if (std::find(o.begin(), o.end(), 0) != o.end()) return ShapeClass::Degenerate;
    const auto positive = std::count(o.begin(), o.end(), 1);
    if (positive == 0 || positive == 4) return ShapeClass::Convex;
    if (positive == 1 || positive == 3) return ShapeClass::Concave;
    // Two of each sign. [abc] + [cda] = [bcd] + [dab] rules out the
    // alternating (+ - + -) pattern, so this is always a crossing.
    return ShapeClass::Crossed;
}

} // namespace quadconc
