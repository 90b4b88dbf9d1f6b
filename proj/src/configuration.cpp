#include <quadconc/configuration.hpp>

#include <quadconc/errors.hpp>

#include <utility>

namespace quadconc {

namespace {

constexpr std::array<std::string_view, kPointCount> kNames{
    "A", "B", "C", "D", "M", "N", "P", "Q", "O", "X", "Y", "Z", "T", "A'", "B'", "C'", "D'",
    "F1", "G1", "F2", "G2", "E", "M1", "N1", "P1", "Q1", "R",
};

std::string flag_name(PointId id)
{
    std::string s(name(id));
    if (!s.empty() && s.back() == '\'') {
        s.pop_back();
        s += "p";
    }
    return s;
}

} // namespace

std::string_view name(PointId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<PointId> point_id_from_name(std::string_view text)
{
    for (std::size_t i = 0; i < kPointCount; ++i) {
        if (kNames[i] == text) return static_cast<PointId>(i);
    }
    return std::nullopt;
}

Quadrilateral::Quadrilateral(Point a, Point b, Point c, Point d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), shape_(ShapeClass::Degenerate)
{
    const std::array<const Point*, 4> v{&a_, &b_, &c_, &d_};
    for (int i = 0; i < 4; ++i) {
        if (v[i]->is_ideal()) throw GeometryError(ErrorCode::NotFinite, "vertex " + v[i]->str());
        for (int j = i + 1; j < 4; ++j) {
            if (*v[i] == *v[j]) throw GeometryError(ErrorCode::CoincidentPoints, "vertices " + v[i]->str());
        }
    }
    shape_ = classify_quadrilateral(a_, b_, c_, d_);
}

const Point& Quadrilateral::vertex(int i) const
{
    switch (i & 3) {
    case 0: return a_;
    case 1: return b_;
    case 2: return c_;
    default: return d_;
    }
}

SideRatios::SideRatios(Rat m, Rat n, Rat p, Rat q)
    : m_(std::move(m)), n_(std::move(n)), p_(std::move(p)), q_(std::move(q)), gamma_(m_ * n_ * p_ * q_)
{
}

const Point& Configuration::at(PointId id) const
{
    const auto& p = points_[index(id)];
    if (!p) throw GeometryError(ErrorCode::UndefinedPoint, std::string(name(id)));
    return *p;
}

class ConfigurationBuilder {
public:
    ConfigurationBuilder(const Quadrilateral& quad, const SideRatios& ratios) : cfg_(quad, ratios) {}

    Configuration build()
    {
        const Quadrilateral& q = cfg_.quad();
        const SideRatios& r = cfg_.ratios();
        set(PointId::A, q.A());
        set(PointId::B, q.B());
        set(PointId::C, q.C());
        set(PointId::D, q.D());
        set(PointId::M, point_dividing(q.A(), q.B(), r.m()));
        set(PointId::N, point_dividing(q.B(), q.C(), r.n()));
        set(PointId::P, point_dividing(q.C(), q.D(), r.p()));
        set(PointId::Q, point_dividing(q.D(), q.A(), r.q()));

        using enum PointId;
        define(O, {A, C}, {B, D});

        define(X, {A, N}, {B, Q});
        define(Z, {D, N}, {C, Q});
        define(Y, {C, M}, {B, P});
        define(T, {A, P}, {D, M});

        define(A1, {B, P}, {D, N});
        define(B1, {A, P}, {C, Q});
        define(C1, {B, Q}, {D, M});
        define(D1, {A, N}, {C, M});

        define(F1, {B, D1}, {A, C});
        define(G1, {C, A1}, {B, D});
        define(F2, {D, B1}, {A, C});
        define(G2, {A, C1}, {B, D});

        define(E, {M, P}, {N, Q});

        // Each quadruple point is the meet of its two cevian-type lines; the
        // remaining two lines of the quadruple are left for the verifiers.
        define(M1, {A, A1}, {D, D1});
        define(N1, {A, A1}, {B, B1});
        define(P1, {B, B1}, {C, C1});
        define(Q1, {C, C1}, {D, D1});

        define(R, {N, Q}, {A, B});
        compute_r_ratio();

        flag_coincidence(F1, G1);
        flag_coincidence(G1, F2);
        flag_coincidence(F2, G2);
        flag_coincidence(G2, F1);
        return std::move(cfg_);
    }

private:
    using Pair = std::pair<PointId, PointId>;

    void set(PointId id, Point p) { cfg_.points_[Configuration::index(id)] = std::move(p); }

    void flag(std::string f) { cfg_.degeneracies_.insert(std::move(f)); }

    std::optional<Line> line(const Pair& ends)
    {
        const auto& p = cfg_.get(ends.first);
        const auto& q = cfg_.get(ends.second);
        if (!p || !q) return std::nullopt;
        if (*p == *q) {
            flag(flag_name(ends.first) + "_EQ_" + flag_name(ends.second));
            return std::nullopt;
        }
        if (p->is_ideal() && q->is_ideal()) return std::nullopt;
        return line_through(*p, *q);
    }

    void define(PointId id, const Pair& first, const Pair& second)
    {
        const auto l1 = line(first);
        const auto l2 = line(second);
        if (!l1 || !l2) {
            flag(flag_name(id) + "_UNDEFINED");
            return;
        }
        if (*l1 == *l2) {
            throw GeometryError(ErrorCode::UndefinedPoint,
                                std::string(name(id)) + ": lines " + std::string(name(first.first)) +
                                    std::string(name(first.second)) + " and " + std::string(name(second.first)) +
                                    std::string(name(second.second)) + " coincide");
        }
        Point p = meet(*l1, *l2);
        if (p.is_ideal()) flag(flag_name(id) + "_IDEAL");
        set(id, p.canonical());
    }

    void flag_coincidence(PointId a, PointId b)
    {
        const auto& p = cfg_.get(a);
        const auto& q = cfg_.get(b);
        if (p && q && *p == *q) flag(flag_name(a) + "_EQ_" + flag_name(b));
    }

    void compute_r_ratio()
    {
        const auto& r = cfg_.get(PointId::R);
        if (!r) return;
        if (r->is_ideal()) {
            cfg_.r_ratio_ = Rat(1);
            return;
        }
        const Quadrilateral& q = cfg_.quad();
        if (*r == q.B()) {
            flag("R_EQ_B");
            return;
        }
        const Rat t = affine_parameter(q.A(), *r, q.B());
        cfg_.r_ratio_ = t.abs() / (Rat(1) - t).abs();
    }

    Configuration cfg_;
};

namespace {

void check_ratio(const Rat& value, const char* label, bool convex)
{
    if (convex ? value.sign() <= 0 : (value.is_zero() || value == Rat(-1))) {
        throw GeometryError(ErrorCode::InvalidRatio, std::string(label) + " = " + value.str() +
                                                         (convex ? " (must be positive)" : " (must not be 0 or -1)"));
    }
}

} // namespace

Configuration build_from_ratios(const Quadrilateral& quad, const SideRatios& ratios)
{
    if (quad.shape() == ShapeClass::Degenerate) {
        throw GeometryError(ErrorCode::DegenerateQuadrilateral, "three vertices are collinear");
    }
    const bool convex = quad.shape() == ShapeClass::Convex;
    check_ratio(ratios.m(), "m", convex);
    check_ratio(ratios.n(), "n", convex);
    check_ratio(ratios.p(), "p", convex);
    check_ratio(ratios.q(), "q", convex);
    return ConfigurationBuilder(quad, ratios).build();
}

namespace {

Rat side_ratio(const Point& from, const Point& pt, const Point& to, const char* label, bool convex)
{
    const auto off_side = [&](const std::string& why) {
        return GeometryError(ErrorCode::PointNotOnSide, std::string(label) + " = " + pt.str() + ": " + why);
    };
    if (pt.is_ideal()) throw off_side("ideal point");
    if (!collinear(from, pt, to)) throw off_side("not on line " + from.str() + " " + to.str());
    if (pt == to || pt == from) throw off_side("at a vertex");
    const Rat ratio = directed_ratio(from, pt, to);
    if (convex && ratio.sign() <= 0) throw off_side("outside the open side");
    return ratio;
}

} // namespace

Configuration build_from_points(const Quadrilateral& quad, const Point& m, const Point& n, const Point& p,
                                const Point& q)
{
    if (quad.shape() == ShapeClass::Degenerate) {
        throw GeometryError(ErrorCode::DegenerateQuadrilateral, "three vertices are collinear");
    }
    const bool convex = quad.shape() == ShapeClass::Convex;
    SideRatios ratios(side_ratio(quad.A(), m, quad.B(), "M", convex), side_ratio(quad.B(), n, quad.C(), "N", convex),
                      side_ratio(quad.C(), p, quad.D(), "P", convex), side_ratio(quad.D(), q, quad.A(), "Q", convex));
    return build_from_ratios(quad, ratios);
}

ConstructedFromTwoPoints construct_from_two_points(const Quadrilateral& quad, const Point& m, const Point& n)
{
    if (quad.shape() != ShapeClass::Convex) {
        throw GeometryError(ErrorCode::PreconditionViolation, "quadrilateral must be convex");
    }
    const auto inside = [](const Point& a, const Point& pt, const Point& b) {
        return pt.is_finite() && pt != a && pt != b && collinear(a, pt, b) && directed_ratio(a, pt, b).sign() > 0;
    };
    if (!inside(quad.A(), m, quad.B())) {
        throw GeometryError(ErrorCode::PreconditionViolation, "M = " + m.str() + " is not on the open side AB");
    }
    if (!inside(quad.B(), n, quad.C())) {
        throw GeometryError(ErrorCode::PreconditionViolation, "N = " + n.str() + " is not on the open side BC");
    }
    const auto meet_or_throw = [](const Line& l1, const Line& l2, const char* what) {
        if (l1 == l2) throw GeometryError(ErrorCode::UndefinedPoint, what);
        Point pt = meet(l1, l2);
        if (pt.is_ideal()) throw GeometryError(ErrorCode::UndefinedPoint, std::string(what) + " is ideal");
        return pt.canonical();
    };
    const Line ac = line_through(quad.A(), quad.C());
    Point s = meet_or_throw(line_through(quad.D(), m), ac, "S");
    Point t = meet_or_throw(line_through(quad.D(), n), ac, "T");
    Point q = meet_or_throw(line_through(quad.B(), s), line_through(quad.A(), quad.D()), "Q");
    Point p = meet_or_throw(line_through(quad.B(), t), line_through(quad.C(), quad.D()), "P");
    Configuration config = build_from_points(quad, m, n, p, q);
    return {std::move(s), std::move(t), std::move(config)};
}

} // namespace quadconc
