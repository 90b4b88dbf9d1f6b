#include "test_support.hpp"

#include <quadconc/configuration.hpp>
#include <quadconc/errors.hpp>
#include <quadconc/generators.hpp>

#include <doctest.h>

#include <utility>
#include <vector>

using namespace quadconc;
using namespace quadconc::testing;
using enum PointId;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const GeometryError& e) {
        return e.code();
    }
    FAIL("expected a GeometryError");
    return ErrorCode::InvalidSpec;
}

void check_against_oracle(const Configuration& cfg, const oracle::Config& o)
{
    const std::vector<std::pair<PointId, oracle::P>> expected{
        {A, o.A},   {B, o.B},   {C, o.C},   {D, o.D},   {M, o.M},   {N, o.N},   {P, o.Pp},  {Q, o.Q},
        {O, o.O},   {X, o.X},   {Y, o.Y},   {Z, o.Z},   {T, o.T},   {A1, o.A1}, {B1, o.B1}, {C1, o.C1},
        {D1, o.D1}, {F1, o.F1}, {G1, o.G1}, {F2, o.F2}, {G2, o.G2}, {E, o.E},   {M1, o.M1}, {N1, o.N1},
        {P1, o.P1}, {Q1, o.Q1}};
    for (const auto& [id, want] : expected) {
        CAPTURE(name(id));
        REQUIRE(cfg.has(id));
        CHECK(cfg.at(id) == to_point(want));
    }
    CHECK(cfg.at(R).is_ideal() == !o.R.has_value());
    if (o.R) CHECK(cfg.at(R) == to_point(*o.R));
}

// Relabelling (A,B,C,D) -> (B,C,D,A) with (m,n,p,q) -> (n,p,q,m) moves every
// name one step around its cycle.
PointId shifted(PointId id)
{
    static const std::vector<std::vector<PointId>> cycles{
        {A, D, C, B}, {M, Q, P, N}, {X, T, Z, Y}, {A1, D1, C1, B1}, {F1, G2, F2, G1}, {M1, Q1, P1, N1}};
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (cycle[i] == id) return cycle[(i + 1) % cycle.size()];
        }
    }
    return id;
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("quadrilateral validation")
{
    CHECK(code_of([] { Quadrilateral(F("0", "0"), F("0", "0"), F("1", "1"), F("0", "1")); }) ==
          ErrorCode::CoincidentPoints);
    CHECK(code_of([] { Quadrilateral(Point::ideal(rat("1"), rat("0")), F("1", "0"), F("1", "1"), F("0", "1")); }) ==
          ErrorCode::NotFinite);
    CHECK(Quadrilateral(F("0", "0"), F("1", "0"), F("2", "0"), F("0", "1")).shape() == ShapeClass::Degenerate);
}

TEST_CASE("midpoints of the unit square")
{
    const Configuration cfg = build_from_ratios(unit_square(), ratios("1", "1", "1", "1"));
    CHECK(cfg.ratios().gamma_is_one());
    CHECK(cfg.at(M) == F("1/2", "0"));
    CHECK(cfg.at(N) == F("1", "1/2"));
    CHECK(cfg.at(P) == F("1/2", "1"));
    CHECK(cfg.at(Q) == F("0", "1/2"));
    CHECK(cfg.at(X) == F("1/2", "1/4"));
    CHECK(cfg.at(Z) == F("1/2", "3/4"));
    for (auto id : {O, E, F1, G1, F2, G2, M1, N1, P1, Q1}) {
        CAPTURE(name(id));
        CHECK(cfg.at(id) == F("1/2", "1/2"));
    }
    CHECK(cfg.at(R).is_ideal());
    CHECK(cfg.r_ratio() == Rat(1));
    CHECK(cfg.flagged("R_IDEAL"));
    CHECK(cfg.flagged("F1_EQ_G1"));
}

TEST_CASE("gamma one with unequal ratios")
{
    const Configuration cfg = build_from_ratios(unit_square(), ratios("2", "1", "1/2", "1"));
    CHECK(cfg.at(M) == F("2/3", "0"));
    CHECK(cfg.at(N) == F("1", "1/2"));
    CHECK(cfg.at(P) == F("2/3", "1"));
    CHECK(cfg.at(Q) == F("0", "1/2"));
    CHECK(cfg.at(E) == F("2/3", "1/2"));
}

TEST_CASE("gamma two on the unit square")
{
    const Configuration cfg = build_from_ratios(unit_square(), ratios("1", "1", "1", "2"));
    CHECK(cfg.ratios().gamma() == Rat(2));
    CHECK(cfg.at(Q) == F("0", "1/3"));
    CHECK(cfg.at(E) == F("1/2", "5/12"));
    CHECK(cfg.at(R) == F("-2", "0"));
    CHECK(cfg.r_ratio() == Rat(2, 3));
    CHECK(cfg.at(M1) == F("1/2", "1/2"));
    CHECK(cfg.at(P1) == F("1/2", "1/3"));
    CHECK(cfg.at(A1) == F("2/3", "2/3"));
    CHECK(cfg.at(D1) == F("2/3", "1/3"));
    CHECK(cfg.flagged("F1_EQ_G1"));
    CHECK_FALSE(cfg.flagged("F2_EQ_G2"));
}

TEST_CASE("fixtures match the reference construction")
{
    const auto check = [](const Quadrilateral& quad, const SideRatios& r) {
        const Configuration cfg = build_from_ratios(quad, r);
        const auto o = oracle::build(to_oracle(quad.A()), to_oracle(quad.B()), to_oracle(quad.C()),
                                     to_oracle(quad.D()), r.m().raw(), r.n().raw(), r.p().raw(), r.q().raw());
        check_against_oracle(cfg, o);
    };
    check(unit_square(), ratios("1", "1", "1", "2"));
    check(unit_square(), ratios("3", "1/2", "5/4", "2/7"));
    const Quadrilateral generic(F("0", "0"), F("4", "0"), F("5", "3"), F("1", "4"));
    check(generic, ratios("1", "2", "1", "1"));
    check(generic, ratios("1/3", "4", "2/5", "3"));
}

TEST_CASE("random instances match the reference construction")
{
    for (GenShape shape : {GenShape::Convex, GenShape::Concave, GenShape::Crossed}) {
        GenSpec spec;
        spec.seed = 99;
        spec.shape = shape;
        int compared = 0;
        for (std::uint64_t i = 0; i < 150; ++i) {
            const Quadrilateral quad = gen_quadrilateral(spec, i);
            const SideRatios r = gen_ratios(spec, i);
            oracle::Config o;
            try {
                o = oracle::build(to_oracle(quad.A()), to_oracle(quad.B()), to_oracle(quad.C()), to_oracle(quad.D()),
                                  r.m().raw(), r.n().raw(), r.p().raw(), r.q().raw());
            } catch (const std::logic_error&) {
                continue; // some meet is at infinity
            }
            const Configuration cfg = build_from_ratios(quad, r);
            check_against_oracle(cfg, o);
            ++compared;
        }
        CHECK(compared > 100);
    }
}

TEST_CASE("ratio and shape preconditions")
{
    CHECK(code_of([] { build_from_ratios(unit_square(), ratios("0", "1", "1", "1")); }) == ErrorCode::InvalidRatio);
    CHECK(code_of([] { build_from_ratios(unit_square(), ratios("1", "-2", "1", "1")); }) ==
          ErrorCode::InvalidRatio);
    const Quadrilateral flat(F("0", "0"), F("1", "0"), F("2", "0"), F("0", "1"));
    CHECK(code_of([&] { build_from_ratios(flat, ratios("1", "1", "1", "1")); }) ==
          ErrorCode::DegenerateQuadrilateral);
    // Off convex position, signed ratios other than 0 and -1 are accepted.
    const Quadrilateral concave(F("0", "0"), F("4", "0"), F("1", "1"), F("0", "4"));
    CHECK(code_of([&] { build_from_ratios(concave, ratios("-1", "1", "1", "1")); }) == ErrorCode::InvalidRatio);
    CHECK_NOTHROW(build_from_ratios(concave, ratios("1", "1", "1", "1")));
}

TEST_CASE("build from side points")
{
    const Configuration mid = build_from_points(unit_square(), F("1/2", "0"), F("1", "1/2"), F("1/2", "1"),
                                                F("0", "1/2"));
    CHECK(mid.ratios() == ratios("1", "1", "1", "1"));
    CHECK(mid.ratios().gamma_is_one());

    const Configuration m2 = build_from_points(unit_square(), F("2/3", "0"), F("1", "1/2"), F("1/2", "1"),
                                               F("0", "1/2"));
    CHECK(m2.ratios().m() == Rat(2));

    CHECK(code_of([] {
              build_from_points(unit_square(), F("1/2", "1/100"), F("1", "1/2"), F("1/2", "1"), F("0", "1/2"));
          }) == ErrorCode::PointNotOnSide);
    CHECK(code_of([] {
              build_from_points(unit_square(), F("2", "0"), F("1", "1/2"), F("1/2", "1"), F("0", "1/2"));
          }) == ErrorCode::PointNotOnSide);
    CHECK(code_of([] {
              build_from_points(unit_square(), F("1", "0"), F("1", "1/2"), F("1/2", "1"), F("0", "1/2"));
          }) == ErrorCode::PointNotOnSide);
}

TEST_CASE("points round trip through build_from_points")
{
    GenSpec spec;
    spec.seed = 5;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const Configuration a = build_from_ratios(gen_quadrilateral(spec, i), gen_ratios(spec, i));
        const Configuration b = build_from_points(a.quad(), a.at(M), a.at(N), a.at(P), a.at(Q));
        CHECK(b.ratios() == a.ratios());
        CHECK(b.ratios().gamma() == b.ratios().m() * b.ratios().n() * b.ratios().p() * b.ratios().q());
        for (std::size_t k = 0; k < kPointCount; ++k) {
            const auto id = static_cast<PointId>(k);
            CAPTURE(name(id));
            CHECK(a.get(id) == b.get(id));
        }
        CHECK(a.degeneracies() == b.degeneracies());
    }
}

TEST_CASE("construction from two side points")
{
    const auto res = construct_from_two_points(unit_square(), F("1/2", "0"), F("1", "1/2"));
    CHECK(res.S == F("1/3", "1/3"));
    CHECK(res.T == F("2/3", "2/3"));
    CHECK(res.config.at(P) == F("1/2", "1"));
    CHECK(res.config.at(Q) == F("0", "1/2"));
    CHECK(res.config.ratios().gamma_is_one());

    GenSpec spec;
    spec.seed = 17;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const Quadrilateral quad = gen_quadrilateral(spec, i);
        const SideRatios r = gen_ratios(spec, i);
        const Point m = point_dividing(quad.A(), quad.B(), r.m());
        const Point n = point_dividing(quad.B(), quad.C(), r.n());
        const auto built = construct_from_two_points(quad, m, n);
        CHECK(built.config.ratios().gamma_is_one());
        // S and T by the reference solver.
        const auto s = oracle::must_meet(to_oracle(quad.D()), to_oracle(m), to_oracle(quad.A()), to_oracle(quad.C()));
        CHECK(built.S == to_point(s));
    }

    CHECK(code_of([] { construct_from_two_points(unit_square(), F("0", "0"), F("1", "1/2")); }) ==
          ErrorCode::PreconditionViolation);
    const Quadrilateral concave(F("0", "0"), F("4", "0"), F("1", "1"), F("0", "4"));
    CHECK(code_of([&] { construct_from_two_points(concave, F("2", "0"), F("5/2", "1/2")); }) ==
          ErrorCode::PreconditionViolation);
}

TEST_CASE("NQ parallel to AB gives r = 1")
{
    // N = (1, 1/3), Q = (0, 1/3).
    const Configuration cfg = build_from_ratios(unit_square(), ratios("3", "1/2", "2/5", "2"));
    CHECK(cfg.at(N) == F("1", "1/3"));
    CHECK(cfg.at(Q) == F("0", "1/3"));
    CHECK(cfg.at(R).is_ideal());
    CHECK(cfg.flagged("R_IDEAL"));
    CHECK(cfg.r_ratio() == Rat(1));
}

TEST_CASE("cyclic relabelling permutes the named points")
{
    const auto check = [](const Quadrilateral& q, const SideRatios& r) {
        const Configuration base = build_from_ratios(q, r);
        const Configuration turned =
            build_from_ratios(Quadrilateral(q.B(), q.C(), q.D(), q.A()), SideRatios(r.n(), r.p(), r.q(), r.m()));
        for (std::size_t k = 0; k < kPointCount; ++k) {
            const auto id = static_cast<PointId>(k);
            if (id == R) continue; // R is tied to side AB
            CAPTURE(name(id));
            CHECK(base.get(id) == turned.get(shifted(id)));
        }
    };
    check(Quadrilateral(F("0", "0"), F("4", "0"), F("5", "3"), F("1", "4")), ratios("1", "2", "1", "1"));
    check(unit_square(), ratios("1", "1", "1", "2"));
    GenSpec spec;
    spec.seed = 3;
    for (std::uint64_t i = 0; i < 50; ++i) check(gen_quadrilateral(spec, i), gen_ratios(spec, i));
}

TEST_CASE("diagonal ratio products and orderings")
{
    GenSpec spec;
    spec.seed = 11;
    int seen_lt = 0, seen_gt = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Configuration cfg = build_from_ratios(gen_quadrilateral(spec, i), gen_ratios(spec, i));
        const Rat& g = cfg.ratios().gamma();
        const auto on = [&](PointId from, PointId pt, PointId to) {
            return oracle::ratio(to_oracle(cfg.at(from)), to_oracle(cfg.at(pt)), to_oracle(cfg.at(to)));
        };
        CHECK(on(A, F1, C) * on(C, F2, A) == g.raw());
        CHECK(on(B, G1, D) * on(D, G2, B) == g.raw());
        const auto t = [&](PointId from, PointId pt, PointId to) {
            return oracle::param(to_oracle(cfg.at(from)), to_oracle(cfg.at(pt)), to_oracle(cfg.at(to)));
        };
        if (g < Rat(1)) {
            ++seen_lt;
            CHECK(t(A, F1, C) < t(A, F2, C));
            CHECK(t(B, G1, D) < t(B, G2, D));
        } else if (g > Rat(1)) {
            ++seen_gt;
            CHECK(t(A, F2, C) < t(A, F1, C));
            CHECK(t(B, G2, D) < t(B, G1, D));
        } else {
            CHECK(cfg.at(F1) == cfg.at(F2));
            CHECK(cfg.at(G1) == cfg.at(G2));
        }
    }
    CHECK(seen_lt > 10);
    CHECK(seen_gt > 10);
}

TEST_CASE("names")
{
    CHECK(name(A1) == "A'");
    CHECK(point_id_from_name("D'") == D1);
    CHECK(point_id_from_name("Q1") == Q1);
    CHECK_FALSE(point_id_from_name("S").has_value());
    for (std::size_t k = 0; k < kPointCount; ++k) {
        const auto id = static_cast<PointId>(k);
        CHECK(point_id_from_name(name(id)) == id);
    }
}

} // TEST_SUITE
