#pragma once

#include "oracle.hpp"

#include <quadconc/configuration.hpp>

namespace quadconc::testing {

inline Rat rat(const char* s) { return Rat::parse(s); }

inline Point F(const char* x, const char* y) { return Point::finite(Rat::parse(x), Rat::parse(y)); }

inline Point to_point(const oracle::P& p) { return Point::finite(Rat(p.x), Rat(p.y)); }

inline oracle::P to_oracle(const Point& p) { return {p.affine_x().raw(), p.affine_y().raw()}; }

inline Quadrilateral unit_square() { return Quadrilateral(F("0", "0"), F("1", "0"), F("1", "1"), F("0", "1")); }

inline SideRatios ratios(const char* m, const char* n, const char* p, const char* q)
{
    return SideRatios(rat(m), rat(n), rat(p), rat(q));
}

} // namespace quadconc::testing
