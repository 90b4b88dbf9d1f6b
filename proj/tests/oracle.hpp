#pragma once

// Reference computations for tests. Everything here works on affine
// coordinates with raw mpq_class and closed-form Cramer solves, so it shares
// no code with the library's homogeneous kernel.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace oracle {

struct P {
    mpq_class x, y;
    friend bool operator==(const P& a, const P& b) { return a.x == b.x && a.y == b.y; }
};

inline P pt(const char* x, const char* y) { return {mpq_class(x), mpq_class(y)}; }

inline mpq_class q(const char* s) { return mpq_class(s); }

inline mpq_class cross(const P& o, const P& a, const P& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_line(const P& a, const P& b, const P& c) { return cross(a, b, c) == 0; }

// Intersection of line p1p2 with line p3p4; empty when parallel.
inline std::optional<P> meet(const P& p1, const P& p2, const P& p3, const P& p4)
{
    const mpq_class a1 = p2.y - p1.y, b1 = p1.x - p2.x, c1 = a1 * p1.x + b1 * p1.y;
    const mpq_class a2 = p4.y - p3.y, b2 = p3.x - p4.x, c2 = a2 * p3.x + b2 * p3.y;
    const mpq_class det = a1 * b2 - a2 * b1;
    if (det == 0) return std::nullopt;
    return P{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

inline P must_meet(const P& p1, const P& p2, const P& p3, const P& p4)
{
    auto r = meet(p1, p2, p3, p4);
    if (!r) throw std::logic_error("oracle: parallel lines");
    return *r;
}

// AX/XB = r.
inline P divide(const P& a, const P& b, const mpq_class& r)
{
    return {(a.x + r * b.x) / (1 + r), (a.y + r * b.y) / (1 + r)};
}

// t with x = a + t (b - a); uses whichever coordinate differs.
inline mpq_class param(const P& a, const P& x, const P& b)
{
    if (a.x != b.x) return (x.x - a.x) / (b.x - a.x);
    return (x.y - a.y) / (b.y - a.y);
}

inline mpq_class ratio(const P& a, const P& x, const P& b)
{
    const mpq_class t = param(a, x, b);
    return t / (1 - t);
}

// The named points of the construction, computed straight from the
// definitions. Throws on parallel defining lines.
struct Config {
    P A, B, C, D, M, N, Pp, Q, O, X, Y, Z, T, A1, B1, C1, D1, F1, G1, F2, G2, E, M1, N1, P1, Q1;
    std::optional<P> R;
};

inline Config build(const P& A, const P& B, const P& C, const P& D, const mpq_class& m, const mpq_class& n,
                    const mpq_class& p, const mpq_class& qq)
{
    Config c;
    c.A = A, c.B = B, c.C = C, c.D = D;
    c.M = divide(A, B, m);
    c.N = divide(B, C, n);
    c.Pp = divide(C, D, p);
    c.Q = divide(D, A, qq);
    c.O = must_meet(A, C, B, D);
    c.X = must_meet(A, c.N, B, c.Q);
    c.Z = must_meet(D, c.N, C, c.Q);
    c.Y = must_meet(C, c.M, B, c.Pp);
    c.T = must_meet(A, c.Pp, D, c.M);
    c.A1 = must_meet(B, c.Pp, D, c.N);
    c.B1 = must_meet(A, c.Pp, C, c.Q);
    c.C1 = must_meet(B, c.Q, D, c.M);
    c.D1 = must_meet(A, c.N, C, c.M);
    c.F1 = must_meet(B, c.D1, A, C);
    c.G1 = must_meet(C, c.A1, B, D);
    c.F2 = must_meet(D, c.B1, A, C);
    c.G2 = must_meet(A, c.C1, B, D);
    c.E = must_meet(c.M, c.Pp, c.N, c.Q);
    c.M1 = must_meet(A, c.A1, D, c.D1);
    c.N1 = must_meet(A, c.A1, B, c.B1);
    c.P1 = must_meet(B, c.B1, C, c.C1);
    c.Q1 = must_meet(C, c.C1, D, c.D1);
    c.R = meet(c.N, c.Q, A, B);
    return c;
}

} // namespace oracle
