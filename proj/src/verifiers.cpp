#include <quadconc/verifiers.hpp>

#include <quadconc/errors.hpp>

#include <array>
#include <functional>

namespace quadconc {

namespace {

using enum PointId;

constexpr std::array<std::string_view, 12> kClaimIds{
    "diagonal_collinearity", "seven_lines", "transversal_extension", "corollary8",
    "gamma_one_collapse",    "diagonal_trichotomy", "general_concurrences", "observation2",
    "observation3",          "lemma13",             "proposition14",        "remarks",
};

std::string pname(PointId id) { return std::string(name(id)); }

Rat bool_value(bool b) { return Rat(b ? 1 : 0); }

/// Accumulates failures and degeneracies for one verdict.
class Check {
public:
    Check(Claim claim, const Configuration& cfg) : cfg_(cfg) { verdict_.claim_id = std::string(claim_id(claim)); }

    void fail(const std::string& msg) { fails_.push_back(msg); }
    void degenerate(const std::string& msg) { degens_.push_back(msg); }
    void note(const std::string& msg) { notes_.push_back(msg); }
    void value(const std::string& key, const Rat& v) { verdict_.exact_values.insert_or_assign(key, v); }
    void witness(const std::string& label, const Point& p)
    {
        for (const auto& [l, q] : verdict_.witnesses) {
            if (l == label) return;
        }
        verdict_.witnesses.emplace_back(label, p.canonical());
    }
    void witness(PointId id)
    {
        if (cfg_.has(id)) witness(pname(id), cfg_.at(id));
    }

    bool failed() const { return !fails_.empty(); }

    /// Exact equality of a geometric value against its closed form.
    void expect_equal(const std::string& what, const Rat& geometric, const Rat& formula)
    {
        value(what, geometric);
        value(what + " formula", formula);
        if (geometric != formula) fail(what + " = " + geometric.str() + " but formula gives " + formula.str());
    }

    /// The point if it is defined (and finite when required); otherwise records
    /// a degeneracy and returns nullptr.
    const Point* point(PointId id, bool finite = true)
    {
        const auto& p = cfg_.get(id);
        if (!p) {
            degenerate(pname(id) + " is undefined");
            return nullptr;
        }
        if (finite && p->is_ideal()) {
            degenerate(pname(id) + " is ideal");
            return nullptr;
        }
        return &*p;
    }

    std::optional<Line> line(PointId a, PointId b)
    {
        const std::string label = pname(a) + pname(b);
        const auto& p = cfg_.get(a);
        const auto& q = cfg_.get(b);
        if (!p || !q) {
            degenerate("line " + label + " is undefined (" + pname(!p ? a : b) + " is undefined)");
            return std::nullopt;
        }
        if (*p == *q) {
            degenerate("line " + label + " is undefined (" + pname(a) + " = " + pname(b) + ")");
            return std::nullopt;
        }
        if (p->is_ideal() && q->is_ideal()) {
            degenerate("line " + label + " is the line at infinity");
            return std::nullopt;
        }
        return line_through(*p, *q);
    }

    /// Exact concurrence of the listed lines (missing ones already reported as
    /// degenerate). Duplicate lines are merged first and only noted; the claim
    /// turns degenerate when fewer than three distinct lines are left. When
    /// `expected` is given the common point must equal it.
    std::optional<Point> concurrence(const std::string& label,
                                     const std::vector<std::pair<std::string, std::optional<Line>>>& lines,
                                     const Point* expected)
    {
        std::vector<Line> distinct;
        std::vector<std::string> names;
        for (const auto& [lname, l] : lines) {
            if (!l) continue;
            bool dup = false;
            for (std::size_t i = 0; i < distinct.size(); ++i) {
                if (distinct[i] == *l) {
                    note(label + ": lines " + names[i] + " and " + lname + " coincide");
                    dup = true;
                    break;
                }
            }
            if (!dup) {
                distinct.push_back(*l);
                names.push_back(lname);
            }
        }
        if (distinct.size() < 2) {
            degenerate(label + ": fewer than two distinct lines remain");
            return std::nullopt;
        }
        std::optional<Point> common;
        if (distinct.size() == 2) {
            degenerate(label + ": only two distinct lines remain");
            common = meet(distinct[0], distinct[1]);
        } else {
            common = concurrent(distinct);
            if (!common) {
                fail(label + ": lines are not concurrent");
                return std::nullopt;
            }
        }
        if (expected && *common != *expected) {
            fail(label + ": common point " + common->str() + " differs from " + expected->str());
        }
        return common;
    }

    Verdict finish()
    {
        std::string detail;
        auto append = [&detail](const std::string& prefix, const std::vector<std::string>& items) {
            for (const auto& s : items) {
                if (!detail.empty()) detail += "; ";
                detail += prefix + s;
            }
        };
        if (!fails_.empty()) {
            verdict_.status = Status::Fail;
        } else if (!degens_.empty()) {
            verdict_.status = Status::Degenerate;
        } else {
            verdict_.status = Status::Pass;
        }
        append("FAIL ", fails_);
        append("degenerate: ", degens_);
        append("", notes_);
        verdict_.detail = detail;
        return std::move(verdict_);
    }

    Verdict skip(const std::string& reason)
    {
        verdict_.status = Status::Skipped;
        verdict_.detail = reason;
        verdict_.witnesses.clear();
        verdict_.exact_values.clear();
        return std::move(verdict_);
    }

private:
    const Configuration& cfg_;
    Verdict verdict_;
    std::vector<std::string> fails_, degens_, notes_;
};

std::optional<Rat> quotient(const Rat& a, const Rat& b)
{
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

/// Directed ratio first-K / K-second, or empty (with a degeneracy) when the
/// three points cannot give a finite ratio.
std::optional<Rat> ratio_on(Check& c, PointId first, PointId k, PointId second)
{
    const Point* a = c.point(first);
    const Point* p = c.point(k);
    const Point* b = c.point(second);
    if (!a || !p || !b) return std::nullopt;
    if (*a == *b) {
        c.degenerate(pname(first) + " = " + pname(second));
        return std::nullopt;
    }
    if (*p == *b) {
        c.degenerate(pname(k) + " = " + pname(second));
        return std::nullopt;
    }
    if (!collinear(*a, *p, *b)) {
        c.fail(pname(k) + " is not on line " + pname(first) + pname(second));
        return std::nullopt;
    }
    return directed_ratio(*a, *p, *b);
}

bool convex(const Configuration& cfg) { return cfg.quad().shape() == ShapeClass::Convex; }

const char* kGammaNotOne = "GammaNotOne: claim requires m*n*p*q = 1";

} // namespace

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Degenerate: return "degenerate";
    case Status::Skipped: return "skipped";
    }
    return "unknown";
}

std::string_view claim_id(Claim claim) { return kClaimIds[static_cast<std::size_t>(claim)]; }

std::optional<Claim> claim_from_id(std::string_view id)
{
    for (std::size_t i = 0; i < kClaimIds.size(); ++i) {
        if (kClaimIds[i] == id) return static_cast<Claim>(i);
    }
    return std::nullopt;
}

const std::vector<Claim>& all_claims()
{
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> out;
        for (std::size_t i = 0; i < kClaimIds.size(); ++i) out.push_back(static_cast<Claim>(i));
        return out;
    }();
    return claims;
}

Verdict verify_diagonal_collinearity(const Configuration& cfg)
{
    Check c(Claim::DiagonalCollinearity, cfg);
    if (!cfg.ratios().gamma_is_one()) return c.skip(kGammaNotOne);
    const auto triple = [&](PointId p, PointId q) {
        const Point* a = c.point(p, false);
        const Point* o = c.point(O, false);
        const Point* b = c.point(q, false);
        if (!a || !o || !b) return;
        if (*a == *b || *a == *o || *b == *o) {
            c.degenerate(pname(p) + ", O, " + pname(q) + " are not distinct");
            return;
        }
        const bool ok = collinear(*a, *o, *b);
        c.value(pname(p) + pname(q) + " through O", bool_value(ok));
        if (!ok) c.fail(pname(p) + ", O, " + pname(q) + " are not collinear");
    };
    triple(X, Z);
    triple(Y, T);
    for (auto id : {O, X, Y, Z, T}) c.witness(id);
    return c.finish();
}

Verdict verify_seven_lines(const Configuration& cfg)
{
    Check c(Claim::SevenLines, cfg);
    if (!cfg.ratios().gamma_is_one()) return c.skip(kGammaNotOne);
    const SideRatios& r = cfg.ratios();

    for (auto [a, b] : {std::pair{F1, F2}, std::pair{G1, G2}}) {
        const Point* p = c.point(a, false);
        const Point* q = c.point(b, false);
        if (p && q && *p != *q) c.fail(pname(a) + " != " + pname(b));
    }
    if (c.failed()) return c.finish();

    const Point* e = c.point(E, false);
    std::vector<std::pair<std::string, std::optional<Line>>> lines{
        {"AA'", c.line(A, A1)}, {"BB'", c.line(B, B1)}, {"CC'", c.line(C, C1)}, {"DD'", c.line(D, D1)},
        {"MP", c.line(M, P)},   {"NQ", c.line(N, Q)},   {"FG", c.line(F1, G1)},
    };
    const auto common = c.concurrence("seven lines", lines, e);
    if (common) c.witness("E", *common);

    // FE/EG along FG, F = F1 and G = G1.
    if (e && cfg.has(F1) && cfg.has(G1) && cfg.at(F1) != cfg.at(G1)) {
        if (const auto fe_eg = ratio_on(c, F1, E, G1)) {
            if (const auto formula = quotient(r.m() * (Rat(1) + r.n() * r.p()), Rat(1) + r.m() * r.n())) {
                c.expect_equal("FE/EG", *fe_eg, *formula);
            } else {
                c.degenerate("1 + mn = 0");
            }
            if (convex(cfg) && !on_closed_segment(cfg.at(F1), cfg.at(G1), *e)) c.fail("E is not on segment [FG]");
        }
    }
    for (auto id : {F1, G1}) c.witness(id);
    return c.finish();
}

Verdict verify_transversal_extension(const Configuration& cfg)
{
    Check c(Claim::TransversalExtension, cfg);
    if (!cfg.ratios().gamma_is_one()) return c.skip(kGammaNotOne);
    const SideRatios& r = cfg.ratios();
    const Rat one(1);

    // ME/EP = AQ/QD * MB/AB + BN/NC * MA/AB
    const auto me_ep = ratio_on(c, M, E, P);
    const Rat formula1 = r.q().inverse() * (one / (r.m() + one)) + r.n() * (r.m() / (r.m() + one));
    if (me_ep) c.expect_equal("ME/EP", *me_ep, formula1);

    // NE/EQ = BM/MA * NC/BC + CP/PD * NB/BC
    const auto ne_eq = ratio_on(c, N, E, Q);
    const Rat formula2 = r.m().inverse() * (one / (r.n() + one)) + r.p() * (r.n() / (r.n() + one));
    if (ne_eq) c.expect_equal("NE/EQ", *ne_eq, formula2);

    // AQ/QD = BN/NC and AM/MB = DP/PC give ME/EP = AQ/QD, NE/EQ = BM/MA.
    const bool special = r.q().inverse() == r.n() && r.m() == r.p().inverse();
    c.value("symmetric_case", bool_value(special));
    if (special) {
        if (me_ep && *me_ep != r.q().inverse()) c.fail("ME/EP != AQ/QD in the symmetric case");
        if (ne_eq && *ne_eq != r.m().inverse()) c.fail("NE/EQ != BM/MA in the symmetric case");
    }
    c.witness(E);
    return c.finish();
}

Verdict verify_corollary8(const Configuration& cfg)
{
    Check c(Claim::Corollary8, cfg);
    if (!cfg.ratios().gamma_is_one()) return c.skip(kGammaNotOne);
    const Point* e = c.point(E, false);
    const Point* cp = c.point(C1, false);
    if (e && cp) {
        const Point& a = cfg.at(A);
        const Point& cc = cfg.at(C);
        const bool e_on = collinear(a, cc, *e);
        const bool c_on = collinear(a, cc, *cp);
        c.value("E on AC", bool_value(e_on));
        c.value("C' on AC", bool_value(c_on));
        if (e_on != c_on) c.fail("MP, NQ, AC concurrent is " + std::string(e_on ? "true" : "false") +
                                 " but DM, BQ, AC concurrent is " + std::string(c_on ? "true" : "false"));
    }
    c.witness(E);
    c.witness(C1);
    return c.finish();
}

Verdict verify_gamma_one_collapse(const Configuration& cfg)
{
    Check c(Claim::GammaOneCollapse, cfg);
    if (!cfg.ratios().gamma_is_one()) return c.skip(kGammaNotOne);
    const Point* e = c.point(E, false);
    for (auto id : {M1, N1, P1, Q1}) {
        const Point* p = c.point(id, false);
        if (e && p && *p != *e) c.fail(pname(id) + " = " + p->str() + " differs from E = " + e->str());
    }
    c.witness(E);
    return c.finish();
}

Verdict verify_diagonal_trichotomy(const Configuration& cfg)
{
    Check c(Claim::DiagonalTrichotomy, cfg);
    const SideRatios& r = cfg.ratios();
    const Rat& gamma = r.gamma();

    const auto af1 = ratio_on(c, A, F1, C);
    const auto af2 = ratio_on(c, A, F2, C);
    const auto bg1 = ratio_on(c, B, G1, D);
    const auto bg2 = ratio_on(c, B, G2, D);
    if (af1) c.expect_equal("AF1/F1C", *af1, r.m() * r.n());
    if (bg1) c.expect_equal("BG1/G1D", *bg1, r.n() * r.p());
    if (af2) c.expect_equal("AF2/F2C", *af2, (r.p() * r.q()).inverse());
    if (bg2) c.expect_equal("BG2/G2D", *bg2, (r.m() * r.q()).inverse());

    if (af1 && af2) {
        if (af2->is_zero()) {
            c.degenerate("F2 = A");
        } else {
            c.expect_equal("AF1/F1C * CF2/F2A", *af1 * af2->inverse(), gamma);
        }
    }
    if (bg1 && bg2) {
        if (bg2->is_zero()) {
            c.degenerate("G2 = B");
        } else {
            c.expect_equal("BG1/G1D * DG2/G2B", *bg1 * bg2->inverse(), gamma);
        }
    }

    if (convex(cfg) && af1 && af2 && bg1 && bg2) {
        const Rat tf1 = affine_parameter(cfg.at(A), cfg.at(F1), cfg.at(C));
        const Rat tf2 = affine_parameter(cfg.at(A), cfg.at(F2), cfg.at(C));
        const Rat tg1 = affine_parameter(cfg.at(B), cfg.at(G1), cfg.at(D));
        const Rat tg2 = affine_parameter(cfg.at(B), cfg.at(G2), cfg.at(D));
        const Rat zero(0), one(1);
        const auto inside = [&](const Rat& t) { return zero < t && t < one; };
        if (!inside(tf1) || !inside(tf2) || !inside(tg1) || !inside(tg2)) c.fail("F or G point outside its diagonal");
        const int cmp = (gamma < one) ? -1 : (gamma > one ? 1 : 0);
        c.value("gamma vs 1", Rat(cmp));
        if (cmp < 0 && !(tf1 < tf2 && tg1 < tg2)) c.fail("gamma < 1 but order is not A,F1,F2,C / B,G1,G2,D");
        if (cmp > 0 && !(tf2 < tf1 && tg2 < tg1)) c.fail("gamma > 1 but order is not A,F2,F1,C / B,G2,G1,D");
        if (cmp == 0 && !(tf1 == tf2 && tg1 == tg2)) c.fail("gamma = 1 but F1 != F2 or G1 != G2");
    }
    for (auto id : {F1, F2, G1, G2}) c.witness(id);
    return c.finish();
}

namespace {

struct Quadruple {
    PointId point;
    PointId first, second; // the diagonal pair, e.g. F1 G1
    std::array<std::pair<PointId, PointId>, 3> lines;
    std::array<const char*, 3> line_names;
};

const std::array<Quadruple, 4>& quadruples()
{
    static const std::array<Quadruple, 4> q{{
        {M1, F1, G1, {{{D, D1}, {A, A1}, {M, P}}}, {"DD'", "AA'", "MP"}},
        {N1, G1, F2, {{{A, A1}, {B, B1}, {N, Q}}}, {"AA'", "BB'", "NQ"}},
        {P1, F2, G2, {{{B, B1}, {C, C1}, {M, P}}}, {"BB'", "CC'", "MP"}},
        {Q1, G2, F1, {{{C, C1}, {D, D1}, {N, Q}}}, {"CC'", "DD'", "NQ"}},
    }};
    return q;
}

// first K / K second for the quadruple point K, cycling m -> n -> p -> q.
Rat quadruple_ratio_formula(const SideRatios& r, int k)
{
    const std::array<Rat, 4> v{r.m(), r.n(), r.p(), r.q()};
    const Rat& a = v[k];
    const Rat& b = v[(k + 1) % 4];
    const Rat& c = v[(k + 2) % 4];
    return a * (b * c + Rat(1)) / (a * b + Rat(1));
}

} // namespace

Verdict verify_general_concurrences(const Configuration& cfg)
{
    Check c(Claim::GeneralConcurrences, cfg);
    const auto& quads = quadruples();
    for (int k = 0; k < 4; ++k) {
        const Quadruple& qd = quads[k];
        const std::string label = pname(qd.point);
        const Point* expected = c.point(qd.point, false);
        if (!expected) continue;
        std::vector<std::pair<std::string, std::optional<Line>>> lines;
        lines.emplace_back(pname(qd.first) + pname(qd.second), c.line(qd.first, qd.second));
        for (int i = 0; i < 3; ++i) lines.emplace_back(qd.line_names[i], c.line(qd.lines[i].first, qd.lines[i].second));
        c.concurrence(label, lines, expected);
        c.witness(qd.point);

        const auto& f = cfg.get(qd.first);
        const auto& g = cfg.get(qd.second);
        if (f && g && *f != *g) {
            const std::string key = pname(qd.first) + label + "/" + label + pname(qd.second);
            if (const auto ratio = ratio_on(c, qd.first, qd.point, qd.second)) {
                try {
                    c.expect_equal(key, *ratio, quadruple_ratio_formula(cfg.ratios(), k));
                } catch (const GeometryError&) {
                    c.degenerate(key + " formula has a zero denominator");
                }
            }
        }
    }
    return c.finish();
}

Verdict verify_observation2(const Configuration& cfg)
{
    Check c(Claim::Observation2, cfg);
    Rat product(1);
    bool complete = true;
    for (const Quadruple& qd : quadruples()) {
        const auto ratio = ratio_on(c, qd.first, qd.point, qd.second);
        if (!ratio) {
            complete = false;
            continue;
        }
        c.value(pname(qd.first) + pname(qd.point) + "/" + pname(qd.point) + pname(qd.second), *ratio);
        product *= *ratio;
    }
    if (complete) c.expect_equal("product", product, cfg.ratios().gamma());
    return c.finish();
}

Verdict verify_observation3(const Configuration& cfg)
{
    Check c(Claim::Observation3, cfg);
    const SideRatios& r = cfg.ratios();
    const std::array<Rat, 4> v{r.m(), r.n(), r.p(), r.q()};
    // (start, K, end) for MM1/M1P, NN1/N1Q, PP1/P1M, QQ1/Q1N.
    const std::array<std::array<PointId, 3>, 4> chains{{{M, M1, P}, {N, N1, Q}, {P, P1, M}, {Q, Q1, N}}};
    for (int k = 0; k < 4; ++k) {
        const auto& [s, kp, e] = chains[k];
        const Rat& a = v[k];
        const Rat& b = v[(k + 1) % 4];
        const Rat& cc = v[(k + 2) % 4];
        const Rat& d = v[(k + 3) % 4];
        const Rat product_form = a * b * (cc + Rat(1)) / (a + Rat(1));
        const std::string key = pname(s) + pname(kp) + "/" + pname(kp) + pname(e);
        if (k == 0) {
            // gamma * AQ/QD * MB/AB + BN/NC * MA/AB
            const Rat gamma_form = r.gamma() * d.inverse() / (a + Rat(1)) + b * a / (a + Rat(1));
            c.value(key + " gamma form", gamma_form);
            if (gamma_form != product_form) c.fail("gamma form " + gamma_form.str() + " != " + product_form.str());
        }
        if (const auto ratio = ratio_on(c, s, kp, e)) c.expect_equal(key, *ratio, product_form);
        c.witness(kp);
    }
    return c.finish();
}

namespace {

void check_lemma13(Check& c, const Configuration& cfg)
{
    const SideRatios& r = cfg.ratios();
    const auto& rr = cfg.r_ratio();
    if (!rr) {
        c.degenerate("r is undefined (R undefined or R = B)");
        return;
    }
    const auto& rpt = cfg.get(R);
    Rat rcase(3);
    if (rpt && rpt->is_finite()) {
        const Rat t = affine_parameter(cfg.at(A), *rpt, cfg.at(B));
        rcase = t.sign() < 0 ? Rat(1) : (t > Rat(1) ? Rat(2) : Rat(0));
        c.witness("R", *rpt);
    }
    c.value("r", *rr);
    c.value("R case", rcase);
    if (const auto me_ep = ratio_on(c, M, E, P)) {
        const Rat base = r.m() * r.n() * (r.p() + Rat(1)) / (r.m() + Rat(1));
        if (const auto corr = quotient(*rr + r.m(), r.gamma() * *rr + r.m())) {
            c.expect_equal("ME/EP", *me_ep, base * *corr);
        } else {
            c.degenerate("gamma r + m = 0");
        }
    }
    c.witness(E);
}

} // namespace

Verdict verify_lemma13(const Configuration& cfg)
{
    Check c(Claim::Lemma13, cfg);
    // RA/RB is the unsigned convention of the convex setting; with R inside
    // segment AB (possible only for non-convex shapes) the identity breaks.
    if (!convex(cfg)) return c.skip("requires a convex quadrilateral");
    check_lemma13(c, cfg);
    return c.finish();
}

Verdict verify_proposition14(const Configuration& cfg)
{
    Check c(Claim::Proposition14, cfg);
    if (!convex(cfg)) return c.skip("requires a convex quadrilateral");
    std::array<const Point*, 5> pts{c.point(M1), c.point(N1), c.point(P1), c.point(Q1), c.point(E)};
    for (auto id : {M1, N1, P1, Q1, E}) c.witness(id);
    if (std::find(pts.begin(), pts.end(), nullptr) != pts.end()) return c.finish();
    const Point& e = *pts[4];

    const bool on_mp = on_closed_segment(*pts[0], *pts[2], e);
    const bool on_nq = on_closed_segment(*pts[1], *pts[3], e);
    c.value("E on [M1P1]", bool_value(on_mp));
    c.value("E on [N1Q1]", bool_value(on_nq));
    if (!on_mp) c.fail("E is not on segment [M1P1]");
    if (!on_nq) c.fail("E is not on segment [N1Q1]");

    const Rat& gamma = cfg.ratios().gamma();
    const Rat zero(0), one(1);
    // Along start -> end: gamma < 1 gives start-K-E-L-end, gamma > 1 gives
    // start-L-E-K-end, gamma = 1 collapses K = E = L.
    const auto order = [&](PointId start, PointId k, PointId l, PointId end) {
        const Point& s = cfg.at(start);
        const Point& f = cfg.at(end);
        const Rat tk = affine_parameter(s, cfg.at(k), f);
        const Rat te = affine_parameter(s, e, f);
        const Rat tl = affine_parameter(s, cfg.at(l), f);
        const std::string seq = pname(start) + "-" + pname(k) + "-E-" + pname(l) + "-" + pname(end);
        if (gamma < one) {
            if (!(zero < tk && tk < te && te < tl && tl < one)) c.fail("gamma < 1 but order is not " + seq);
        } else if (gamma > one) {
            if (!(zero < tl && tl < te && te < tk && tk < one)) {
                c.fail("gamma > 1 but order is not " + pname(start) + "-" + pname(l) + "-E-" + pname(k) + "-" +
                       pname(end));
            }
        } else if (!(tk == te && tl == te && zero < te && te < one)) {
            c.fail("gamma = 1 but " + pname(k) + ", E, " + pname(l) + " do not collapse");
        }
    };
    order(M, M1, P1, P);
    order(N, N1, Q1, Q);
    if (gamma == one) c.note("M1N1P1Q1 collapses to the point E");
    return c.finish();
}

std::optional<bool> quadruple_points_convex(const Configuration& cfg)
{
    std::array<const Point*, 4> pts{};
    const std::array<PointId, 4> ids{M1, N1, P1, Q1};
    for (int i = 0; i < 4; ++i) {
        const auto& p = cfg.get(ids[i]);
        if (!p || p->is_ideal()) return std::nullopt;
        pts[i] = &*p;
    }
    return closed_segments_intersect(*pts[0], *pts[2], *pts[1], *pts[3]);
}

RemarksOutcome evaluate_remarks(const Configuration& cfg)
{
    RemarksOutcome out;
    out.theorem_verdicts.push_back(verify_seven_lines(cfg));
    out.theorem_verdicts.push_back(verify_transversal_extension(cfg));
    out.theorem_verdicts.push_back(verify_general_concurrences(cfg));
    out.quadruple_convex = quadruple_points_convex(cfg);
    Check lemma(Claim::Lemma13, cfg);
    check_lemma13(lemma, cfg);
    const Verdict v = lemma.finish();
    if (v.status != Status::Degenerate) out.lemma13_holds = v.status == Status::Pass;
    return out;
}

Verdict verify_remarks(const Configuration& cfg)
{
    Check c(Claim::Remarks, cfg);
    if (convex(cfg)) return c.skip("requires a concave or crossed quadrilateral");
    const RemarksOutcome out = evaluate_remarks(cfg);
    for (const Verdict& v : out.theorem_verdicts) {
        c.note(v.claim_id + " " + std::string(to_string(v.status)));
        if (v.status == Status::Fail) c.fail(v.claim_id + " does not hold");
        if (v.status == Status::Degenerate) c.degenerate(v.claim_id + " is degenerate");
    }
    if (out.quadruple_convex) {
        c.value("M1N1P1Q1 convex", bool_value(*out.quadruple_convex));
        c.note(*out.quadruple_convex ? "M1N1P1Q1 is convex" : "M1N1P1Q1 is not convex");
    } else {
        c.note("M1N1P1Q1 convexity undetermined");
    }
    if (out.lemma13_holds) {
        c.value("lemma13 holds", bool_value(*out.lemma13_holds));
        if (!*out.lemma13_holds) c.note("ME/EP formula with unsigned r does not hold");
    }
    return c.finish();
}

Verdict verify(Claim claim, const Configuration& cfg)
{
    using Fn = Verdict (*)(const Configuration&);
    static constexpr std::array<Fn, 12> table{
        verify_diagonal_collinearity, verify_seven_lines,   verify_transversal_extension, verify_corollary8,
        verify_gamma_one_collapse,    verify_diagonal_trichotomy, verify_general_concurrences, verify_observation2,
        verify_observation3,          verify_lemma13,       verify_proposition14,         verify_remarks,
    };
    try {
        return table[static_cast<std::size_t>(claim)](cfg);
    } catch (const GeometryError& err) {
        // A verifier only throws when a configuration invariant is broken.
        Verdict v;
        v.claim_id = std::string(claim_id(claim));
        v.status = Status::Fail;
        v.detail = std::string("internal error: ") + err.what();
        return v;
    }
}

std::vector<Verdict> verify_all(const Configuration& cfg)
{
    std::vector<Verdict> out;
    for (Claim claim : all_claims()) out.push_back(verify(claim, cfg));
    return out;
}

std::vector<Verdict> verify_all(const Quadrilateral& quad, const SideRatios& ratios)
{
    if (quad.shape() == ShapeClass::Degenerate) {
        std::vector<Verdict> out;
        for (Claim claim : all_claims()) {
            Verdict v;
            v.claim_id = std::string(claim_id(claim));
            v.status = Status::Degenerate;
            v.detail = "DegenerateQuadrilateral: three vertices are collinear";
            out.push_back(std::move(v));
        }
        return out;
    }
    return verify_all(build_from_ratios(quad, ratios));
}

Status overall_status(const std::vector<Verdict>& verdicts)
{
    Status out = Status::Pass;
    for (const Verdict& v : verdicts) {
        if (v.status == Status::Fail) return Status::Fail;
        if (v.status == Status::Degenerate) out = Status::Degenerate;
    }
    return out;
}

} // namespace quadconc
