#include <quadconc/generators.hpp>

#include <quadconc/errors.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace quadconc {

std::uint64_t SplitMix64::mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next()
{
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

std::string to_string(GenShape shape)
{
    switch (shape) {
    case GenShape::Convex: return "convex";
    case GenShape::Concave: return "concave";
    case GenShape::Crossed: return "crossed";
    case GenShape::Any: return "any";
    }
    return "unknown";
}

std::optional<GenShape> gen_shape_from_string(const std::string& text)
{
    for (auto s : {GenShape::Convex, GenShape::Concave, GenShape::Crossed, GenShape::Any}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

SplitMix64 instance_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t stream)
{
    return SplitMix64(SplitMix64::mix(seed + 0x9E3779B97F4A7C15ULL * (2 * index + stream + 1)));
}

void validate(const GenSpec& spec)
{
    if (spec.coordinate_bound < 4) {
        throw GeometryError(ErrorCode::InvalidSpec, "coordinate_bound must be at least 4");
    }
    if (spec.ratio_bound < 1) throw GeometryError(ErrorCode::InvalidSpec, "ratio_bound must be at least 1");
}

namespace {

Rat draw_coordinate(SplitMix64& rng, std::int64_t bound)
{
    const std::int64_t num = rng.uniform(-bound, bound);
    const std::int64_t den = rng.uniform(1, bound);
    return Rat(num, den);
}

Rat draw_positive(SplitMix64& rng, std::int64_t bound)
{
    const std::int64_t num = rng.uniform(1, bound);
    const std::int64_t den = rng.uniform(1, bound);
    return Rat(num, den);
}

using Four = std::array<Point, 4>;

Four draw_four(SplitMix64& rng, std::int64_t bound)
{
    auto pt = [&] {
        Rat x = draw_coordinate(rng, bound);
        Rat y = draw_coordinate(rng, bound);
        return Point::finite(std::move(x), std::move(y));
    };
    Point a = pt(), b = pt(), c = pt(), d = pt();
    return {a, b, c, d};
}

bool distinct(const Four& v)
{
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (v[i] == v[j]) return false;
        }
    }
    return true;
}

// Counter-clockwise angular order about the centroid, computed exactly.
Four sort_by_angle(const Four& v)
{
    Rat cx(0), cy(0);
    for (const auto& p : v) {
        cx += p.affine_x();
        cy += p.affine_y();
    }
    cx /= Rat(4);
    cy /= Rat(4);
    struct Rel {
        Rat x, y;
        int idx;
    };
    std::vector<Rel> rel;
    for (int i = 0; i < 4; ++i) rel.push_back({v[i].affine_x() - cx, v[i].affine_y() - cy, i});
    const auto half = [](const Rel& r) { return (r.y.sign() < 0 || (r.y.is_zero() && r.x.sign() < 0)) ? 1 : 0; };
    std::stable_sort(rel.begin(), rel.end(), [&](const Rel& u, const Rel& w) {
        const int hu = half(u), hw = half(w);
        if (hu != hw) return hu < hw;
        return (u.x * w.y - u.y * w.x).sign() > 0;
    });
    return {v[rel[0].idx], v[rel[1].idx], v[rel[2].idx], v[rel[3].idx]};
}

std::optional<Four> try_convex(SplitMix64& rng, std::int64_t bound)
{
    Four v = draw_four(rng, bound);
    if (!distinct(v)) return std::nullopt;
    Four s = sort_by_angle(v);
    if (classify_quadrilateral(s[0], s[1], s[2], s[3]) != ShapeClass::Convex) return std::nullopt;
    if (orientation(s[0], s[1], s[2]) < 0) return std::nullopt;
    return s;
}

std::optional<Four> try_concave(SplitMix64& rng, std::int64_t bound)
{
    Four v = draw_four(rng, bound);
    if (!distinct(v)) return std::nullopt;
    for (int inner = 0; inner < 4; ++inner) {
        std::array<int, 3> t{};
        for (int i = 0, k = 0; i < 4; ++i) {
            if (i != inner) t[k++] = i;
        }
        const int o = orientation(v[t[0]], v[t[1]], v[t[2]]);
        if (o == 0) return std::nullopt;
        if (o < 0) std::swap(t[1], t[2]);
        const Point& p = v[inner];
        if (orientation(v[t[0]], v[t[1]], p) > 0 && orientation(v[t[1]], v[t[2]], p) > 0 &&
            orientation(v[t[2]], v[t[0]], p) > 0) {
            Four s{v[t[0]], p, v[t[1]], v[t[2]]};
            if (classify_quadrilateral(s[0], s[1], s[2], s[3]) == ShapeClass::Concave) return s;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Four> try_crossed(SplitMix64& rng, std::int64_t bound)
{
    auto convex = try_convex(rng, bound);
    if (!convex) return std::nullopt;
    Four s{(*convex)[0], (*convex)[2], (*convex)[1], (*convex)[3]};
    if (classify_quadrilateral(s[0], s[1], s[2], s[3]) != ShapeClass::Crossed) return std::nullopt;
    return s;
}

std::optional<Four> try_any(SplitMix64& rng, std::int64_t bound)
{
    Four v = draw_four(rng, bound);
    if (!distinct(v) || classify_quadrilateral(v[0], v[1], v[2], v[3]) == ShapeClass::Degenerate) return std::nullopt;
    return v;
}

} // namespace

Quadrilateral gen_quadrilateral(const GenSpec& spec, std::uint64_t index)
{
    validate(spec);
    SplitMix64 rng = instance_stream(spec.seed, index, 0);
    for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
        std::optional<Four> v;
        switch (spec.shape) {
        case GenShape::Convex: v = try_convex(rng, spec.coordinate_bound); break;
        case GenShape::Concave: v = try_concave(rng, spec.coordinate_bound); break;
        case GenShape::Crossed: v = try_crossed(rng, spec.coordinate_bound); break;
        case GenShape::Any: v = try_any(rng, spec.coordinate_bound); break;
        }
        if (v) return Quadrilateral((*v)[0], (*v)[1], (*v)[2], (*v)[3]);
    }
    throw GeometryError(ErrorCode::GenerationExhausted,
                        "no " + to_string(spec.shape) + " quadrilateral after " +
                            std::to_string(kMaxGenerationAttempts) + " attempts");
}

SideRatios gen_ratios(const GenSpec& spec, std::uint64_t index)
{
    validate(spec);
    SplitMix64 rng = instance_stream(spec.seed, index, 1);
    Rat m = draw_positive(rng, spec.ratio_bound);
    Rat n = draw_positive(rng, spec.ratio_bound);
    Rat p = draw_positive(rng, spec.ratio_bound);
    Rat q = draw_positive(rng, spec.ratio_bound);
    if (spec.force_gamma_one) q = (m * n * p).inverse();
    return SideRatios(std::move(m), std::move(n), std::move(p), std::move(q));
}

} // namespace quadconc
