#include <quadconc/svg.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace quadconc {

namespace {

using enum PointId;

constexpr std::array<std::string_view, 6> kLayerNames{"sides", "diagonals", "seven", "fg", "quadruple", "labels"};

struct Vec {
    double x, y;
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class Canvas {
public:
    explicit Canvas(const Configuration& cfg) : cfg_(cfg)
    {
        double minx = 0, maxx = 0, miny = 0, maxy = 0;
        bool first = true;
        for (auto id : {A, B, C, D}) {
            const Vec v = world(cfg.at(id));
            if (first) {
                minx = maxx = v.x;
                miny = maxy = v.y;
                first = false;
            }
            minx = std::min(minx, v.x);
            maxx = std::max(maxx, v.x);
            miny = std::min(miny, v.y);
            maxy = std::max(maxy, v.y);
        }
        const double extent = std::max(maxx - minx, maxy - miny);
        pad_ = 0.12 * extent;
        minx_ = minx;
        maxy_ = maxy;
        scale_ = kWidth / (maxx - minx + 2 * pad_);
        height_ = (maxy - miny + 2 * pad_) * scale_;
    }

    static Vec world(const Point& p) { return {p.affine_x().to_double(), p.affine_y().to_double()}; }

    Vec screen(const Point& p) const
    {
        const Vec w = world(p);
        return {(w.x - minx_ + pad_) * scale_, (maxy_ + pad_ - w.y) * scale_};
    }

    bool drawable(PointId id) const
    {
        const auto& p = cfg_.get(id);
        return p && p->is_finite();
    }

    double height() const { return height_; }

    static constexpr double kWidth = 800.0;

private:
    const Configuration& cfg_;
    double minx_ = 0, maxy_ = 0, pad_ = 1, scale_ = 1, height_ = 800;
};

class Writer {
public:
    Writer(const Configuration& cfg, const Canvas& canvas) : cfg_(cfg), canvas_(canvas) {}

    void open_group(std::string_view id, std::string_view stroke, std::string_view extra = "")
    {
        out_ << "  <g id=\"layer-" << id << "\" stroke=\"" << stroke << "\" fill=\"none\"" << extra << ">\n";
    }
    void close_group() { out_ << "  </g>\n"; }

    void segment(const Vec& a, const Vec& b, std::string_view label)
    {
        out_ << "    <line data-name=\"" << label << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
             << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
    }

    /// Draws the stretch of the line through `ends` that covers every point in
    /// `ends` and `extra`.
    void line_span(PointId p, PointId q, std::initializer_list<PointId> extra, std::string_view label)
    {
        if (!canvas_.drawable(p) || !canvas_.drawable(q) || cfg_.at(p) == cfg_.at(q)) return;
        const Vec a = canvas_.screen(cfg_.at(p));
        const Vec b = canvas_.screen(cfg_.at(q));
        const Vec dir{b.x - a.x, b.y - a.y};
        double lo = 0, hi = 1;
        const double len2 = dir.x * dir.x + dir.y * dir.y;
        for (PointId id : extra) {
            if (!canvas_.drawable(id) || !collinear(cfg_.at(p), cfg_.at(q), cfg_.at(id))) continue;
            const Vec v = canvas_.screen(cfg_.at(id));
            const double t = ((v.x - a.x) * dir.x + (v.y - a.y) * dir.y) / len2;
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        segment({a.x + lo * dir.x, a.y + lo * dir.y}, {a.x + hi * dir.x, a.y + hi * dir.y}, label);
    }

    void polygon(std::initializer_list<PointId> ids, std::string_view label)
    {
        std::string pts;
        for (PointId id : ids) {
            if (!canvas_.drawable(id)) return;
            const Vec v = canvas_.screen(cfg_.at(id));
            if (!pts.empty()) pts += ' ';
            pts += num(v.x) + "," + num(v.y);
        }
        out_ << "    <polygon data-name=\"" << label << "\" points=\"" << pts << "\"/>\n";
    }

    void marker(PointId id)
    {
        if (!canvas_.drawable(id)) return;
        const Vec v = canvas_.screen(cfg_.at(id));
        out_ << "    <circle data-name=\"" << name(id) << "\" cx=\"" << num(v.x) << "\" cy=\"" << num(v.y)
             << "\" r=\"3\"/>\n";
        marked_.push_back(id);
    }

    void labels()
    {
        std::sort(marked_.begin(), marked_.end());
        marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
        for (PointId id : marked_) {
            const Vec v = canvas_.screen(cfg_.at(id));
            out_ << "    <text x=\"" << num(v.x + 5) << "\" y=\"" << num(v.y - 5) << "\">" << name(id) << "</text>\n";
        }
    }

    std::ostringstream& out() { return out_; }

private:
    const Configuration& cfg_;
    const Canvas& canvas_;
    std::ostringstream out_;
    std::vector<PointId> marked_;
};

} // namespace

std::string_view to_string(Layer layer) { return kLayerNames[static_cast<std::size_t>(layer)]; }

std::optional<Layer> layer_from_string(std::string_view text)
{
    for (std::size_t i = 0; i < kLayerNames.size(); ++i) {
        if (kLayerNames[i] == text) return static_cast<Layer>(i);
    }
    return std::nullopt;
}

std::set<Layer> all_layers()
{
    return {Layer::Sides, Layer::Diagonals, Layer::SevenLines, Layer::FGPoints, Layer::Quadruple, Layer::Labels};
}

std::string render_svg(const Configuration& cfg, const std::set<Layer>& layers)
{
    const Canvas canvas(cfg);
    Writer w(cfg, canvas);
    auto& out = w.out();
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(Canvas::kWidth) << "\" height=\""
        << num(canvas.height()) << "\" viewBox=\"0 0 " << num(Canvas::kWidth) << " " << num(canvas.height())
        << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const bool gamma_one = cfg.ratios().gamma_is_one();

    if (layers.count(Layer::Diagonals)) {
        w.open_group("diagonals", "#888888", " stroke-dasharray=\"6 4\"");
        w.line_span(A, C, {O}, "AC");
        w.line_span(B, D, {O}, "BD");
        w.marker(O);
        w.close_group();
    }
    if (layers.count(Layer::SevenLines)) {
        w.open_group("seven", "#c0392b", " stroke-width=\"1\"");
        const std::initializer_list<PointId> through{E, M1, N1, P1, Q1};
        w.line_span(A, A1, through, "AA'");
        w.line_span(B, B1, through, "BB'");
        w.line_span(C, C1, through, "CC'");
        w.line_span(D, D1, through, "DD'");
        w.line_span(M, P, through, "MP");
        w.line_span(N, Q, through, "NQ");
        if (gamma_one) w.line_span(F1, G1, through, "FG");
        for (auto id : {A1, B1, C1, D1, E}) w.marker(id);
        w.close_group();
    }
    if (layers.count(Layer::FGPoints)) {
        w.open_group("fg", "#2471a3");
        w.line_span(F1, G1, {M1}, "F1G1");
        w.line_span(G1, F2, {N1}, "G1F2");
        w.line_span(F2, G2, {P1}, "F2G2");
        w.line_span(G2, F1, {Q1}, "G2F1");
        for (auto id : {F1, G1, F2, G2}) w.marker(id);
        w.close_group();
    }
    if (layers.count(Layer::Quadruple)) {
        w.open_group("quadruple", "#27ae60", " stroke-width=\"1.5\"");
        w.polygon({M1, N1, P1, Q1}, "M1N1P1Q1");
        for (auto id : {M1, N1, P1, Q1}) w.marker(id);
        w.close_group();
    }
    if (layers.count(Layer::Sides)) {
        w.open_group("sides", "#000000", " stroke-width=\"2\"");
        w.polygon({A, B, C, D}, "ABCD");
        for (auto id : {A, B, C, D, M, N, P, Q}) w.marker(id);
        w.close_group();
    }
    if (layers.count(Layer::Labels)) {
        out << "  <g id=\"layer-labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
        w.labels();
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace quadconc
