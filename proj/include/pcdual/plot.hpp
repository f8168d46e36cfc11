#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualize.hpp"
#include "error.hpp"
#include "polynomial.hpp"

namespace pcdual {

struct Viewport {
    double xmin = -3.0;
    double xmax = 3.0;
    double ymin = -3.0;
    double ymax = 3.0;
    int width_px = 400;
    int height_px = 400;

    Window window() const { return {xmin, xmax, ymin, ymax}; }

    void validate() const {
        if (!(xmin < xmax) || !(ymin < ymax)) throw InvalidArgument("viewport must satisfy xmin < xmax and ymin < ymax");
        if (width_px <= 0 || height_px <= 0) throw InvalidArgument("viewport pixel size must be positive");
    }
};

struct Segment {
    PlanePoint a;
    PlanePoint b;
};

enum class LayerKind { segments, points, polylines };

/// One drawable group. Every item is a vertex list: two vertices for a
/// segment, one for a point, any number for a polyline.
struct Layer {
    LayerKind kind = LayerKind::segments;
    std::string style;  ///< class token resolved by the embedded stylesheet
    std::vector<std::vector<PlanePoint>> items;

    void add_segment(const Segment& s) { items.push_back({s.a, s.b}); }
};

struct PlaneScene {
    Viewport viewport;
    std::string title;
    std::vector<Layer> layers;
};

/// Zero set of p over the viewport by marching squares on a grid x grid cell
/// mesh. `horizontal` and `vertical` name the plotted variables; p may not use
/// any other. Saddle cells are resolved by the sign at the cell center.
inline std::vector<Segment> trace_implicit(const Polynomial& p, Var horizontal, Var vertical, const Viewport& vp,
                                           int grid) {
    vp.validate();
    if (grid < 16) throw InvalidArgument("grid must be >= 16");
    if ((p.variables() & ~var_set({horizontal, vertical})).any())
        throw InvalidArgument("polynomial uses variables other than the plotted pair");

    const FloatPolynomial f(p);
    const auto n = static_cast<std::size_t>(grid);
    auto coord = [n](double lo, double hi, std::size_t i) {
        return i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    };
    auto eval = [&](double u, double v) {
        FloatPolynomial::Values at{};
        at[index(horizontal)] = u;
        at[index(vertical)] = v;
        return f(at);
    };

    std::vector<double> xs(n + 1), ys(n + 1), val((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
        xs[i] = coord(vp.xmin, vp.xmax, i);
        ys[i] = coord(vp.ymin, vp.ymax, i);
    }
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i) val[j * (n + 1) + i] = eval(xs[i], ys[j]);

    enum Edge { bottom, right, top, left };
    // Edge pairs per case; corners bl=1, br=2, tr=4, tl=8 are "inside" when f > 0.
    // Saddles 5 and 10 are filled in per cell.
    static constexpr std::array<std::array<int, 4>, 16> table{{
        {-1, -1, -1, -1}, {left, bottom, -1, -1}, {bottom, right, -1, -1}, {left, right, -1, -1},
        {right, top, -1, -1}, {-1, -1, -1, -1}, {bottom, top, -1, -1}, {left, top, -1, -1},
        {top, left, -1, -1}, {bottom, top, -1, -1}, {-1, -1, -1, -1}, {right, top, -1, -1},
        {left, right, -1, -1}, {bottom, right, -1, -1}, {left, bottom, -1, -1}, {-1, -1, -1, -1},
    }};

    std::vector<Segment> out;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double vbl = val[j * (n + 1) + i];
            const double vbr = val[j * (n + 1) + i + 1];
            const double vtr = val[(j + 1) * (n + 1) + i + 1];
            const double vtl = val[(j + 1) * (n + 1) + i];
            const int c = (vbl > 0 ? 1 : 0) | (vbr > 0 ? 2 : 0) | (vtr > 0 ? 4 : 0) | (vtl > 0 ? 8 : 0);
            if (c == 0 || c == 15) continue;

            auto lerp = [](PlanePoint a, PlanePoint b, double fa, double fb) {
                const double t = fa / (fa - fb);
                return PlanePoint{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            };
            const PlanePoint bl{xs[i], ys[j]}, br{xs[i + 1], ys[j]}, tr{xs[i + 1], ys[j + 1]}, tl{xs[i], ys[j + 1]};
            auto vertex = [&](int e) {
                switch (e) {
                    case bottom: return lerp(bl, br, vbl, vbr);
                    case right: return lerp(br, tr, vbr, vtr);
                    case top: return lerp(tr, tl, vtr, vtl);
                    default: return lerp(tl, bl, vtl, vbl);
                }
            };

            std::array<int, 4> edges = table[static_cast<std::size_t>(c)];
            if (c == 5 || c == 10) {
                const bool center_inside = eval(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1])) > 0;
                // Isolate whichever diagonal pair is not joined through the center.
                const bool cut_br_tl = (c == 5) == center_inside;
                edges = cut_br_tl ? std::array<int, 4>{bottom, right, top, left}
                                  : std::array<int, 4>{left, bottom, right, top};
            }
            for (std::size_t k = 0; k < 4 && edges[k] >= 0; k += 2)
                out.push_back({vertex(edges[k]), vertex(edges[k + 1])});
        }
    }
    return out;
}

/// Part of the line through a and b (extended both ways) inside the viewport.
inline std::optional<Segment> clip_line(PlanePoint a, PlanePoint b, const Viewport& vp) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    double t0 = -INFINITY, t1 = INFINITY;
    auto clip = [&](double p, double q) {
        // p t <= q
        if (p == 0.0) return q >= 0.0;
        const double r = q / p;
        if (p < 0)
            t0 = std::max(t0, r);
        else
            t1 = std::min(t1, r);
        return true;
    };
    if (!clip(-dx, a.x - vp.xmin) || !clip(dx, vp.xmax - a.x) || !clip(-dy, a.y - vp.ymin) ||
        !clip(dy, vp.ymax - a.y))
        return std::nullopt;
    if (!(t0 < t1) || std::isinf(t0) || std::isinf(t1)) return std::nullopt;
    return Segment{{a.x + t0 * dx, a.y + t0 * dy}, {a.x + t1 * dx, a.y + t1 * dy}};
}

/// Vertical axes X1 at x = 0 and X2 at x = spacing, clipped to the viewport.
inline Layer parallel_axes_layer(const Viewport& vp, double spacing) {
    Layer axes{LayerKind::segments, "axis", {}};
    for (double x : {0.0, spacing})
        if (x >= vp.xmin && x <= vp.xmax) axes.add_segment({{x, vp.ymin}, {x, vp.ymax}});
    return axes;
}

inline PlaneScene source_scene(const ImplicitCurve& c, const Viewport& vp, int grid) {
    PlaneScene s{vp, "source", {}};
    Layer curve{LayerKind::segments, "curve", {}};
    for (const auto& seg : trace_implicit(c.polynomial(), Var::x1, Var::x2, vp, grid)) curve.add_segment(seg);
    s.layers.push_back(std::move(curve));
    return s;
}

/// Traced dual g(x / spacing, y) = 0 between the parallel axes.
inline PlaneScene dual_scene(const DualCurve& d, const Viewport& vp, int grid, double spacing = 1.0) {
    if (!(spacing > 0)) throw InvalidArgument("axis spacing must be positive");
    Polynomial g = d.g;
    if (spacing != 1.0)
        g = substitute(g, {{Var::x, Rational(1) / Rational(spacing) * Polynomial::variable(Var::x)}});
    PlaneScene s{vp, "dual", {}};
    s.layers.push_back(parallel_axes_layer(vp, spacing));
    Layer curve{LayerKind::segments, "dual", {}};
    for (const auto& seg : trace_implicit(g, Var::x, Var::y, vp, grid)) curve.add_segment(seg);
    s.layers.push_back(std::move(curve));
    return s;
}

/// Over-plotting picture: every sampled point (x1, x2) of the curve becomes
/// its dual line through (0, x1) and (spacing, x2). The lines envelope the dual.
inline PlaneScene envelope_scene(const ImplicitCurve& c, std::size_t sample_count, const Viewport& vp,
                                 double spacing = 1.0, std::optional<Window> source_window = std::nullopt) {
    vp.validate();
    if (sample_count < 2) throw InvalidArgument("envelope needs at least two samples");
    if (!(spacing > 0)) throw InvalidArgument("axis spacing must be positive");
    const CurveSamples samples = sample_curve(c, source_window.value_or(vp.window()), sample_count);

    PlaneScene s{vp, "envelope", {}};
    s.layers.push_back(parallel_axes_layer(vp, spacing));
    Layer lines{LayerKind::segments, "envelope", {}};
    for (const auto& p : samples.points)
        if (auto seg = clip_line({0.0, p.x}, {spacing, p.y}, vp)) lines.add_segment(*seg);
    s.layers.push_back(std::move(lines));
    return s;
}

namespace detail {

inline void append_fixed(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    if (std::string_view(buf) == "-0.000")
        out += "0.000";
    else
        out += buf;
}

inline constexpr std::string_view kStylesheet =
    "<style>\n"
    "  .background { fill: #ffffff; stroke: #cccccc; stroke-width: 1; }\n"
    "  .frame { stroke: #bbbbbb; stroke-width: 0.5; }\n"
    "  .title { font: 12px sans-serif; fill: #333333; }\n"
    "  .axis { fill: none; stroke: #555555; stroke-width: 1.5; }\n"
    "  .curve { fill: none; stroke: #1f4e9c; stroke-width: 1.5; }\n"
    "  .dual { fill: none; stroke: #b0281a; stroke-width: 1.5; }\n"
    "  .envelope { fill: none; stroke: #2a7a3b; stroke-width: 0.4; stroke-opacity: 0.6; }\n"
    "  .points { fill: none; stroke: #000000; stroke-width: 3; stroke-linecap: round; }\n"
    "  .thin { fill: none; stroke: #000000; stroke-width: 0.5; }\n"
    "  .thick { fill: none; stroke: #000000; stroke-width: 2; }\n"
    "</style>\n";

}  // namespace detail

/// Standalone SVG 1.1 document with the scenes laid out left to right.
/// Mathematical y points up. Coordinates carry three decimals, so identical
/// scenes give identical bytes.
inline std::string render_svg(std::span<const PlaneScene> panels) {
    constexpr int kGap = 20;
    int total_w = 0, total_h = 0;
    for (const auto& s : panels) {
        s.viewport.validate();
        total_w += s.viewport.width_px;
        total_h = std::max(total_h, s.viewport.height_px);
    }
    if (!panels.empty()) total_w += kGap * static_cast<int>(panels.size() - 1);
    if (panels.empty()) total_w = total_h = 1;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(total_w) +
           "\" height=\"" + std::to_string(total_h) + "\" viewBox=\"0 0 " + std::to_string(total_w) + " " +
           std::to_string(total_h) + "\">\n";
    out += detail::kStylesheet;

    int offset = 0;
    for (const auto& s : panels) {
        const Viewport& vp = s.viewport;
        auto px = [&](double x) { return (x - vp.xmin) / (vp.xmax - vp.xmin) * vp.width_px; };
        auto py = [&](double y) { return (vp.ymax - y) / (vp.ymax - vp.ymin) * vp.height_px; };
        auto pt = [&](std::string& o, PlanePoint p) {
            detail::append_fixed(o, px(p.x));
            o += ' ';
            detail::append_fixed(o, py(p.y));
        };

        out += "<g transform=\"translate(" + std::to_string(offset) + ",0)\">\n";
        out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(vp.width_px) +
               "\" height=\"" + std::to_string(vp.height_px) + "\"/>\n";
        // Coordinate axes of the panel, when visible.
        if (vp.ymin <= 0 && vp.ymax >= 0) {
            out += "<line class=\"frame\" x1=\"0.000\" y1=\"";
            detail::append_fixed(out, py(0));
            out += "\" x2=\"";
            detail::append_fixed(out, px(vp.xmax));
            out += "\" y2=\"";
            detail::append_fixed(out, py(0));
            out += "\"/>\n";
        }
        if (vp.xmin <= 0 && vp.xmax >= 0) {
            out += "<line class=\"frame\" x1=\"";
            detail::append_fixed(out, px(0));
            out += "\" y1=\"0.000\" x2=\"";
            detail::append_fixed(out, px(0));
            out += "\" y2=\"";
            detail::append_fixed(out, py(vp.ymin));
            out += "\"/>\n";
        }
        if (!s.title.empty()) out += "<text class=\"title\" x=\"6\" y=\"16\">" + s.title + "</text>\n";

        for (const auto& layer : s.layers) {
            out += "<path class=\"" + layer.style + "\" d=\"";
            bool first = true;
            for (const auto& item : layer.items) {
                if (item.empty()) continue;
                if (!first) out += ' ';
                first = false;
                out += 'M';
                pt(out, item.front());
                if (layer.kind == LayerKind::points) {
                    out += " h0";
                    continue;
                }
                for (std::size_t k = 1; k < item.size(); ++k) {
                    out += " L";
                    pt(out, item[k]);
                }
            }
            out += "\"/>\n";
        }
        out += "</g>\n";
        offset += vp.width_px + kGap;
    }
    out += "</svg>\n";
    return out;
}

inline std::string render_svg(const PlaneScene& scene) { return render_svg(std::span<const PlaneScene>(&scene, 1)); }

}  // namespace pcdual
