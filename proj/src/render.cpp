#include "fareylab/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace fareylab {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Canvas {
    double xmin, xmax, scale, height;

    double sx(double x) const { return (x - xmin) * scale; }
    double sy(double y) const { return height - y * scale; }
};

void arc_between(std::ostringstream& svg, const Canvas& c, double x1, double x2,
                 double stroke, const char* color) {
    if (x1 > x2) std::swap(x1, x2);
    double r = (x2 - x1) / 2 * c.scale;
    svg << "<path d=\"M " << fmt(c.sx(x1)) << " " << fmt(c.sy(0)) << " A " << fmt(r)
        << " " << fmt(r) << " 0 0 1 " << fmt(c.sx(x2)) << " " << fmt(c.sy(0))
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(stroke)
        << "\"/>\n";
}

void vertical_ray(std::ostringstream& svg, const Canvas& c, double x, double stroke,
                  const char* color) {
    svg << "<line x1=\"" << fmt(c.sx(x)) << "\" y1=\"" << fmt(c.sy(0)) << "\" x2=\""
        << fmt(c.sx(x)) << "\" y2=\"" << fmt(0.0) << "\" stroke=\"" << color
        << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
}

void mediant_arcs(std::ostringstream& svg, const Canvas& c, const RenderOptions& o,
                  const Int& a, const Int& b, const Int& p, const Int& q, int depth) {
    arc_between(svg, c, Rat(a, b).get_d(), Rat(p, q).get_d(), o.tess_stroke, "#404040");
    if (depth <= 0) return;
    Int mn = a + p, md = b + q;
    mediant_arcs(svg, c, o, a, b, mn, md, depth - 1);
    mediant_arcs(svg, c, o, mn, md, p, q, depth - 1);
}

}  // namespace

size_t tessellation_arc_count(int depth) {
    // each level doubles the frontier: 1 + 2 + ... + 2^depth
    size_t n = 0, level = 1;
    for (int d = 0; d <= depth; ++d, level *= 2) n += level;
    return n;
}

std::string render_tessellation(const RenderOptions& opts, const std::vector<Slope>& overlay) {
    if (opts.xmin >= opts.xmax) throw std::invalid_argument("invalid viewport: xmin >= xmax");
    if (opts.depth < 0 || opts.depth > 16)
        throw std::invalid_argument("invalid render depth (0..16)");
    Canvas c;
    c.xmin = opts.xmin.get_d();
    c.xmax = opts.xmax.get_d();
    c.scale = opts.width_px / (c.xmax - c.xmin);
    c.height = opts.width_px * 0.55;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opts.width_px)
        << "\" height=\"" << fmt(c.height) << "\" viewBox=\"0 0 " << fmt(opts.width_px)
        << " " << fmt(c.height) << "\">\n";
    svg << "<line x1=\"" << fmt(0.0) << "\" y1=\"" << fmt(c.sy(0)) << "\" x2=\""
        << fmt(opts.width_px) << "\" y2=\"" << fmt(c.sy(0))
        << "\" stroke=\"#000000\" stroke-width=\"1.000000\"/>\n";

    // Unit intervals covering the viewport, each subdivided by mediants.
    Int n0 = floor_rat(opts.xmin);
    Int n1 = ceil_rat(opts.xmax);
    for (Int n = n0; n < n1; ++n) {
        vertical_ray(svg, c, Rat(n).get_d(), opts.tess_stroke, "#404040");
        mediant_arcs(svg, c, opts, n, Int(1), Int(n + 1), Int(1), opts.depth);
    }
    vertical_ray(svg, c, Rat(n1).get_d(), opts.tess_stroke, "#404040");

    if (opts.horoballs) {
        for (const Slope& v : overlay) {
            if (v.is_infinity()) {
                double y = c.sy(opts.horoball_scale);
                svg << "<line x1=\"" << fmt(0.0) << "\" y1=\"" << fmt(y) << "\" x2=\""
                    << fmt(opts.width_px) << "\" y2=\"" << fmt(y)
                    << "\" stroke=\"#5080ff\" stroke-width=\"0.800000\" stroke-dasharray=\"4 3\"/>\n";
                continue;
            }
            double q = v.q.get_d();
            double r = opts.horoball_scale / (2 * q * q);
            svg << "<circle cx=\"" << fmt(c.sx(Rat(v.p, v.q).get_d())) << "\" cy=\""
                << fmt(c.sy(r)) << "\" r=\"" << fmt(r * c.scale)
                << "\" fill=\"#5080ff\" fill-opacity=\"0.250000\" stroke=\"#5080ff\" "
                   "stroke-width=\"0.600000\"/>\n";
        }
    }

    for (size_t i = 0; i + 1 < overlay.size(); ++i) {
        const Slope& u = overlay[i];
        const Slope& w = overlay[i + 1];
        if (u.is_infinity() || w.is_infinity()) {
            const Slope& fin = u.is_infinity() ? w : u;
            vertical_ray(svg, c, Rat(fin.p, fin.q).get_d(), opts.overlay_stroke, "#c02020");
        } else {
            arc_between(svg, c, Rat(u.p, u.q).get_d(), Rat(w.p, w.q).get_d(),
                        opts.overlay_stroke, "#c02020");
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_simplex_scatter(const std::vector<ScatterPoint>& points, double size_px) {
    // Corners of the chart triangle (first three coordinates renormalized).
    const double ax = 0.08, ay = 0.92, bx = 0.92, by = 0.92, cx = 0.5,
                 cy = 0.92 - 0.84 * std::sqrt(3.0) / 2;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size_px)
        << "\" height=\"" << fmt(size_px) << "\" viewBox=\"0 0 1 1\">\n";
    svg << "<polygon points=\"" << fmt(ax) << "," << fmt(ay) << " " << fmt(bx) << ","
        << fmt(by) << " " << fmt(cx) << "," << fmt(cy)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.003000\"/>\n";
    std::map<std::string, const char*> palette;
    const char* colors[] = {"#c02020", "#2040c0", "#108040", "#c08010", "#8020a0", "#108080"};
    size_t next = 0;
    for (const ScatterPoint& sp : points) {
        if (sp.point.coords.size() < 3)
            throw std::invalid_argument("scatter needs at least three chart coordinates");
        if (!palette.count(sp.series))
            palette[sp.series] = colors[next++ % 6];
        Rat u = sp.point.coords[0], v = sp.point.coords[1], w = sp.point.coords[2];
        Rat s = u + v + w;
        if (s == 0) throw std::invalid_argument("scatter point with zero leading mass");
        double bu = Rat(u / s).get_d(), bv = Rat(v / s).get_d(), bw = Rat(w / s).get_d();
        double px = bu * ax + bv * bx + bw * cx;
        double py = bu * ay + bv * by + bw * cy;
        svg << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
            << "\" r=\"0.008000\" fill=\"" << palette[sp.series] << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace fareylab
