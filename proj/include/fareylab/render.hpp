#pragma once

// Deterministic SVG output: the Farey tessellation as semicircles over the
// real axis, a convergent-path overlay with optional horoball disks at the
// cusps (1/q^2 normalization, decoration only), and a barycentric scatter of
// limit points. Floats appear only here and are printed at fixed 1e-6
// resolution, so output is byte-identical across runs.

#include "fareylab/curve_algebra.hpp"
#include "fareylab/numbers.hpp"
#include "fareylab/projective.hpp"

#include <string>
#include <vector>

namespace fareylab {

struct RenderOptions {
    int depth = 3;                 // mediant subdivision depth
    Rat xmin = Rat(0), xmax = Rat(1);
    double width_px = 800.0;
    double tess_stroke = 0.6;
    double overlay_stroke = 2.4;
    bool horoballs = false;
    double horoball_scale = 1.0;
};

// Tessellation over the viewport; overlay may be empty.
std::string render_tessellation(const RenderOptions& opts, const std::vector<Slope>& overlay);

// Number of arcs a depth-d subdivision draws per unit interval (the mediant
// tree edge count); exposed for the combinatorial render oracle.
size_t tessellation_arc_count(int depth);

struct ScatterPoint {
    ProjectivePoint point;
    std::string series;  // "endpoint_even", "endpoint_odd", "sweep_<theta>"
};

// Barycentric scatter of the first three chart coordinates.
std::string render_simplex_scatter(const std::vector<ScatterPoint>& points,
                                   double size_px = 600.0);

}  // namespace fareylab
