#pragma once

// Convergence diagnostics toward the boundary simplex: certified distance to
// the segment of simplex points, endpoint convergence tables, the mid-time
// twist-dominance ratios, and the alpha-share decay check. Distances carry
// exact error bounds inherited from the lamination pairing enclosures.

#include "fareylab/pairing.hpp"
#include "fareylab/projective.hpp"
#include "fareylab/ray_model.hpp"

#include <vector>

namespace fareylab {

// Tight enough that chart error never masks the late-k distances of the
// default pipeline; toy charts with short expansions should pass a looser
// tolerance.
Rat chart_default_tol();

// Precomputed endpoint data for the 1-parameter family of simplex points
// t -> projectivize((1-t) A + t B).
class SegmentChart {
  public:
    SegmentChart(const MeasuredLamination& lam0, const MeasuredLamination& lam1,
                 const std::vector<TestCurve>& family, const Rat& tol = chart_default_tol());

    size_t family_size() const { return a_mid_.size(); }
    CertPoint at(const Rat& t) const;

    // Certified enclosure of min over t in [0,1] of the sup-norm distance
    // from v to the true simplex point; width <= precision.
    RatInterval distance_to(const ProjectivePoint& v, const Rat& precision) const;

    // Grid argmin parameter from the same scan.
    Rat best_fit_t(const ProjectivePoint& v, const Rat& precision) const;

  private:
    std::vector<Rat> a_mid_, b_mid_;
    Rat sum_a_, sum_b_;
    Rat halfwidths_a_, halfwidths_b_;  // summed enclosure halfwidths
    Rat lipschitz_;                    // sup-norm Lipschitz bound of t -> point

    Rat err_at(const Rat& t) const;
    std::pair<RatInterval, Rat> scan(const ProjectivePoint& v, const Rat& precision) const;
};

struct EndpointRow {
    size_t k = 0;
    Rat s;
    ProjectivePoint point;             // projectivized model length vector
    RatInterval dist_to_endpoint;      // to simplex_point(parity)
    std::vector<Rat> twist_ratios;     // x * i(delta,gamma_k) / (contrib_k + contrib_k1)
    Rat alpha_share_max;               // max over family of alpha contribution share
};

// One mid-time sample at s (must have active index of the given parity).
EndpointRow endpoint_row(const GrowthSchedule& schedule,
                         const std::vector<TestCurve>& family, const ModelParams& params,
                         const Rat& s, int parity, const SegmentChart& chart);

std::vector<EndpointRow> endpoint_convergence_report(const GrowthSchedule& schedule,
                                                     const std::vector<TestCurve>& family,
                                                     const ModelParams& params, int parity,
                                                     const SegmentChart& chart);

struct SweepRow {
    size_t k = 0;
    Rat s;
    ProjectivePoint point;
    RatInterval dist_to_segment;
    Rat best_t;
    Rat alpha_share_max;
};

SweepRow sweep_row(const GrowthSchedule& schedule, const std::vector<TestCurve>& family,
                   const ModelParams& params, const Rat& s, const SegmentChart& chart,
                   const Rat& precision);

struct SweepReport {
    Rat theta;
    std::vector<SweepRow> rows;
};

// Samples s = t'_k + theta (t'_{k+1} - t'_k) along even k for each theta.
std::vector<SweepReport> sweep_report(const GrowthSchedule& schedule,
                                      const std::vector<TestCurve>& family,
                                      const ModelParams& params,
                                      const std::vector<Rat>& thetas,
                                      const SegmentChart& chart,
                                      const Rat& precision = Rat(1, 1000));

}  // namespace fareylab
