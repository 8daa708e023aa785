#include "fareylab/limit_analysis.hpp"

#include <algorithm>

namespace fareylab {

Rat chart_default_tol() {
    static const Rat tol = [] {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, 80);
        return make_rat(1, d);
    }();
    return tol;
}

SegmentChart::SegmentChart(const MeasuredLamination& lam0, const MeasuredLamination& lam1,
                           const std::vector<TestCurve>& family, const Rat& tol)
    : sum_a_(0), sum_b_(0), halfwidths_a_(0), halfwidths_b_(0), lipschitz_(0) {
    if (family.empty()) throw std::invalid_argument("empty test family");
    for (const TestCurve& delta : family) {
        RatInterval a = pair_delta_lamination_auto(delta, lam0, tol);
        RatInterval b = pair_delta_lamination_auto(delta, lam1, tol);
        a_mid_.push_back(a.mid());
        b_mid_.push_back(b.mid());
        sum_a_ += a.mid();
        sum_b_ += b.mid();
        halfwidths_a_ += a.width() / 2;
        halfwidths_b_ += b.width() / 2;
    }
    // |d/dt of coordinate j| = |B_j S_A - A_j S_B| / S(t)^2 with S affine.
    Rat zmin = std::min(sum_a_, sum_b_);
    for (size_t j = 0; j < a_mid_.size(); ++j) {
        Rat num = abs_rat(b_mid_[j] * sum_a_ - a_mid_[j] * sum_b_);
        Rat lj = num / (zmin * zmin);
        if (lj > lipschitz_) lipschitz_ = lj;
    }
}

Rat SegmentChart::err_at(const Rat& t) const {
    Rat h = (1 - t) * halfwidths_a_ + t * halfwidths_b_;
    Rat s = (1 - t) * sum_a_ + t * sum_b_;
    if (h >= s) throw PrecisionError("segment chart enclosure too wide");
    return 2 * h / (s - h);
}

CertPoint SegmentChart::at(const Rat& t) const {
    if (t < 0 || t > 1) throw std::invalid_argument("segment parameter outside [0,1]");
    std::vector<Rat> v;
    v.reserve(a_mid_.size());
    for (size_t j = 0; j < a_mid_.size(); ++j)
        v.push_back((1 - t) * a_mid_[j] + t * b_mid_[j]);
    CertPoint cp;
    cp.point = projectivize(v);
    cp.err = err_at(t);
    return cp;
}

std::pair<RatInterval, Rat> SegmentChart::scan(const ProjectivePoint& v,
                                               const Rat& precision) const {
    if (v.coords.size() != a_mid_.size())
        throw std::invalid_argument("point/family index mismatch");
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    // Error of the chart points themselves; Moebius in t, so extremal at the
    // endpoints.
    Rat errmax = std::max(err_at(Rat(0)), err_at(Rat(1)));
    if (errmax > precision / 8)
        throw PrecisionError("segment chart error exceeds requested precision");

    // Uniform grid with step h: the midpoint path moves at most L h / 2
    // between a true minimizer and its nearest grid node.
    Rat h;
    if (lipschitz_ == 0)
        h = Rat(1);
    else
        h = precision / lipschitz_;
    if (h > 1) h = Rat(1);
    Int n = ceil_rat(Rat(1) / h);
    if (n < 1) n = 1;
    if (n > 2000000)
        throw CapExceeded("segment scan needs " + n.get_str() +
                          " grid nodes; loosen the precision");

    Rat best_d;
    Rat best_t(0);
    bool first = true;
    for (Int i = 0; i <= n; ++i) {
        Rat t = make_rat(i, n);
        Rat d = proj_distance(v, at(t).point);
        if (first || d < best_d) {
            best_d = d;
            best_t = t;
            first = false;
        }
    }
    // Ternary refinement around the grid argmin tightens the upper endpoint;
    // the certificate below does not rely on it.
    Rat lo_t = best_t - Rat(1) / Rat(n);
    Rat hi_t = best_t + Rat(1) / Rat(n);
    if (lo_t < 0) lo_t = 0;
    if (hi_t > 1) hi_t = 1;
    for (int iter = 0; iter < 24; ++iter) {
        Rat m1 = lo_t + (hi_t - lo_t) / 3;
        Rat m2 = hi_t - (hi_t - lo_t) / 3;
        Rat d1 = proj_distance(v, at(m1).point);
        Rat d2 = proj_distance(v, at(m2).point);
        if (d1 < best_d) {
            best_d = d1;
            best_t = m1;
        }
        if (d2 < best_d) {
            best_d = d2;
            best_t = m2;
        }
        if (d1 <= d2)
            hi_t = m2;
        else
            lo_t = m1;
    }

    Rat slack = lipschitz_ * (Rat(1) / Rat(n)) / 2 + errmax;
    Rat lo = best_d - slack;
    if (lo < 0) lo = 0;
    return {RatInterval(lo, best_d + errmax), best_t};
}

RatInterval SegmentChart::distance_to(const ProjectivePoint& v, const Rat& precision) const {
    return scan(v, precision).first;
}

Rat SegmentChart::best_fit_t(const ProjectivePoint& v, const Rat& precision) const {
    return scan(v, precision).second;
}

namespace {

ProjectivePoint projectivized_sample(const std::vector<TestCurve>& family, const Rat& s,
                                     const GrowthSchedule& schedule,
                                     const ModelParams& params) {
    std::vector<Rat> lengths;
    lengths.reserve(family.size());
    for (const TestCurve& delta : family)
        lengths.push_back(length_of(delta, s, schedule, params));
    return projectivize(lengths);
}

Rat alpha_share_max(const std::vector<TestCurve>& family, const Rat& s,
                    const GrowthSchedule& schedule, const ModelParams& params) {
    Rat best(0);
    for (const TestCurve& delta : family) {
        Contribution c = length_contributions(delta, s, schedule, params);
        Rat share = c.alpha / c.total();
        if (share > best) best = share;
    }
    return best;
}

}  // namespace

EndpointRow endpoint_row(const GrowthSchedule& schedule,
                         const std::vector<TestCurve>& family, const ModelParams& params,
                         const Rat& s, int parity, const SegmentChart& chart) {
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    size_t k = active_index(s, schedule);
    if (k % 2 != static_cast<size_t>(parity))
        throw std::invalid_argument("sample parity does not match the requested report");
    CertPoint endpoint = chart.at(Rat(parity));
    EndpointRow row;
    row.k = k;
    row.s = s;
    row.point = projectivized_sample(family, s, schedule, params);
    Rat d = proj_distance(row.point, endpoint.point);
    Rat lo = d - endpoint.err;
    if (lo < 0) lo = 0;
    row.dist_to_endpoint = RatInterval(lo, d + endpoint.err);
    XY xy = xy_of(s, schedule, params);
    for (const TestCurve& delta : family) {
        Contribution c = length_contributions(delta, s, schedule, params);
        Rat i_k = Rat(pair_delta_gamma(delta, k, schedule));
        row.twist_ratios.push_back(xy.x * i_k / (c.gamma_k + c.gamma_k1));
    }
    row.alpha_share_max = alpha_share_max(family, s, schedule, params);
    return row;
}

std::vector<EndpointRow> endpoint_convergence_report(const GrowthSchedule& schedule,
                                                     const std::vector<TestCurve>& family,
                                                     const ModelParams& params, int parity,
                                                     const SegmentChart& chart) {
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    std::vector<EndpointRow> rows;
    for (size_t k = 2; k + 1 <= schedule.kmax(); ++k) {
        if (k % 2 != static_cast<size_t>(parity)) continue;
        rows.push_back(endpoint_row(schedule, family, params, schedule.nominal_midtime(k),
                                    parity, chart));
    }
    return rows;
}

SweepRow sweep_row(const GrowthSchedule& schedule, const std::vector<TestCurve>& family,
                   const ModelParams& params, const Rat& s, const SegmentChart& chart,
                   const Rat& precision) {
    SweepRow row;
    row.k = active_index(s, schedule);
    row.s = s;
    row.point = projectivized_sample(family, s, schedule, params);
    row.dist_to_segment = chart.distance_to(row.point, precision);
    row.best_t = chart.best_fit_t(row.point, precision);
    row.alpha_share_max = alpha_share_max(family, s, schedule, params);
    return row;
}

std::vector<SweepReport> sweep_report(const GrowthSchedule& schedule,
                                      const std::vector<TestCurve>& family,
                                      const ModelParams& params,
                                      const std::vector<Rat>& thetas,
                                      const SegmentChart& chart, const Rat& precision) {
    std::vector<SweepReport> reports;
    for (const Rat& theta : thetas) {
        if (theta < 0 || theta >= 1)
            throw std::invalid_argument("sweep theta must lie in [0,1)");
        SweepReport rep;
        rep.theta = theta;
        for (size_t k = 2; k + 1 <= schedule.kmax(); k += 2) {
            const Rat& a = schedule.nominal_midtime(k);
            const Rat& b = schedule.nominal_midtime(k + 1);
            rep.rows.push_back(
                sweep_row(schedule, family, params, a + theta * (b - a), chart, precision));
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace fareylab
