#include "fareylab/ray_model.hpp"

#include "fareylab/realnum.hpp"

#include <algorithm>

namespace fareylab {

size_t active_index(const Rat& s, const GrowthSchedule& schedule) {
    const auto& mid = schedule.midtimes;
    if (s < mid.at(2))
        throw std::out_of_range("time before the first modeled interval t'_2");
    if (s >= mid.at(schedule.kmax()))
        throw std::out_of_range("time beyond the modeled range (needs e_{k+1})");
    // first index with t'_{k+1} > s
    size_t lo = 2, hi = schedule.kmax() - 1;
    while (lo < hi) {
        size_t m = (lo + hi) / 2;
        if (mid[m + 1] > s)
            hi = m;
        else
            lo = m + 1;
    }
    return lo;
}

Rat width_of(const Rat& length) {
    if (length <= 0) throw std::invalid_argument("width of nonpositive length");
    return round_significant(collar_width_enclosure(length).mid(), 64);
}

Int twist_gamma_k(const Rat& s, const GrowthSchedule& schedule, const ModelParams& p) {
    size_t k = active_index(s, schedule);
    Int tw = schedule.coeff(k) + p.twist_offset;
    if (tw < 1)
        throw std::invalid_argument("twist_offset drives tw_{gamma_k} below 1");
    return tw;
}

namespace {

Rat interval_fraction(const Rat& s, const GrowthSchedule& schedule, size_t k) {
    const Rat& a = schedule.midtimes.at(k);
    const Rat& b = schedule.midtimes.at(k + 1);
    return (s - a) / (b - a);
}

Rat clamp_twist(Rat tw, const Int& ek1) {
    if (tw < 1) return Rat(1);
    if (tw > Rat(ek1)) return Rat(ek1);
    return tw;
}

}  // namespace

Rat twist_gamma_k1(const Rat& s, const GrowthSchedule& schedule, const ModelParams& p) {
    size_t k = active_index(s, schedule);
    Rat theta = interval_fraction(s, schedule, k);
    const Int& ek1 = schedule.coeff(k + 1);
    if (theta == 0) return Rat(1);
    switch (p.interp) {
        case TwistInterp::geometric: {
            Rat tw = round_significant(pow_enclosure(ek1, theta).mid(), 64);
            return clamp_twist(tw, ek1);
        }
        case TwistInterp::mixture: {
            // Target y = (theta/(1-theta)) * x * q_k / q_{k+1}, so that the
            // projectivized mixture between the active curves is theta.
            Rat x = width_of(p.ell_active) +
                    p.ell_active * Rat(schedule.coeff(k) + p.twist_offset);
            Rat qk = Rat(schedule.gamma(k).q);
            Rat qk1 = Rat(schedule.gamma(k + 1).q);
            Rat y_target = (theta / (1 - theta)) * x * qk / qk1;
            Rat tw = (y_target - width_of(p.ell_active)) / p.ell_active;
            return clamp_twist(tw, ek1);
        }
    }
    throw std::logic_error("unreachable");
}

Contribution length_contributions(const TestCurve& delta, const Rat& s,
                                  const GrowthSchedule& schedule, const ModelParams& p) {
    if (p.ell_active <= 0) throw std::invalid_argument("ell_active must be positive");
    if (p.c_O < 0) throw std::invalid_argument("c_O must be nonnegative");
    size_t k = active_index(s, schedule);
    Rat w_active = width_of(p.ell_active);

    Rat i_k = Rat(pair_delta_gamma(delta, k, schedule));
    Rat i_k1 = Rat(pair_delta_gamma(delta, k + 1, schedule));
    Rat i_alpha = Rat(delta.alpha_intersection());

    Rat tw_k = Rat(twist_gamma_k(s, schedule, p));
    Rat tw_k1 = twist_gamma_k1(s, schedule, p);

    Rat ell_alpha = schedule.f1_value(s);
    Rat w_alpha = width_of(ell_alpha);
    Rat tw_alpha = schedule.f2_value(s);

    Contribution c;
    c.gamma_k = i_k * (w_active + p.ell_active * tw_k);
    c.gamma_k1 = i_k1 * (w_active + p.ell_active * tw_k1);
    c.alpha = i_alpha * (w_alpha + ell_alpha * tw_alpha);
    c.o_terms = p.c_O * (i_k + i_k1 + i_alpha);
    return c;
}

Rat length_of(const TestCurve& delta, const Rat& s, const GrowthSchedule& schedule,
              const ModelParams& p) {
    return length_contributions(delta, s, schedule, p).total();
}

XY xy_of(const Rat& s, const GrowthSchedule& schedule, const ModelParams& p) {
    Rat w_active = width_of(p.ell_active);
    XY out;
    out.x = w_active + p.ell_active * Rat(twist_gamma_k(s, schedule, p));
    out.y = w_active + p.ell_active * twist_gamma_k1(s, schedule, p);
    return out;
}

RaySample sample_ray(const std::vector<TestCurve>& family, const Rat& s,
                     const GrowthSchedule& schedule, const ModelParams& p) {
    RaySample sample;
    sample.s = s;
    sample.k = active_index(s, schedule);
    for (const TestCurve& delta : family)
        sample.lengths.emplace_back(delta.id, length_of(delta, s, schedule, p));
    XY xy = xy_of(s, schedule, p);
    sample.x = xy.x;
    sample.y = xy.y;
    return sample;
}

}  // namespace fareylab
