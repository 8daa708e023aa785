#include "fareylab/pairing.hpp"

#include <algorithm>

namespace fareylab {

Int pair_delta_gamma(const TestCurve& delta, size_t k, const GrowthSchedule& schedule) {
    Slope g = schedule.gamma(k);
    Int total = 0;
    for (const ArcClass& arc : delta.arcs_on(schedule.side_of(k)))
        total += intersection_arc_curve(arc, g);
    return total;
}

namespace {

// |a - x b| over the enclosure of x; exact when b = 0.
RatInterval arc_pairing(const ArcClass& arc, const RatInterval& x) {
    if (arc.b == 0) return RatInterval(abs_rat(Rat(arc.a)));
    RatInterval v = RatInterval(Rat(arc.a)) - Rat(arc.b) * x;
    return abs_nonzero(v);
}

size_t max_precision_index(const MeasuredLamination& lam) {
    return lam.cf.length();
}

}  // namespace

RatInterval pair_delta_lamination(const TestCurve& delta, const MeasuredLamination& lam,
                                  size_t precision_index) {
    RatInterval x = value_interval(lam.cf, precision_index);
    RatInterval sum(Rat(0));
    for (const ArcClass& arc : delta.arcs_on(lam.side)) sum = sum + arc_pairing(arc, x);
    return lam.weight * sum;
}

RatInterval pair_delta_lamination_auto(const TestCurve& delta,
                                       const MeasuredLamination& lam, const Rat& tol) {
    size_t top = max_precision_index(lam);
    for (size_t i = 2; i <= top; ++i) {
        try {
            RatInterval v = pair_delta_lamination(delta, lam, i);
            if (v.width() <= tol) return v;
        } catch (const PrecisionError&) {
            if (i == top) throw;
        }
    }
    throw PrecisionError("lamination pairing: coefficients exhausted before width " +
                         rat_str(tol));
}

RatInterval sandwich_constant(const TestCurve& delta, const MeasuredLamination& lam0,
                              const MeasuredLamination& lam1, size_t precision_index) {
    RatInterval kappa(Rat(0));
    for (const MeasuredLamination* lam : {&lam0, &lam1}) {
        RatInterval x = value_interval(lam->cf, std::min(precision_index, lam->cf.length()));
        const auto& arcs = delta.arcs_on(lam->side);
        RatInterval vmax = arc_pairing(arcs[0], x);
        for (size_t j = 1; j < arcs.size(); ++j)
            vmax = max_interval(vmax, arc_pairing(arcs[j], x));
        Rat two_n = Rat(2 * static_cast<unsigned long>(arcs.size()));
        RatInterval side_term =
            max_interval(two_n * vmax, Rat(2) * reciprocal(vmax));
        kappa = max_interval(kappa, side_term);
    }
    return kappa;
}

RatInterval sandwich_constant_auto(const TestCurve& delta, const MeasuredLamination& lam0,
                                   const MeasuredLamination& lam1) {
    size_t top = std::max(lam0.cf.length(), lam1.cf.length());
    for (size_t i = 2; i <= top; ++i) {
        try {
            return sandwich_constant(delta, lam0, lam1, i);
        } catch (const PrecisionError&) {
            if (i == top) throw;
        }
    }
    throw PrecisionError("sandwich constant: signs unresolved at full depth");
}

bool sandwich_check(const TestCurve& delta, size_t k, const GrowthSchedule& schedule,
                    const RatInterval& kappa) {
    if (k < 2) throw std::invalid_argument("sandwich check needs k >= 2");
    if (kappa.lo <= 0) throw std::invalid_argument("kappa must be positive");
    Rat pairing = Rat(pair_delta_gamma(delta, k, schedule));
    Rat ek2 = Rat(schedule.coeff(k - 2));
    Rat upper = kappa.lo * Rat(schedule.growth_bound(k));
    // (1/kappa) e_{k-2} <= pairing  <=>  e_{k-2} <= kappa * pairing
    return ek2 <= kappa.lo * pairing && pairing <= upper;
}

CertPoint simplex_point(const Rat& t, const MeasuredLamination& lam0,
                        const MeasuredLamination& lam1,
                        const std::vector<TestCurve>& family, const Rat& tol) {
    if (family.empty()) throw std::invalid_argument("empty test family");
    if (t < 0 || t > 1) throw std::invalid_argument("simplex parameter outside [0,1]");
    std::vector<Rat> mids;
    mids.reserve(family.size());
    Rat halfwidth_sum(0);
    Rat mid_sum(0);
    for (const TestCurve& delta : family) {
        RatInterval a = pair_delta_lamination_auto(delta, lam0, tol);
        RatInterval b = pair_delta_lamination_auto(delta, lam1, tol);
        RatInterval v = (1 - t) * a + t * b;
        mids.push_back(v.mid());
        mid_sum += v.mid();
        halfwidth_sum += v.width() / 2;
    }
    if (halfwidth_sum >= mid_sum)
        throw PrecisionError("simplex point enclosure too wide to normalize");
    CertPoint cp;
    cp.point = projectivize(mids);
    // |true_j - mid_j/S| <= 2H/(S - H) uniformly in j.
    cp.err = 2 * halfwidth_sum / (mid_sum - halfwidth_sum);
    return cp;
}

std::vector<TestCurve> default_family() {
    const ArcClass base(1, 0);
    std::vector<TestCurve> fam;
    const std::pair<const char*, ArcClass> variants[] = {
        {"10", ArcClass(1, 0)}, {"01", ArcClass(0, 1)}, {"11", ArcClass(1, 1)}};
    for (const auto& [tag, arc] : variants)
        fam.emplace_back(std::string("delta0_") + tag, std::vector<ArcClass>{arc},
                         std::vector<ArcClass>{base});
    for (const auto& [tag, arc] : variants)
        fam.emplace_back(std::string("delta1_") + tag, std::vector<ArcClass>{base},
                         std::vector<ArcClass>{arc});
    return fam;
}

MeasuredLamination lamination_of_side(const GrowthSchedule& schedule, int side,
                                      const Rat& weight) {
    if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
    return MeasuredLamination(side, weight, schedule.sides[side]);
}

}  // namespace fareylab
