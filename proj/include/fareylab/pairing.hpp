#pragma once

// Genus-2 test curves as two-sided arc systems and their exact intersection
// pairings: with the schedule curves gamma_k, with the separating curve
// alpha, and with the weighted irrational laminations at the two simplex
// endpoints. Lamination pairings are certified rational intervals driven by
// convergent enclosures of x_h; nothing is ever signed through a straddle.

#include "fareylab/contfrac.hpp"
#include "fareylab/curve_algebra.hpp"
#include "fareylab/interval.hpp"
#include "fareylab/projective.hpp"
#include "fareylab/schedule.hpp"

#include <string>
#include <vector>

namespace fareylab {

struct TestCurve {
    std::string id;
    std::vector<ArcClass> arcs0;  // arcs in the side-0 holed torus
    std::vector<ArcClass> arcs1;

    TestCurve(std::string id_, std::vector<ArcClass> a0, std::vector<ArcClass> a1)
        : id(std::move(id_)), arcs0(std::move(a0)), arcs1(std::move(a1)) {
        if (arcs0.empty() || arcs0.size() != arcs1.size())
            throw std::invalid_argument(
                "test curve needs equal, nonempty arc multisets on both sides");
    }

    size_t strands() const { return arcs0.size(); }
    // Each strand crosses alpha twice (one endpoint on each side).
    Int alpha_intersection() const { return Int(2 * strands()); }
    const std::vector<ArcClass>& arcs_on(int side) const {
        return side == 0 ? arcs0 : arcs1;
    }
};

struct MeasuredLamination {
    int side;    // which holed torus carries it
    Rat weight;  // transverse measure scale, > 0
    CFSide cf;   // expansion of x_h; treated as arbitrarily extendable

    MeasuredLamination(int side_, Rat weight_, CFSide cf_)
        : side(side_), weight(std::move(weight_)), cf(std::move(cf_)) {
        if (weight <= 0) throw std::invalid_argument("lamination weight must be > 0");
        if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
    }
};

// i(delta, gamma_k): sum of |a q - b p| over the arcs on gamma_k's side.
Int pair_delta_gamma(const TestCurve& delta, size_t k, const GrowthSchedule& schedule);

// weight * sum over side arcs of |a - x_h b|, certified at the given
// convergent depth. Throws PrecisionError when an enclosure straddles zero.
RatInterval pair_delta_lamination(const TestCurve& delta, const MeasuredLamination& lam,
                                  size_t precision_index);

// Escalates the precision index until the width drops below tol.
RatInterval pair_delta_lamination_auto(const TestCurve& delta,
                                       const MeasuredLamination& lam, const Rat& tol);

// kappa(delta) = max over sides of max{2 n_h |a - x_h b|, 2/|a - x_h b|}
// taken at the maximal-pairing arc, as a certified interval. The precision
// index is capped per side at the available coefficients.
RatInterval sandwich_constant(const TestCurve& delta, const MeasuredLamination& lam0,
                              const MeasuredLamination& lam1, size_t precision_index);

// Escalates the precision index until every pairing sign resolves.
RatInterval sandwich_constant_auto(const TestCurve& delta, const MeasuredLamination& lam0,
                                   const MeasuredLamination& lam1);

// (1/kappa) e_{k-2} <= i(delta, gamma_k) <= kappa I(k), interval-safely
// (both sides checked against the lower kappa endpoint, the harder form).
bool sandwich_check(const TestCurve& delta, size_t k, const GrowthSchedule& schedule,
                    const RatInterval& kappa);

// A simplex-chart point with a certified sup-norm error bound.
struct CertPoint {
    ProjectivePoint point;
    Rat err;
};

// Projectivization of ((1-t) i(delta_j, lam0) + t i(delta_j, lam1))_j.
CertPoint simplex_point(const Rat& t, const MeasuredLamination& lam0,
                        const MeasuredLamination& lam1,
                        const std::vector<TestCurve>& family, const Rat& tol);

// The shipped six-curve family: per side, single arcs (1,0), (0,1), (1,1)
// paired with a (1,0) arc on the opposite side.
std::vector<TestCurve> default_family();

// The laminations the schedule's two coefficient sides converge to, with
// the given weights.
MeasuredLamination lamination_of_side(const GrowthSchedule& schedule, int side,
                                      const Rat& weight = Rat(1));

}  // namespace fareylab
