#pragma once

// The coarse simulator of the geodesic ray: on the interval [t'_k, t'_{k+1})
// the bounded pants is {gamma_k, gamma_{k+1}, alpha}; active-curve lengths
// are model constants, tw_{gamma_k} is pinned at e_k, tw_{gamma_{k+1}} sweeps
// monotonically from 1 to e_{k+1}, and the alpha terms use the worst-case
// envelope l_alpha = f1, tw_alpha = f2. All outputs are exact rationals;
// the collar-width transcendentals are rounded once and then exact.

#include "fareylab/pairing.hpp"
#include "fareylab/schedule.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fareylab {

enum class TwistInterp {
    // tw chosen so the projectivized mixture between the two active curves
    // is theta/(1-theta); realizes every simplex point in the sweep limit.
    mixture,
    // e_{k+1}^theta, the naive endpoint-matching law.
    geometric,
};

struct ModelParams {
    Rat ell_active = Rat(1);   // model length of the two active short curves
    Rat c_O = Rat(1);          // coefficient of the O(i(delta, .)) error terms
    Int twist_offset = 0;      // additive fuzz on the pinned tw = e_k
    TwistInterp interp = TwistInterp::mixture;
};

// The unique k with t'_k <= s < t'_{k+1}; needs t'_2 <= s < t'_kmax so that
// e_{k+1} exists for the interpolation.
size_t active_index(const Rat& s, const GrowthSchedule& schedule);

// 2*asinh(1/sinh(length/2)) rounded once at 64 significant bits.
Rat width_of(const Rat& length);

// tw_{gamma_k} on the active interval: e_k + twist_offset (constant).
Int twist_gamma_k(const Rat& s, const GrowthSchedule& schedule, const ModelParams& p);

// tw_{gamma_{k+1}} swept across the interval; equals 1 at s = t'_k and is
// clamped to [1, e_{k+1}].
Rat twist_gamma_k1(const Rat& s, const GrowthSchedule& schedule, const ModelParams& p);

// Contribution of one bounded-length curve: i(delta,.) * (w + l * tw).
// Exposed for the report ratios.
struct Contribution {
    Rat gamma_k;
    Rat gamma_k1;
    Rat alpha;
    Rat o_terms;
    Rat total() const { return gamma_k + gamma_k1 + alpha + o_terms; }
};
Contribution length_contributions(const TestCurve& delta, const Rat& s,
                                  const GrowthSchedule& schedule, const ModelParams& p);

// The model value of l_delta(r(s)).
Rat length_of(const TestCurve& delta, const Rat& s, const GrowthSchedule& schedule,
              const ModelParams& p);

struct XY {
    Rat x, y;
};
XY xy_of(const Rat& s, const GrowthSchedule& schedule, const ModelParams& p);

struct RaySample {
    Rat s;
    size_t k = 0;
    std::vector<std::pair<std::string, Rat>> lengths;  // (delta id, length), family order
    Rat x, y;
};
RaySample sample_ray(const std::vector<TestCurve>& family, const Rat& s,
                     const GrowthSchedule& schedule, const ModelParams& p);

}  // namespace fareylab
