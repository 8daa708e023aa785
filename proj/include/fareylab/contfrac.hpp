#pragma once

// Continued fractions [0; e_0, e_1, ...] with all coefficients >= 4: the
// convergent recursion, the continuant subset-family oracle, the all-subsets
// product bound, rational enclosures of the irrational limit, and the curve
// sequence the convergents trace in the Farey graph (built by Dehn twists
// with a parity-alternating sign).

#include "fareylab/curve_algebra.hpp"
#include "fareylab/interval.hpp"
#include "fareylab/numbers.hpp"

#include <utility>
#include <vector>

namespace fareylab {

struct CFSide {
    std::vector<Int> coeffs;  // e_0, e_1, ..., each >= 4
    int side = 0;             // 0 or 1

    CFSide() = default;
    CFSide(std::vector<Int> cs, int side_, size_t digit_cap = kDefaultDigitCap);

    // Skips validation; for loaders whose caller audits invariants itself.
    static CFSide unchecked(std::vector<Int> cs, int side_);

    size_t length() const { return coeffs.size(); }
};

// Convergent pairs (p_j, q_j) for j = 0..upto; p_0/q_0 = 0/1, p_1/q_1 = 1/e_0.
std::vector<Slope> convergents(const CFSide& side, size_t upto);

// q_i by explicit enumeration of the continuant subset family: products of
// coefficients over subsets obtained by deleting disjoint adjacent index
// pairs. Independent of the recursion above; refuses i > 20.
Int continuant_oracle(const CFSide& side, size_t i);

// Prod_{j<i} (1 + e_j) = the sum of products over ALL subsets of {0..i-1}.
Int subset_product_bound(const CFSide& side, size_t i);

// Enclosure of every infinite continuation of the expansion whose further
// coefficients stay >= 4. Needs i >= 2 and i <= length; width <= 1/q_i^2.
RatInterval value_interval(const CFSide& side, size_t i);

// The curves gamma_{-1} = 1/0, gamma_0 = 0/1, gamma_1, ... together with the
// twist sign chosen at each step so that D_{gamma_i}^{sign*e_i}(gamma_{i-1})
// reproduces the next convergent.
struct TwistPath {
    std::vector<Slope> curves;  // curves[j] = gamma_{j-1}; size upto+2
    std::vector<int> signs;     // signs[i] in {+1,-1}, one per applied twist
};
TwistPath curve_sequence(const CFSide& side, size_t upto);

}  // namespace fareylab
