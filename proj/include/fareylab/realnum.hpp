#pragma once

// Certified enclosures of the few transcendental values the model needs
// (collar widths, exponential model functions, logs in the growth budget).
// Each function evaluates one monotone chain twice under MPFR directed
// rounding and returns exact dyadic rational endpoints, so a single call is
// the only place floating point ever appears; callers round once and carry
// exact rationals from there.

#include "fareylab/interval.hpp"
#include "fareylab/numbers.hpp"

namespace fareylab {

inline constexpr unsigned kEnclosureBits = 192;

RatInterval exp_enclosure(const Rat& x, unsigned bits = kEnclosureBits);
RatInterval log_enclosure(const Rat& x, unsigned bits = kEnclosureBits);   // x > 0
RatInterval sqrt_enclosure(const Rat& x, unsigned bits = kEnclosureBits);  // x >= 0

// The collar width 2*asinh(1/sinh(length/2)) as an enclosure.
RatInterval collar_width_enclosure(const Rat& length, unsigned bits = kEnclosureBits);

// base^expo for an integer base >= 1 and rational exponent in [0, 1].
RatInterval pow_enclosure(const Int& base, const Rat& expo, unsigned bits = kEnclosureBits);

}  // namespace fareylab
