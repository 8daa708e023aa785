#pragma once

// Closed rational intervals with outward-exact arithmetic. Used wherever a
// quantity is only known through an enclosure (irrational slopes x_h, widths
// before dyadic rounding, the F-term of the growth condition). Comparisons
// come in "certainly" flavors; anything undecidable at the current width
// raises PrecisionError instead of guessing a sign.

#include "fareylab/numbers.hpp"

#include <algorithm>
#include <ostream>

namespace fareylab {

struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rat& point) : lo(point), hi(point) {}
    RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool straddles_zero() const { return lo < 0 && hi > 0; }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}
inline RatInterval operator*(const Rat& c, const RatInterval& a) {
    return c >= 0 ? RatInterval{c * a.lo, c * a.hi} : RatInterval{c * a.hi, c * a.lo};
}
inline RatInterval operator+(const Rat& c, const RatInterval& a) {
    return {c + a.lo, c + a.hi};
}

inline RatInterval abs_interval(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return {-a.hi, -a.lo};
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

// |a| for an interval known not to contain 0 exactly; straddling means the
// enclosure is too loose to sign, which the caller must repair with more
// precision rather than round through.
inline RatInterval abs_nonzero(const RatInterval& a) {
    if (a.lo > 0) return a;
    if (a.hi < 0) return {-a.hi, -a.lo};
    throw PrecisionError("interval straddles zero; increase precision index");
}

inline RatInterval reciprocal(const RatInterval& a) {
    if (a.lo <= 0 && a.hi >= 0)
        throw PrecisionError("reciprocal of interval containing zero");
    return {Rat(1) / a.hi, Rat(1) / a.lo};
}

inline RatInterval max_interval(const RatInterval& a, const RatInterval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline bool certainly_le(const RatInterval& a, const RatInterval& b) {
    return a.hi <= b.lo;
}
inline bool certainly_lt(const RatInterval& a, const RatInterval& b) {
    return a.hi < b.lo;
}

inline std::ostream& operator<<(std::ostream& os, const RatInterval& iv) {
    return os << "[" << rat_str(iv.lo) << ", " << rat_str(iv.hi) << "]";
}

}  // namespace fareylab
