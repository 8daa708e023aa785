#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals
// (GMP), plus the handful of helpers the rest of the library leans on.
// Rationals are always kept canonical (reduced, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fareylab {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when a certified computation cannot resolve a sign/comparison at the
// requested precision; callers escalate and retry.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a configured resource cap (coefficient digits, BFS size) is hit.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses the canonical "num/den" (or plain integer) serialization.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int pow2(unsigned bits) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, bits);
    return p;
}

// Nearest multiple of 2^-bits (ties round up); exact and deterministic.
inline Rat round_dyadic(const Rat& x, unsigned bits) {
    Int scale = pow2(bits);
    Int num = x.get_num() * scale;
    const Int& den = x.get_den();
    Int q;
    // floor((2*num + den) / (2*den)) = round-half-up(num/den)
    Int t = 2 * num + den;
    Int d2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
    return make_rat(q, scale);
}

// Rounds keeping `bits` significant bits (2^-bits relative precision), so
// tiny positive values stay positive. Deterministic.
inline Rat round_significant(const Rat& x, unsigned bits) {
    if (x == 0) return x;
    long mag = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    long drop = -mag + static_cast<long>(bits);
    if (drop <= 0) {
        // Value is large; 2^-bits absolute rounding already keeps the
        // requested relative precision.
        return round_dyadic(x, bits);
    }
    return round_dyadic(x, static_cast<unsigned>(drop));
}

inline size_t decimal_digits(const Int& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 10);
}

// Default per-run cap on coefficient size; CLI can override via
// FAREYLAB_CAP_DIGITS.
inline constexpr size_t kDefaultDigitCap = 1000000;

}  // namespace fareylab
