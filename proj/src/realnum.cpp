#include "fareylab/realnum.hpp"

#include <mpfr.h>

#include <cassert>

namespace fareylab {
namespace {

struct MpfrFloat {
    mpfr_t v;
    explicit MpfrFloat(unsigned bits) { mpfr_init2(v, bits); }
    ~MpfrFloat() { mpfr_clear(v); }
    MpfrFloat(const MpfrFloat&) = delete;
    MpfrFloat& operator=(const MpfrFloat&) = delete;
};

Rat to_rat(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rat(0);
    assert(mpfr_number_p(x));
    Int mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rat r(mant);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

using Unary = int (*)(mpfr_t, const mpfr_t, mpfr_rnd_t);

// Enclosure of f(x) for f monotone increasing, x exact rational.
RatInterval monotone_enclosure(Unary f, const Rat& x, unsigned bits) {
    MpfrFloat xin(bits), out(bits);
    mpfr_set_q(xin.v, x.get_mpq_t(), MPFR_RNDD);
    f(out.v, xin.v, MPFR_RNDD);
    Rat lo = to_rat(out.v);
    mpfr_set_q(xin.v, x.get_mpq_t(), MPFR_RNDU);
    f(out.v, xin.v, MPFR_RNDU);
    Rat hi = to_rat(out.v);
    return {lo, hi};
}

}  // namespace

RatInterval exp_enclosure(const Rat& x, unsigned bits) {
    return monotone_enclosure(mpfr_exp, x, bits);
}

RatInterval log_enclosure(const Rat& x, unsigned bits) {
    if (x <= 0) throw std::invalid_argument("log of nonpositive rational");
    return monotone_enclosure(mpfr_log, x, bits);
}

RatInterval sqrt_enclosure(const Rat& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("sqrt of negative rational");
    return monotone_enclosure(mpfr_sqrt, x, bits);
}

RatInterval collar_width_enclosure(const Rat& length, unsigned bits) {
    if (length <= 0) throw std::invalid_argument("collar width of nonpositive length");
    Rat half = length / 2;
    // Lower chain: round every step down; width is 2*asinh(1/sinh(l/2)), and
    // each stage is monotone, so directions alternate through the reciprocal.
    MpfrFloat t(bits), s(bits);
    mpfr_set_q(t.v, half.get_mpq_t(), MPFR_RNDU);
    mpfr_sinh(s.v, t.v, MPFR_RNDU);
    mpfr_ui_div(t.v, 1, s.v, MPFR_RNDD);
    mpfr_asinh(s.v, t.v, MPFR_RNDD);
    mpfr_mul_ui(t.v, s.v, 2, MPFR_RNDD);
    Rat lo = to_rat(t.v);

    mpfr_set_q(t.v, half.get_mpq_t(), MPFR_RNDD);
    mpfr_sinh(s.v, t.v, MPFR_RNDD);
    mpfr_ui_div(t.v, 1, s.v, MPFR_RNDU);
    mpfr_asinh(s.v, t.v, MPFR_RNDU);
    mpfr_mul_ui(t.v, s.v, 2, MPFR_RNDU);
    Rat hi = to_rat(t.v);
    return {lo, hi};
}

RatInterval pow_enclosure(const Int& base, const Rat& expo, unsigned bits) {
    if (base < 1) throw std::invalid_argument("pow_enclosure needs base >= 1");
    if (expo < 0 || expo > 1) throw std::invalid_argument("pow_enclosure needs exponent in [0,1]");
    if (expo == 0) return RatInterval(Rat(1));
    if (expo == 1) return RatInterval(Rat(base));
    // base^expo = exp(expo * log base); base >= 1 so every stage increases.
    MpfrFloat b(bits), t(bits), e(bits);
    mpfr_set_z(b.v, base.get_mpz_t(), MPFR_RNDD);
    mpfr_log(t.v, b.v, MPFR_RNDD);
    mpfr_set_q(e.v, expo.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(t.v, t.v, e.v, MPFR_RNDD);
    mpfr_exp(t.v, t.v, MPFR_RNDD);
    Rat lo = to_rat(t.v);

    mpfr_set_z(b.v, base.get_mpz_t(), MPFR_RNDU);
    mpfr_log(t.v, b.v, MPFR_RNDU);
    mpfr_set_q(e.v, expo.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(t.v, t.v, e.v, MPFR_RNDU);
    mpfr_exp(t.v, t.v, MPFR_RNDU);
    Rat hi = to_rat(t.v);
    return {lo, hi};
}

}  // namespace fareylab
