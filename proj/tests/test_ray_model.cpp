#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fareylab/ray_model.hpp"
#include "fareylab/realnum.hpp"
#include "test_util.hpp"

using namespace fareylab;
using testutil::fours_schedule;
using testutil::toy_schedule;

namespace {
TestCurve single(const char* id, ArcClass a0, ArcClass a1) {
    return TestCurve(id, {a0}, {a1});
}
}  // namespace

TEST_CASE("active index") {
    GrowthSchedule s = fours_schedule(4);  // kmax = 7, samples span [t'_2, t'_7)
    CHECK(active_index(s.nominal_midtime(3), s) == 3);
    Rat mid = (s.nominal_midtime(3) + s.nominal_midtime(4)) / 2;
    CHECK(active_index(mid, s) == 3);
    Rat ulp(1, 1000000);
    CHECK(active_index(s.nominal_midtime(4) - ulp, s) == 3);
    CHECK(active_index(s.nominal_midtime(4), s) == 4);  // half-open boundary
    CHECK_THROWS_AS(active_index(s.nominal_midtime(2) - ulp, s), std::out_of_range);
    CHECK_THROWS_AS(active_index(s.nominal_midtime(7), s), std::out_of_range);
}

TEST_CASE("collar width") {
    // fixed point: sinh(l/2) = 1 gives w = l = 2 asinh(1)
    Rat lstar = round_dyadic(
        (Rat(2) * RatInterval(log_enclosure(Rat(1) + sqrt_enclosure(Rat(2)).lo).lo,
                              log_enclosure(Rat(1) + sqrt_enclosure(Rat(2)).hi).hi))
            .mid(),
        64);
    CHECK(abs_rat(width_of(lstar) - lstar) < Rat(1, Int(1) << 56));

    // independent high-precision composition for l = 1
    Rat w1 = width_of(Rat(1));
    RatInterval eh = exp_enclosure(Rat(1, 2), 256), el = exp_enclosure(Rat(-1, 2), 256);
    RatInterval sinh_half = (eh - el) * RatInterval(Rat(1, 2));
    RatInterval y = reciprocal(sinh_half);
    RatInterval y2p1 = y * y + RatInterval(Rat(1));
    RatInterval root{sqrt_enclosure(y2p1.lo, 256).lo, sqrt_enclosure(y2p1.hi, 256).hi};
    RatInterval arg = y + root;
    RatInterval oracle = Rat(2) * RatInterval(log_enclosure(arg.lo, 256).lo,
                                              log_enclosure(arg.hi, 256).hi);
    CHECK(abs_rat(w1 - oracle.mid()) < Rat(1, Int(1) << 60));
    CHECK(abs_rat(w1 - parse_rat("28136582274945905/10000000000000000")) < Rat(1, 1000000));

    // strictly decreasing
    CHECK(width_of(Rat(1, 2)) > width_of(Rat(1)));
    CHECK(width_of(Rat(1)) > width_of(Rat(2)));
    CHECK_THROWS_AS(width_of(Rat(0)), std::invalid_argument);
}

TEST_CASE("pinned twist") {
    GrowthSchedule s = fours_schedule(4);
    ModelParams p;
    Rat sA = s.nominal_midtime(3);
    CHECK(twist_gamma_k(sA, s, p) == 4);
    p.twist_offset = 3;
    CHECK(twist_gamma_k(sA, s, p) == 7);
    p.twist_offset = -4;
    CHECK_THROWS_AS(twist_gamma_k(sA, s, p), std::invalid_argument);
}

TEST_CASE("swept twist, geometric law") {
    GrowthSchedule s = toy_schedule({Int(9), Int(9), Int(9)}, {Int(9), Int(9), Int(9)});
    ModelParams p;
    p.interp = TwistInterp::geometric;
    Rat a = s.nominal_midtime(3), b = s.nominal_midtime(4);
    CHECK(twist_gamma_k1(a, s, p) == 1);  // left endpoint
    // theta = 1/2 gives sqrt(e_{k+1}) = 3 up to the one-time rounding
    Rat mid = twist_gamma_k1(a + (b - a) / 2, s, p);
    CHECK(abs_rat(mid - 3) < Rat(1, Int(1) << 50));
    // approaches e_{k+1} near the right end, matching the next interval's
    // pinned twist
    Rat near = twist_gamma_k1(a + (b - a) * Rat(999, 1000), s, p);
    CHECK(near > Rat(87, 10));
    CHECK(near <= 9);
    // monotone in theta
    CHECK(twist_gamma_k1(a + (b - a) / 4, s, p) < mid);
}

TEST_CASE("swept twist, mixture law") {
    GrowthSchedule s = fours_schedule(4);
    ModelParams p;  // mixture is the default
    Rat a = s.nominal_midtime(3), b = s.nominal_midtime(4);
    CHECK(twist_gamma_k1(a, s, p) == 1);
    Rat q1 = twist_gamma_k1(a + (b - a) / 4, s, p);
    Rat q2 = twist_gamma_k1(a + (b - a) / 2, s, p);
    Rat q3 = twist_gamma_k1(a + (b - a) * Rat(3, 4), s, p);
    CHECK(q1 <= q2);
    CHECK(q2 <= q3);
    CHECK(q3 <= Rat(s.coeff(4)));  // clamped to the pinned endpoint value
}

TEST_CASE("length expansion") {
    GrowthSchedule s = fours_schedule(4);
    ModelParams p;
    TestCurve d = single("d", ArcClass(1, 0), ArcClass(1, 0));
    Rat at = s.nominal_midtime(4);
    Contribution c = length_contributions(d, at, s, p);

    // the four pieces reassemble the stated expansion exactly
    Rat w_a = width_of(p.ell_active);
    Rat i_k = Rat(pair_delta_gamma(d, 4, s));
    Rat i_k1 = Rat(pair_delta_gamma(d, 5, s));
    CHECK(c.gamma_k == i_k * (w_a + Rat(s.coeff(4))));
    CHECK(c.gamma_k1 == i_k1 * (w_a + 1));  // tw = 1 at the left endpoint
    Rat f1v = s.f1_value(at);
    CHECK(c.alpha == 2 * (width_of(f1v) + f1v * s.f2_value(at)));
    CHECK(c.o_terms == i_k + i_k1 + 2);
    CHECK(length_of(d, at, s, p) == c.total());

    // collar-width lower bound: every term is nonnegative
    CHECK(length_of(d, at, s, p) >= i_k * w_a);

    // doubling every arc doubles the model length exactly
    TestCurve dd("dd", {ArcClass(1, 0), ArcClass(1, 0)}, {ArcClass(1, 0), ArcClass(1, 0)});
    CHECK(length_of(dd, at, s, p) == 2 * length_of(d, at, s, p));

    // i(delta, alpha) = 0 is unrepresentable, so the precondition holds by type
    CHECK(d.alpha_intersection() > 0);
}

TEST_CASE("xy scaling pair") {
    GrowthSchedule s = fours_schedule(4);
    ModelParams p;
    Rat at = s.nominal_midtime(4);
    XY xy = xy_of(at, s, p);
    Rat w_a = width_of(p.ell_active);
    CHECK(xy.x == w_a + Rat(s.coeff(4)));
    CHECK(xy.y == w_a + 1);
    // coarse pin: |x - ell_a e_k| <= w_a + |offset| ell_a,
    // across the whole interval
    Rat b = s.nominal_midtime(5);
    for (int j = 0; j < 4; ++j) {
        Rat sj = at + (b - at) * Rat(j, 4);
        XY z = xy_of(sj, s, p);
        CHECK(abs_rat(z.x - Rat(s.coeff(4))) <= w_a);
        CHECK(z.y > 0);
    }
    // determinism
    XY again = xy_of(at, s, p);
    CHECK(again.x == xy.x);
    CHECK(again.y == xy.y);
}

TEST_CASE("contribution identity against the scaling pair") {
    // in-model, ell_delta(gamma_k, s) = i_k * x and ell_delta(gamma_{k+1}, s)
    // = i_{k+1} * y hold exactly, at every sample point
    GrowthSchedule s = fours_schedule(5);
    ModelParams p;
    p.twist_offset = 2;
    TestCurve d("d", {ArcClass(1, 1)}, {ArcClass(0, 1)});
    Rat a = s.nominal_midtime(4), b = s.nominal_midtime(5);
    for (int j = 0; j < 5; ++j) {
        Rat at = a + (b - a) * Rat(j, 5);
        Contribution c = length_contributions(d, at, s, p);
        XY xy = xy_of(at, s, p);
        Rat i_k = Rat(pair_delta_gamma(d, 4, s));
        Rat i_k1 = Rat(pair_delta_gamma(d, 5, s));
        CHECK(c.gamma_k == i_k * xy.x);
        CHECK(c.gamma_k1 == i_k1 * xy.y);
    }
}

TEST_CASE("sample assembly keeps family order") {
    GrowthSchedule s = fours_schedule(4);
    ModelParams p;
    std::vector<TestCurve> fam = {single("a", ArcClass(1, 0), ArcClass(1, 0)),
                                  single("b", ArcClass(0, 1), ArcClass(1, 0))};
    RaySample sm = sample_ray(fam, s.nominal_midtime(3), s, p);
    REQUIRE(sm.lengths.size() == 2);
    CHECK(sm.lengths[0].first == "a");
    CHECK(sm.lengths[1].first == "b");
    CHECK(sm.k == 3);
    CHECK(sm.lengths[0].second > 0);
    CHECK(sm.lengths[1].second > 0);
}
