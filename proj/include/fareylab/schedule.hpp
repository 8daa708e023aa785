#pragma once

// Coefficient schedules satisfying the growth conditions: the greedy
// generator, the interleaved two-side indexing, nominal times, and the model
// functions f1 (alpha-length floor, decreasing) and f2 (alpha-twist bound,
// increasing) together with their window extrema F_{1,k}, F_{2,k}.

#include "fareylab/contfrac.hpp"
#include "fareylab/interval.hpp"
#include "fareylab/numbers.hpp"

#include <array>
#include <vector>

namespace fareylab {

struct EtaParams {
    enum class Kind { power, custom } kind = Kind::power;
    Rat scale = Rat(1);            // power: eta_k = scale / (k + 1)^exponent
    unsigned exponent = 3;
    std::vector<Rat> custom;       // custom: explicit eta_0, eta_1, ...

    Rat at(size_t k) const;
    void validate(size_t kmax) const;  // positive, strictly decreasing
};

// f1(s) = c * exp(-rate * s): positive and strictly decreasing.
struct F1Params {
    Rat c = Rat(1);
    Rat rate = Rat(1);
};

// f2(s) = c * (1 + slope * s): positive and strictly increasing.
struct F2Params {
    Rat c = Rat(1);
    Rat slope = Rat(1);
};

struct ScheduleParams {
    Rat D = Rat(1);
    size_t kmax = 12;
    std::vector<Int> floors;       // K_k, padded with floor_default
    Int floor_default = 4;
    EtaParams eta;
    F1Params f1;
    F2Params f2;
    Rat ell_alpha_bound = Rat(1);  // f1(0) must not exceed this
    size_t digit_cap = kDefaultDigitCap;

    void validate() const;
    Int floor_at(size_t k) const;
};

struct GrowthSchedule {
    ScheduleParams params;
    std::vector<Int> e;            // interleaved e_0 .. e_kmax
    std::array<CFSide, 2> sides;   // e_{2i+h} = e_i^h
    std::vector<Rat> times;        // t_0 .. t_{kmax+2}
    std::vector<Rat> midtimes;     // t'_0 .. t'_{kmax+1}

    size_t kmax() const { return params.kmax; }
    const Int& coeff(size_t k) const { return e.at(k); }
    int side_of(size_t k) const { return static_cast<int>(k % 2); }
    size_t conv_index(size_t k) const { return k / 2; }

    Rat nominal_time(size_t k) const { return times.at(k); }
    Rat nominal_midtime(size_t k) const { return midtimes.at(k); }
    Rat eta_at(size_t k) const { return params.eta.at(k); }

    // The curve gamma_k as a Farey vertex (the conv_index(k)-th convergent of
    // side k mod 2).
    Slope gamma(size_t k) const;

    // I(k) = I_{k mod 2}(k/2), the all-subsets product bound.
    Int growth_bound(size_t k) const;

    Rat f2_value(const Rat& s) const;          // exact rational
    RatInterval f1_enclosure(const Rat& s) const;
    Rat f1_value(const Rat& s) const;          // rounded once, then exact

    // F_{2,k} - 2 log F_{1,k}; a point interval when log f1.c is exactly 0.
    RatInterval f_term(size_t k) const;
};

GrowthSchedule generate_schedule(const ScheduleParams& params);

// Names of the invariants audited by check_schedule.
struct ScheduleCheck {
    std::string name;
    bool pass;
    std::string detail;
};
std::vector<ScheduleCheck> check_schedule(const GrowthSchedule& s);

}  // namespace fareylab
