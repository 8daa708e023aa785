#include "fareylab/schedule.hpp"

#include "fareylab/realnum.hpp"

#include <string>

namespace fareylab {

Rat EtaParams::at(size_t k) const {
    switch (kind) {
        case Kind::power: {
            Int den;
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k + 1), exponent);
            return scale / Rat(den);
        }
        case Kind::custom:
            if (k >= custom.size())
                throw std::out_of_range("custom eta sequence too short");
            return custom[k];
    }
    throw std::logic_error("unreachable");
}

void EtaParams::validate(size_t kmax) const {
    if (kind == Kind::power) {
        if (scale <= 0) throw std::invalid_argument("eta scale must be positive");
        if (exponent < 1) throw std::invalid_argument("eta exponent must be >= 1");
        return;
    }
    if (custom.size() < kmax + 1)
        throw std::invalid_argument("custom eta sequence shorter than kmax+1");
    for (size_t k = 0; k + 1 <= kmax; ++k) {
        if (custom[k] <= 0)
            throw std::invalid_argument("eta must be positive");
        if (k + 1 <= kmax && custom[k + 1] >= custom[k])
            throw std::invalid_argument("eta must be strictly decreasing");
    }
}

void ScheduleParams::validate() const {
    if (D <= 0) throw std::invalid_argument("D must be positive");
    if (f1.c <= 0 || f1.rate <= 0)
        throw std::invalid_argument("f1 must be positive decreasing (c > 0, rate > 0)");
    if (f2.c <= 0 || f2.slope <= 0)
        throw std::invalid_argument("f2 must be positive increasing (c > 0, slope > 0)");
    if (f1.c > ell_alpha_bound)
        throw std::invalid_argument("f1(0) exceeds the configured alpha-length bound");
    for (const Int& K : floors)
        if (K < 4) throw std::invalid_argument("floor K_k below 4");
    if (floor_default < 4) throw std::invalid_argument("default floor below 4");
    eta.validate(kmax);
}

Int ScheduleParams::floor_at(size_t k) const {
    return k < floors.size() ? floors[k] : floor_default;
}

Slope GrowthSchedule::gamma(size_t k) const {
    size_t i = conv_index(k);
    auto conv = convergents(sides[side_of(k)], i);
    return conv[i];
}

Int GrowthSchedule::growth_bound(size_t k) const {
    return subset_product_bound(sides[side_of(k)], conv_index(k));
}

Rat GrowthSchedule::f2_value(const Rat& s) const {
    return params.f2.c * (1 + params.f2.slope * s);
}

RatInterval GrowthSchedule::f1_enclosure(const Rat& s) const {
    return params.f1.c * exp_enclosure(-params.f1.rate * s);
}

Rat GrowthSchedule::f1_value(const Rat& s) const {
    return round_significant(f1_enclosure(s).mid(), 64);
}

RatInterval GrowthSchedule::f_term(size_t k) const {
    // F_{1,k} = f1(t_{k+2}) (f1 decreasing), F_{2,k} = f2(t_{k+2}).
    const Rat& t = times.at(k + 2);
    Rat f2v = f2_value(t);
    Rat base = f2v + 2 * params.f1.rate * t;  // -2 log(exp(-rate t)) = 2 rate t
    if (params.f1.c == 1) return RatInterval(base);
    RatInterval logc = log_enclosure(params.f1.c);
    return RatInterval(base) - (Rat(2) * logc);
}

namespace {

std::vector<Rat> nominal_times(const Rat& D, size_t upto) {
    std::vector<Rat> t;
    t.reserve(upto + 1);
    for (size_t k = 0; k <= upto; ++k) {
        size_t i = k / 2;
        if (k % 2 == 0)
            t.push_back(D / 2 + Rat(static_cast<unsigned long>(i)) * D);
        else
            t.push_back(Rat(static_cast<unsigned long>(i + 1)) * D);
    }
    return t;
}

}  // namespace

GrowthSchedule generate_schedule(const ScheduleParams& params) {
    params.validate();
    GrowthSchedule s;
    s.params = params;
    s.times = nominal_times(params.D, params.kmax + 2);
    s.midtimes.reserve(params.kmax + 2);
    for (size_t k = 0; k + 1 < s.times.size(); ++k)
        s.midtimes.push_back((s.times[k] + s.times[k + 1]) / 2);

    std::vector<Int> side_coeffs[2];
    Int prod[2] = {Int(1), Int(1)};  // running Prod (1 + e_j^h)
    for (size_t k = 0; k <= params.kmax; ++k) {
        // I(k) and I(k+1) depend only on the prefix e_0..e_{k-1}: they are
        // the current products over side k mod 2 and side (k+1) mod 2.
        Rat mx = Rat(prod[k % 2]);
        if (Rat(prod[(k + 1) % 2]) > mx) mx = Rat(prod[(k + 1) % 2]);
        // times are already laid out to kmax+2, so the F-term is available
        Rat fterm_hi = s.f_term(k).hi;
        if (fterm_hi > mx) mx = fterm_hi;
        if (mx < 1) mx = 1;

        Int ek = ceil_rat(mx / params.eta.at(k));
        if (ek < 4) ek = 4;
        Int K = params.floor_at(k);
        if (ek < K) ek = K;
        if (decimal_digits(ek) > params.digit_cap)
            throw CapExceeded("schedule coefficient e_" + std::to_string(k) +
                              " exceeds the digit cap");
        prod[k % 2] *= ek + 1;
        side_coeffs[k % 2].push_back(ek);
        s.e.push_back(std::move(ek));
    }
    s.sides[0] = CFSide(side_coeffs[0], 0, params.digit_cap);
    s.sides[1] = CFSide(side_coeffs[1], 1, params.digit_cap);

    // Everything below holds by construction; audit loudly anyway.
    for (const auto& c : check_schedule(s))
        if (!c.pass)
            throw std::logic_error("generated schedule violates " + c.name + ": " +
                                   c.detail);
    return s;
}

std::vector<ScheduleCheck> check_schedule(const GrowthSchedule& s) {
    std::vector<ScheduleCheck> out;
    auto add = [&out](const std::string& name, bool pass, std::string detail = "") {
        out.push_back({name, pass, std::move(detail)});
    };

    bool floors_ok = true;
    std::string floors_detail;
    for (size_t k = 0; k < s.e.size(); ++k) {
        Int need = s.params.floor_at(k);
        if (need < 4) need = 4;
        if (s.e[k] < need) {
            floors_ok = false;
            floors_detail = "e_" + std::to_string(k) + " = " + s.e[k].get_str() +
                            " below max(4, K_k)";
            break;
        }
    }
    add("coefficient-floor", floors_ok, floors_detail);

    bool gr1_ok = true, gr1b_ok = true, gr2_ok = true;
    std::string d1, d1b, d2;
    if (floors_ok) {
        for (size_t k = 0; k <= s.kmax(); ++k) {
            Rat budget = s.eta_at(k) * Rat(s.coeff(k));
            if (gr1_ok && Rat(s.growth_bound(k)) > budget) {
                gr1_ok = false;
                d1 = "I(k)/e_k > eta_k at k = " + std::to_string(k);
            }
            if (gr1b_ok && Rat(s.growth_bound(k + 1)) > budget) {
                gr1b_ok = false;
                d1b = "I(k+1)/e_k > eta_k at k = " + std::to_string(k);
            }
            if (gr2_ok && s.f_term(k).hi > budget) {
                gr2_ok = false;
                d2 = "(F2 - 2 log F1)/e_k > eta_k at k = " + std::to_string(k);
            }
        }
    }
    add("growth-I(k)", gr1_ok, d1);
    add("growth-I(k+1)", gr1b_ok, d1b);
    add("growth-F-term", gr2_ok, d2);

    bool times_ok = true;
    std::string dt;
    for (size_t k = 0; k + 1 < s.times.size(); ++k) {
        if (s.times[k + 1] - s.times[k] <= s.params.D / 4) {
            times_ok = false;
            dt = "t_{k+1} - t_k <= D/4 at k = " + std::to_string(k);
            break;
        }
    }
    add("times-increasing", times_ok, dt);
    return out;
}

}  // namespace fareylab
