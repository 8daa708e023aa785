#include "fareylab/contfrac.hpp"

#include <string>

namespace fareylab {

CFSide::CFSide(std::vector<Int> cs, int side_, size_t digit_cap)
    : coeffs(std::move(cs)), side(side_) {
    if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 4)
            throw std::invalid_argument("coefficient e_" + std::to_string(i) +
                                        " violates e >= 4");
        if (decimal_digits(coeffs[i]) > digit_cap)
            throw CapExceeded("coefficient e_" + std::to_string(i) +
                              " exceeds the digit cap");
    }
}

CFSide CFSide::unchecked(std::vector<Int> cs, int side_) {
    CFSide s;
    s.coeffs = std::move(cs);
    s.side = side_;
    return s;
}

std::vector<Slope> convergents(const CFSide& side, size_t upto) {
    if (upto > side.length())
        throw std::out_of_range("convergent index beyond available coefficients");
    std::vector<Slope> out;
    out.reserve(upto + 1);
    Int p0 = 0, q0 = 1;  // j = 0
    out.emplace_back(p0, q0);
    if (upto == 0) return out;
    Int p1 = 1, q1 = side.coeffs[0];  // j = 1
    out.emplace_back(p1, q1);
    for (size_t j = 2; j <= upto; ++j) {
        Int p = side.coeffs[j - 1] * p1 + p0;
        Int q = side.coeffs[j - 1] * q1 + q0;
        out.emplace_back(p, q);
        p0 = std::move(p1);
        q0 = std::move(q1);
        p1 = std::move(p);
        q1 = std::move(q);
    }
    return out;
}

Int continuant_oracle(const CFSide& side, size_t i) {
    if (i > side.length())
        throw std::out_of_range("continuant index beyond available coefficients");
    if (i > 20) throw CapExceeded("continuant enumeration refused for i > 20");
    if (i == 0) return 1;
    // A deletion mask is admissible when every maximal run of deleted indices
    // has even length, i.e. the deleted set splits into disjoint adjacent
    // pairs. Sum the products of the kept coefficients over all such masks.
    Int total = 0;
    const uint32_t n = static_cast<uint32_t>(i);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (uint32_t j = 0; j < n && ok;) {
            if (!(mask & (1u << j))) {
                ++j;
                continue;
            }
            uint32_t run = 0;
            while (j < n && (mask & (1u << j))) {
                ++run;
                ++j;
            }
            ok = (run % 2 == 0);
        }
        if (!ok) continue;
        Int prod = 1;
        for (uint32_t j = 0; j < n; ++j)
            if (!(mask & (1u << j))) prod *= side.coeffs[j];
        total += prod;
    }
    return total;
}

Int subset_product_bound(const CFSide& side, size_t i) {
    if (i > side.length())
        throw std::out_of_range("bound index beyond available coefficients");
    Int prod = 1;
    for (size_t j = 0; j < i; ++j) prod *= side.coeffs[j] + 1;
    return prod;
}

RatInterval value_interval(const CFSide& side, size_t i) {
    if (i < 2) throw std::invalid_argument("value_interval needs index >= 2");
    if (i > side.length())
        throw std::out_of_range("value_interval: insufficient coefficients");
    auto conv = convergents(side, i);
    const Slope& vi = conv[i];
    const Slope& vprev = conv[i - 1];
    Rat a = make_rat(vi.p, vi.q);
    Rat b;
    if (i < side.length()) {
        // True next convergent is available.
        Int e = side.coeffs[i];
        b = make_rat(e * vi.p + vprev.p, e * vi.q + vprev.q);
    } else {
        // Virtual next convergent with the minimal admissible coefficient 4:
        // every continuation with entries >= 4 lies between it and v_i.
        b = make_rat(4 * vi.p + vprev.p, 4 * vi.q + vprev.q);
    }
    return a <= b ? RatInterval{a, b} : RatInterval{b, a};
}

TwistPath curve_sequence(const CFSide& side, size_t upto) {
    auto conv = convergents(side, upto);
    TwistPath path;
    path.curves.push_back(Slope(1, 0));  // gamma_{-1}
    path.curves.push_back(conv[0]);      // gamma_0 = 0/1
    for (size_t i = 1; i <= upto; ++i) {
        const Slope& about = path.curves[i];      // gamma_{i-1}
        const Slope& target = path.curves[i - 1];  // gamma_{i-2}
        const Int& e = side.coeffs[i - 1];
        Slope plus = dehn_twist(about, target, e);
        Slope minus = dehn_twist(about, target, -e);
        if (plus == conv[i]) {
            path.curves.push_back(plus);
            path.signs.push_back(+1);
        } else if (minus == conv[i]) {
            path.curves.push_back(minus);
            path.signs.push_back(-1);
        } else {
            throw std::logic_error("twist recursion failed to reach convergent");
        }
    }
    return path;
}

}  // namespace fareylab
