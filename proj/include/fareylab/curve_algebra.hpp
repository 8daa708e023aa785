#pragma once

// Curves and arcs on the once-punctured torus in homology coordinates.
// A Slope p/q names the curve of class (p, q); 1/0 is allowed and unique.
// Intersection numbers are absolute symplectic pairings, and Dehn twists act
// by the Picard-Lefschetz formula v + n*<v,g>*g.

#include "fareylab/numbers.hpp"

#include <ostream>
#include <vector>

namespace fareylab {

struct Slope {
    Int p;
    Int q;  // q >= 0; q == 0 only for 1/0

    Slope() : p(0), q(1) {}
    Slope(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        Int g = gcd(abs(p), q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        if (q == 0) p = 1;  // canonical infinity
    }

    bool is_infinity() const { return q == 0; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
};

// Canonical order: by value on the real line, with 1/0 greatest.
inline bool value_less(const Slope& a, const Slope& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.p * b.q < b.p * a.q;
}

inline std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.p.get_str() << "/" << s.q.get_str();
}

struct ArcClass {
    Int a;
    Int b;

    ArcClass(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 && b == 0) throw std::invalid_argument("arc class (0,0)");
    }

    friend bool operator==(const ArcClass& x, const ArcClass& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// <(x,y),(p,q)> = x*q - y*p
inline Int symplectic(const Int& x, const Int& y, const Int& p, const Int& q) {
    return x * q - y * p;
}

inline bool farey_adjacent(const Slope& u, const Slope& v) {
    return abs(symplectic(u.p, u.q, v.p, v.q)) == 1;
}

// Geometric intersection number of the two torus curves.
inline Int intersection_slopes(const Slope& u, const Slope& v) {
    return abs(symplectic(u.p, u.q, v.p, v.q));
}

// |a*q - b*p|: pairing of a relative arc class with a curve on the same side.
inline Int intersection_arc_curve(const ArcClass& arc, const Slope& v) {
    return abs(symplectic(arc.a, arc.b, v.p, v.q));
}

inline Slope dehn_twist(const Slope& about, const Slope& target, const Int& power) {
    Int m = symplectic(target.p, target.q, about.p, about.q);
    return Slope(target.p + power * m * about.p, target.q + power * m * about.q);
}

inline ArcClass dehn_twist(const Slope& about, const ArcClass& target, const Int& power) {
    Int m = symplectic(target.a, target.b, about.p, about.q);
    return ArcClass(target.a + power * m * about.p, target.b + power * m * about.q);
}

}  // namespace fareylab
