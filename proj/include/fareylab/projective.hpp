#pragma once

// The sum-one chart on projectivized nonnegative length vectors, with the
// sup-norm as chart metric. Everything here is exact rational arithmetic.

#include "fareylab/numbers.hpp"

#include <vector>

namespace fareylab {

struct ProjectivePoint {
    std::vector<Rat> coords;  // nonnegative, sum exactly 1
};

inline ProjectivePoint projectivize(const std::vector<Rat>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("projectivize: empty vector");
    Rat sum(0);
    for (const Rat& v : lengths) {
        if (v < 0) throw std::invalid_argument("projectivize: negative entry");
        sum += v;
    }
    if (sum == 0) throw std::invalid_argument("projectivize: zero vector");
    ProjectivePoint p;
    p.coords.reserve(lengths.size());
    for (const Rat& v : lengths) p.coords.push_back(v / sum);
    return p;
}

inline Rat proj_distance(const ProjectivePoint& u, const ProjectivePoint& v) {
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("proj_distance: index sets differ");
    Rat best(0);
    for (size_t j = 0; j < u.coords.size(); ++j) {
        Rat d = abs_rat(u.coords[j] - v.coords[j]);
        if (d > best) best = d;
    }
    return best;
}

}  // namespace fareylab
