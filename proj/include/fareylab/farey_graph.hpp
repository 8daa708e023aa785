#pragma once

// Farey graph combinatorics on Q union {1/0}: bounded neighbor enumeration,
// a restricted BFS distance oracle, geodesicity verification for convergent
// paths, and the circular-order pivot/separation test. The BFS restriction
// (denominator bound + value window, 1/0 always admitted) keeps the implicit
// graph finite; it yields an upper-bound certificate for the true Farey
// distance together with a lower bound inside the restriction.

#include "fareylab/curve_algebra.hpp"
#include "fareylab/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fareylab {

struct Window {
    Rat lo, hi;  // closed value window; 1/0 is always admitted

    Window(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("window with lo > hi");
    }

    bool admits(const Slope& s) const {
        if (s.is_infinity()) return true;
        Rat v = make_rat(s.p, s.q);
        return lo <= v && v <= hi;
    }

    // Convex hull of the finite values in a sequence, widened by 1 each side.
    static Window hull_of(const std::vector<Slope>& seq, const Rat& margin = Rat(1));
};

// The vertex set every restricted query runs over: reduced slopes with
// denominator <= qmax and value inside the window, plus 1/0. Membership is
// O(1) on the reduced form.
struct FareyRestriction {
    Int qmax;
    Window window;

    FareyRestriction(Int qmax_, Window window_)
        : qmax(std::move(qmax_)), window(std::move(window_)) {
        if (qmax < 1) throw std::invalid_argument("qmax must be >= 1");
    }

    bool contains(const Slope& s) const {
        return s.is_infinity() || (s.q <= qmax && window.admits(s));
    }
};

// Exactly the Farey neighbors of v with denominator <= qmax and value inside
// the window (1/0 included when adjacent), sorted by value, duplicate-free.
std::vector<Slope> neighbors_bounded(const Slope& v, const Int& qmax, const Window& window);

struct BfsLimits {
    size_t max_visited = 30000000;
};

// Shortest-path length between u and v in the restricted graph; nullopt when
// unreachable within the restriction. Desk-scale oracle: qmax and the window
// endpoints must fit in 32-bit words, otherwise CapExceeded.
std::optional<size_t> bfs_distance(const Slope& u, const Slope& v, const Int& qmax,
                                   const Window& window, const BfsLimits& limits = {});

struct GeodesicReport {
    bool geodesic = false;
    // distances[i] = restricted BFS distance from seq[0] to seq[i]
    std::vector<std::optional<size_t>> distances;
    std::string note;  // first failure, if any
};

// Checks bfs_distance(seq[0], seq[i]) == i for every i; entries must be
// consecutive-adjacent up front.
GeodesicReport is_geodesic_sequence(const std::vector<Slope>& seq, const Int& qmax,
                                    const Window& window, const BfsLimits& limits = {});

// For seq = [gamma_{-1}, gamma_0, gamma_1, ...] and pivot index i >= 1
// (the curve index of gamma_i), true iff gamma_{i+1} lies in the open arc
// bounded by gamma_{i-1} and gamma_i that does not contain gamma_{-1}.
// Exact circular-order sign tests; throws on repeated/degenerate entries.
bool pivot_separation(const std::vector<Slope>& seq, size_t i);

}  // namespace fareylab
