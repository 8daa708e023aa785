#include "fareylab/farey_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

namespace fareylab {

Window Window::hull_of(const std::vector<Slope>& seq, const Rat& margin) {
    bool any = false;
    Rat lo(0), hi(0);
    for (const Slope& s : seq) {
        if (s.is_infinity()) continue;
        Rat v = make_rat(s.p, s.q);
        if (!any) {
            lo = hi = v;
            any = true;
        } else {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    }
    if (!any) throw std::invalid_argument("hull of a sequence with no finite values");
    return Window(lo - margin, hi + margin);
}

std::vector<Slope> neighbors_bounded(const Slope& v, const Int& qmax, const Window& window) {
    if (qmax < 1) throw std::invalid_argument("qmax must be >= 1");
    std::vector<Slope> out;
    if (v.is_infinity()) {
        // Neighbors of 1/0 are the integers; the window makes them finite.
        for (Int n = ceil_rat(window.lo); n <= floor_rat(window.hi); ++n)
            out.emplace_back(n, 1);
        return out;
    }
    // Solve p*s - q*r = 1; all solutions are (r0 + t*p, s0 + t*q).
    Int g, s0, mv;
    mpz_gcdext(g.get_mpz_t(), s0.get_mpz_t(), mv.get_mpz_t(), v.p.get_mpz_t(),
               v.q.get_mpz_t());
    Int r0 = -mv;  // p*s0 + q*mv = 1  =>  p*s0 - q*(-mv) = 1
    Int tmin = ceil_rat(make_rat(-qmax - s0, v.q));
    Int tmax = floor_rat(make_rat(qmax - s0, v.q));
    for (Int t = tmin; t <= tmax; ++t) {
        Int s = s0 + t * v.q;
        Int r = r0 + t * v.p;
        Slope w = (s == 0) ? Slope(1, 0) : Slope(r, s);
        if (window.admits(w)) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), value_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Desk-scale BFS internals work in machine words. Vertices are packed into
// one key; the guards below keep every product inside __int128.
struct BfsCtx {
    int64_t qmax;
    int64_t lo_n, lo_d, hi_n, hi_d;  // window endpoints, d > 0
    uint64_t p_offset;               // |p| bound for packing
    uint64_t stride;

    static constexpr int64_t kQmaxLimit = 1ll << 26;
    static constexpr int64_t kValLimit = 512;

    uint64_t key(int64_t p, int64_t q) const {
        return (static_cast<uint64_t>(p + static_cast<int64_t>(p_offset))) * stride +
               static_cast<uint64_t>(q);
    }
    static constexpr uint64_t kInfinityKey = ~0ull;

    bool in_window(int64_t r, int64_t s) const {
        // lo <= r/s <= hi with s > 0
        __int128 a = static_cast<__int128>(r) * lo_d - static_cast<__int128>(lo_n) * s;
        if (a < 0) return false;
        __int128 b = static_cast<__int128>(hi_n) * s - static_cast<__int128>(r) * hi_d;
        return b >= 0;
    }
};

int64_t to_i64(const Int& x, const char* what) {
    if (!x.fits_slong_p()) throw CapExceeded(std::string("bfs oracle: ") + what +
                                             " exceeds desk scale");
    long v = x.get_si();
    return static_cast<int64_t>(v);
}

void extgcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    // a*x + b*y = gcd(a,b)
    int64_t old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        int64_t qq = old_r / r;
        int64_t tmp = old_r - qq * r;
        old_r = r;
        r = tmp;
        tmp = old_x - qq * xx;
        old_x = xx;
        xx = tmp;
        tmp = old_y - qq * yy;
        old_y = yy;
        yy = tmp;
    }
    x = old_x;
    y = old_y;
}

template <typename Visit>
void for_each_neighbor(const BfsCtx& ctx, int64_t p, int64_t q, Visit&& visit) {
    if (q == 0) {
        // integers inside the window
        int64_t nmin = (ctx.lo_n >= 0) ? (ctx.lo_n + ctx.lo_d - 1) / ctx.lo_d
                                       : -((-ctx.lo_n) / ctx.lo_d);
        int64_t nmax = (ctx.hi_n >= 0) ? ctx.hi_n / ctx.hi_d
                                       : -(((-ctx.hi_n) + ctx.hi_d - 1) / ctx.hi_d);
        for (int64_t n = nmin; n <= nmax; ++n) visit(n, 1);
        return;
    }
    int64_t s0, mv;
    extgcd(p, q, s0, mv);  // p*s0 + q*mv = 1
    int64_t r0 = -mv;
    // t range from |s0 + t*q| <= qmax
    int64_t tmin = -((ctx.qmax + s0) / q) - 2;
    int64_t tmax = ((ctx.qmax - s0) / q) + 2;
    for (int64_t t = tmin; t <= tmax; ++t) {
        int64_t s = s0 + t * q;
        if (s < -ctx.qmax || s > ctx.qmax) continue;
        int64_t r = r0 + t * p;
        if (s == 0) {
            visit(1, 0);
            continue;
        }
        if (s < 0) {
            s = -s;
            r = -r;
        }
        if (ctx.in_window(r, s)) visit(r, s);
    }
}

}  // namespace

std::optional<size_t> bfs_distance(const Slope& u, const Slope& v, const Int& qmax,
                                   const Window& window, const BfsLimits& limits) {
    if (u == v) return 0;
    if (qmax < 1) throw std::invalid_argument("qmax must be >= 1");
    if (qmax > BfsCtx::kQmaxLimit)
        throw CapExceeded("bfs oracle: qmax exceeds desk scale");
    if (abs_rat(window.lo) > BfsCtx::kValLimit || abs_rat(window.hi) > BfsCtx::kValLimit)
        throw CapExceeded("bfs oracle: window exceeds desk scale");
    FareyRestriction restriction(qmax, window);
    if (!restriction.contains(u) || !restriction.contains(v))
        throw std::invalid_argument("bfs endpoint outside the restriction");

    BfsCtx ctx;
    ctx.qmax = to_i64(qmax, "qmax");
    ctx.lo_n = to_i64(window.lo.get_num(), "window");
    ctx.lo_d = to_i64(window.lo.get_den(), "window");
    ctx.hi_n = to_i64(window.hi.get_num(), "window");
    ctx.hi_d = to_i64(window.hi.get_den(), "window");
    ctx.p_offset = static_cast<uint64_t>(BfsCtx::kValLimit) *
                       static_cast<uint64_t>(ctx.qmax) + 2;
    ctx.stride = static_cast<uint64_t>(ctx.qmax) + 1;

    // Search from the deeper endpoint: its restricted degree is tiny, which
    // keeps the early shells small.
    const Slope& src = (u.q >= v.q) ? u : v;
    const Slope& dst = (u.q >= v.q) ? v : u;
    int64_t sp = to_i64(src.p, "endpoint"), sq = to_i64(src.q, "endpoint");
    int64_t dp = to_i64(dst.p, "endpoint"), dq = to_i64(dst.q, "endpoint");
    uint64_t dst_key = (dq == 0) ? BfsCtx::kInfinityKey : ctx.key(dp, dq);

    std::unordered_set<uint64_t> visited;
    visited.reserve(1 << 16);
    std::deque<std::pair<int64_t, int64_t>> frontier, next;
    frontier.emplace_back(sp, sq);
    visited.insert((sq == 0) ? BfsCtx::kInfinityKey : ctx.key(sp, sq));

    for (size_t depth = 1; !frontier.empty(); ++depth) {
        next.clear();
        for (const auto& [p, q] : frontier) {
            bool found = false;
            for_each_neighbor(ctx, p, q, [&](int64_t r, int64_t s) {
                if (found) return;
                uint64_t k = (s == 0) ? BfsCtx::kInfinityKey : ctx.key(r, s);
                if (k == dst_key) {
                    found = true;
                    return;
                }
                if (visited.insert(k).second) next.emplace_back(r, s);
            });
            if (found) return depth;
            if (visited.size() > limits.max_visited)
                throw CapExceeded("bfs oracle: visited-set cap exceeded");
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

GeodesicReport is_geodesic_sequence(const std::vector<Slope>& seq, const Int& qmax,
                                    const Window& window, const BfsLimits& limits) {
    GeodesicReport rep;
    if (seq.size() < 2) {
        rep.note = "sequence too short";
        return rep;
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!farey_adjacent(seq[i], seq[i + 1])) {
            rep.note = "consecutive entries not Farey-adjacent at index " +
                       std::to_string(i);
            return rep;
        }
    }
    rep.distances.assign(seq.size(), std::nullopt);
    rep.distances[0] = 0;
    for (size_t i = 1; i < seq.size(); ++i) {
        auto d = bfs_distance(seq[0], seq[i], qmax, window, limits);
        rep.distances[i] = d;
        if (!d) {
            rep.note = "UNREACHABLE within restriction at index " + std::to_string(i);
            return rep;
        }
        if (*d != i) {
            rep.note = "shortcut: distance to index " + std::to_string(i) + " is " +
                       std::to_string(*d);
            return rep;
        }
    }
    rep.geodesic = true;
    return rep;
}

namespace {

int det_sign(const Slope& a, const Slope& b) {
    Int d = a.p * b.q - b.p * a.q;
    return sgn(d);
}

// Sign classifying which open arc of the circle minus {u, v} contains x;
// 0 when x coincides with u or v.
int arc_side(const Slope& u, const Slope& v, const Slope& x) {
    return det_sign(u, x) * det_sign(x, v);
}

}  // namespace

bool pivot_separation(const std::vector<Slope>& seq, size_t i) {
    if (i < 1 || i + 2 >= seq.size())
        throw std::out_of_range("pivot index out of range");
    const Slope& origin = seq[0];        // gamma_{-1}
    const Slope& u = seq[i];             // gamma_{i-1}
    const Slope& v = seq[i + 1];         // gamma_i
    const Slope& x = seq[i + 2];         // gamma_{i+1}
    if (u == v) throw std::invalid_argument("degenerate pivot: repeated endpoints");
    int sx = arc_side(u, v, x);
    int so = arc_side(u, v, origin);
    if (sx == 0 || so == 0)
        throw std::invalid_argument("degenerate pivot: point on arc boundary");
    return sx != so;
}

}  // namespace fareylab
