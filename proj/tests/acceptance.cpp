// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// argv[1] (optional, wired from the build) is the CLI binary used by the
// byte-determinism criterion.

#include "fareylab/contfrac.hpp"
#include "fareylab/farey_graph.hpp"
#include "fareylab/io.hpp"
#include "fareylab/limit_analysis.hpp"
#include "fareylab/pairing.hpp"
#include "fareylab/ray_model.hpp"
#include "fareylab/schedule.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fareylab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<Outcome> g_results;

void run(int id, const std::string& name, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o{id, name, false, "", 0.0};
    try {
        o.detail = body();
        o.pass = true;
    } catch (const std::exception& e) {
        o.detail = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    g_results.push_back(o);
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id,
                name.c_str(), o.seconds, o.detail.empty() ? "" : " - ",
                o.detail.c_str());
    std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

Rat pow10_inv(unsigned n) {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, n);
    return make_rat(1, d);
}

// Shared default pipeline (criteria 6-13).
struct Pipeline {
    GrowthSchedule schedule;
    std::vector<TestCurve> family;
    MeasuredLamination lam0, lam1;
    SegmentChart chart;

    Pipeline()
        : schedule(generate_schedule(ScheduleParams{})),
          family(default_family()),
          lam0(lamination_of_side(schedule, 0)),
          lam1(lamination_of_side(schedule, 1)),
          chart(lam0, lam1, family) {}
};

// ---- criterion bodies -----------------------------------------------------

std::string c1_convergents() {
    CFSide fig(std::vector<Int>(8, Int(4)), 0);
    TwistPath path = curve_sequence(fig, 3);
    require(path.curves[0] == Slope(1, 0) && path.curves[1] == Slope(0, 1) &&
                path.curves[2] == Slope(1, 4) && path.curves[3] == Slope(4, 17),
            "curve sequence prefix mismatch");
    std::mt19937_64 rng(20260808);
    std::uniform_int_distribution<int> coeff(4, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> cs;
        for (int i = 0; i < 12; ++i) cs.emplace_back(coeff(rng));
        CFSide side(cs, trial % 2);
        auto conv = convergents(side, 12);
        for (size_t i = 0; i <= 12; ++i)
            require(conv[i].q == continuant_oracle(side, i),
                    "continuant mismatch at trial " + std::to_string(trial));
    }
    return "prefix exact; 100 random tuples, i <= 12";
}

std::string c2_intersection_oracle() {
    std::vector<Slope> slopes;
    slopes.emplace_back(1, 0);
    for (int q = 1; q <= 12; ++q)
        for (int p = -12; p <= 12; ++p) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            slopes.emplace_back(p, q);
        }
    // Cache wrapped representatives at two generic basepoints.
    using Segs = std::vector<oracle::Seg>;
    std::vector<Segs> wrapA, wrapB;
    oracle::Vec2 oa{Rat(1, 97), Rat(1, 89)}, ob{Rat(1, 101), Rat(1, 103)};
    for (const Slope& s : slopes) {
        wrapA.push_back(oracle::wrap_path(oa, s.p, s.q));
        wrapB.push_back(oracle::wrap_path(ob, s.p, s.q));
    }
    size_t pairs = 0, fallbacks = 0;
    for (size_t i = 0; i < slopes.size(); ++i) {
        for (size_t j = i; j < slopes.size(); ++j) {
            Int expect = intersection_slopes(slopes[i], slopes[j]);
            Int got;
            try {
                got = 0;
                for (const auto& x : wrapA[i])
                    for (const auto& y : wrapB[j])
                        if (oracle::segments_cross(x, y)) ++got;
            } catch (const oracle::Degenerate&) {
                ++fallbacks;
                got = oracle::torus_crossing_count(slopes[i].p, slopes[i].q, slopes[j].p,
                                                   slopes[j].q);
            }
            require(expect == got, "oracle mismatch at pair " + std::to_string(i) + "," +
                                       std::to_string(j));
            ++pairs;
        }
    }
    return std::to_string(pairs) + " slope pairs (|p|,q <= 12), " +
           std::to_string(fallbacks) + " degenerate retries";
}

std::string c3_twist_recursion() {
    ScheduleParams p;
    p.kmax = 20;
    GrowthSchedule s = generate_schedule(p);
    for (int h = 0; h < 2; ++h) {
        const CFSide& side = s.sides[h];
        auto conv = convergents(side, side.length());
        TwistPath path = curve_sequence(side, side.length());
        for (size_t i = 0; i < side.length(); ++i) {
            require(path.curves[i + 1] == conv[i], "sequence/convergent mismatch");
            if (i >= 1)
                require(path.signs[i] == -path.signs[i - 1],
                        "twist sign fails to alternate at side " + std::to_string(h) +
                            " step " + std::to_string(i));
        }
    }
    return "kmax = 20 schedule; both sides; parity-alternating signs verified";
}

std::string c4_geodesic() {
    CFSide fig(std::vector<Int>(7, Int(4)), 0);
    TwistPath path = curve_sequence(fig, 7);
    Window w = Window::hull_of(path.curves);
    GeodesicReport rep = is_geodesic_sequence(path.curves, path.curves.back().q, w);
    require(rep.geodesic, "BFS found a shortcut or unreachable vertex: " + rep.note);
    return "[0;4,4,...] to depth 7; caveat: restricted oracle (qmax = q_i, window = "
           "hull +/- 1), an upper-bound certificate plus restricted lower bound";
}

std::string c5_pivots(const Pipeline& pl) {
    for (int h = 0; h < 2; ++h) {
        const CFSide& side = pl.schedule.sides[h];
        TwistPath path = curve_sequence(side, side.length());
        for (size_t i = 1; i + 2 < path.curves.size() && i <= 30; ++i)
            require(pivot_separation(path.curves, i),
                    "pivot fails on schedule side " + std::to_string(h) + " at " +
                        std::to_string(i));
    }
    CFSide deep(std::vector<Int>(32, Int(4)), 0);
    TwistPath path = curve_sequence(deep, 32);
    for (size_t i = 1; i <= 30; ++i)
        require(pivot_separation(path.curves, i),
                "pivot fails on [0;4,4,...] at " + std::to_string(i));
    return "all schedule-side pivots plus [0;4,4,...] pivots 1..30";
}

std::string c6_growth(const Pipeline& pl) {
    const GrowthSchedule& s = pl.schedule;
    require(s.kmax() == 12, "default kmax is not 12");
    for (size_t k = 0; k <= 12; ++k) {
        Rat harmonic = Rat(1, static_cast<unsigned long>(k + 1));
        Rat budget = harmonic * Rat(s.coeff(k));
        require(Rat(s.growth_bound(k)) <= budget,
                "I(k)/e_k > 1/(k+1) at k = " + std::to_string(k));
        require(Rat(s.growth_bound(k + 1)) <= budget,
                "I(k+1)/e_k > 1/(k+1) at k = " + std::to_string(k));
        require(s.f_term(k).hi <= budget,
                "(F2 - 2 log F1)/e_k > 1/(k+1) at k = " + std::to_string(k));
    }
    return "three ratio families <= 1/(k+1) for k <= 12, interval-safe";
}

std::string c7_sandwich(const Pipeline& pl) {
    for (const TestCurve& delta : pl.family) {
        RatInterval kappa = sandwich_constant_auto(delta, pl.lam0, pl.lam1);
        for (size_t k = 4; k <= 12; ++k)
            require(sandwich_check(delta, k, pl.schedule, kappa),
                    "sandwich fails for " + delta.id + " at k = " + std::to_string(k));
    }
    return "certified kappa per curve; 4 <= k <= 12";
}

std::string c8_decay(const Pipeline& pl) {
    const Rat threshold(1, 100);
    for (const TestCurve& delta : pl.family) {
        for (size_t which = 0; which < 2; ++which) {
            // ratio_k = i(delta, gamma_{k+which})/e_k, per parity class
            for (size_t parity = 0; parity < 2; ++parity) {
                Rat prev(-1);
                for (size_t k = 4 + parity; k <= 12; k += 2) {
                    Rat r = Rat(pair_delta_gamma(delta, k + which, pl.schedule)) /
                            Rat(pl.schedule.coeff(k));
                    if (prev >= 0)
                        require(r < prev, "ratio not strictly decreasing for " + delta.id +
                                              " at k = " + std::to_string(k));
                    if (k >= 8)
                        require(r < threshold, "ratio >= 1e-2 for " + delta.id +
                                                   " at k = " + std::to_string(k));
                    prev = r;
                }
            }
        }
    }
    return "i(d,g_k)/e_k and i(d,g_{k+1})/e_k decreasing per parity, < 1e-2 from k = 8";
}

std::string c9_ratios(const Pipeline& pl, const ModelParams& params, bool pin_golden) {
    const Rat tol(1, 100);
    const Rat golden = pow10_inv(99);
    std::ostringstream note;
    for (int parity = 0; parity < 2; ++parity) {
        auto rows = endpoint_convergence_report(pl.schedule, pl.family, params, parity,
                                                pl.chart);
        for (const auto& row : rows) {
            if (row.k < 10) continue;
            for (size_t j = 0; j < row.twist_ratios.size(); ++j) {
                Rat dev = abs_rat(row.twist_ratios[j] - 1);
                require(dev <= tol, "ratio off by " + rat_str(dev) + " for " +
                                        pl.family[j].id + " at k = " + std::to_string(row.k));
                if (pin_golden)
                    require(dev <= golden,
                            "ratio misses the pinned golden bound 1e-99 at k = " +
                                std::to_string(row.k));
            }
        }
    }
    note << "|ratio - 1| <= 1e-2 at k >= 10" << (pin_golden ? "; golden bound 1e-99 held" : "");
    return note.str();
}

std::string c10_endpoints(const Pipeline& pl, const ModelParams& params, bool pin_golden) {
    const Rat tol(1, 1000);
    const Rat golden = pow10_inv(85);
    for (int parity = 0; parity < 2; ++parity) {
        auto rows = endpoint_convergence_report(pl.schedule, pl.family, params, parity,
                                                pl.chart);
        require(rows.size() >= 3, "too few endpoint samples");
        for (size_t i = 0; i + 1 < rows.size(); ++i) {
            if (rows[i].k < 4) continue;
            require(rows[i + 1].dist_to_endpoint.hi < rows[i].dist_to_endpoint.lo,
                    "distance not certifiably decreasing at k = " +
                        std::to_string(rows[i].k));
        }
        require(rows.back().dist_to_endpoint.hi < tol,
                "final distance >= 1e-3 (parity " + std::to_string(parity) + ")");
        if (pin_golden)
            require(rows.back().dist_to_endpoint.hi < golden,
                    "final distance misses the pinned golden bound 1e-85");
    }
    return std::string("even -> endpoint 0, odd -> endpoint 1; strict decrease for k >= 4") +
           (pin_golden ? "; golden bound 1e-85 held" : "");
}

std::string c11_sweep(const Pipeline& pl, const ModelParams& params) {
    const Rat tol(1, 100);
    std::vector<Rat> thetas = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    auto reps = sweep_report(pl.schedule, pl.family, params, thetas, pl.chart, Rat(1, 1000));
    std::vector<ProjectivePoint> finals;
    for (const auto& rep : reps) {
        const SweepRow& last = rep.rows.back();
        require(last.dist_to_segment.hi <= tol,
                "sweep final off-segment at theta = " + rat_str(rep.theta));
        finals.push_back(last.point);
    }
    for (size_t i = 0; i < finals.size(); ++i)
        for (size_t j = i + 1; j < finals.size(); ++j)
            require(proj_distance(finals[i], finals[j]) >= tol,
                    "sweep limits " + std::to_string(i) + "," + std::to_string(j) +
                        " not separated");
    return "theta in {1/4, 1/2, 3/4}: on-segment <= 1e-2, pairwise >= 1e-2 at kmax = 12";
}

std::string c12_alpha_share(const Pipeline& pl) {
    const Rat tol(1, 1000);
    ModelParams params;
    for (int parity = 0; parity < 2; ++parity) {
        auto rows = endpoint_convergence_report(pl.schedule, pl.family, params, parity,
                                                pl.chart);
        for (const auto& row : rows)
            if (row.k >= 10)
                require(row.alpha_share_max < tol,
                        "alpha share >= 1e-3 at k = " + std::to_string(row.k));
    }
    auto reps = sweep_report(pl.schedule, pl.family, params, {Rat(1, 2)}, pl.chart,
                             Rat(1, 1000));
    for (const auto& row : reps.front().rows)
        if (row.k >= 10)
            require(row.alpha_share_max < tol, "alpha share >= 1e-3 on the sweep");
    return "alpha contribution share < 1e-3 for every sampled vector with k >= 10";
}

std::string c13_robustness(const Pipeline& pl) {
    struct Variant {
        Rat ell;
        Int offset;
        const char* tag;
    };
    const Variant variants[] = {{Rat(1, 2), Int(0), "ell=1/2"},
                                {Rat(2), Int(0), "ell=2"},
                                {Rat(1), Int(-10), "offset=-10"},
                                {Rat(1), Int(10), "offset=+10"}};
    for (const Variant& v : variants) {
        ModelParams params;
        params.ell_active = v.ell;
        params.twist_offset = v.offset;
        try {
            c9_ratios(pl, params, false);
            c10_endpoints(pl, params, false);
            c11_sweep(pl, params);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("verdict changed under ") + v.tag + ": " +
                                     e.what());
        }
    }
    return "criteria 9-11 verdicts unchanged for ell_active in {1/2, 2}, offset in {-10, +10}";
}

std::string c14_determinism(const std::string& cli) {
    require(!cli.empty(), "CLI path not provided (pass it as argv[1])");
    fs::path base = fs::temp_directory_path() / "fareylab_acceptance";
    fs::remove_all(base);
    std::vector<std::string> artifacts = {
        "schedule.json",          "schedule.json.manifest.json",
        "check.json",             "check.json.manifest.json",
        "lengths.csv",            "lengths.csv.manifest.json",
        "sweep.csv",              "sweep.csv.manifest.json",
        "limits.json",            "limits.json.manifest.json",
        "limits_sweep.json",      "limits_sweep.json.manifest.json",
        "farey.svg",              "farey.svg.manifest.json",
        "simplex.svg",            "simplex.svg.manifest.json"};
    for (int runidx = 0; runidx < 2; ++runidx) {
        fs::path dir = base / ("run" + std::to_string(runidx));
        fs::create_directories(dir);
        // equal configuration: identical relative paths, different cwd
        auto sh = [&cli, &dir](const std::string& args) {
            std::string cmd = "cd \"" + dir.string() + "\" && \"" + cli + "\" " + args +
                              " > /dev/null 2>&1";
            int rc = std::system(cmd.c_str());
            require(rc == 0, "CLI failed: " + args);
        };
        sh("schedule --out schedule.json");
        sh("check --schedule schedule.json --out check.json");
        sh("simulate --schedule schedule.json --parity both --out lengths.csv");
        sh("simulate --schedule schedule.json --parity even --theta 1/4,1/2,3/4 "
           "--out sweep.csv");
        sh("limits --schedule schedule.json --csv lengths.csv --out limits.json");
        sh("limits --schedule schedule.json --csv sweep.csv --out limits_sweep.json");
        sh("render --mode tessellation --depth 3 --overlay-cf 4,4,4,4 --horoballs --out "
           "farey.svg");
        sh("render --mode simplex --limits limits_sweep.json --out simplex.svg");
    }
    for (const std::string& f : artifacts) {
        std::string a = read_file((base / "run0" / f).string());
        std::string b = read_file((base / "run1" / f).string());
        require(!a.empty(), f + " is empty");
        require(a == b, f + " differs between runs");
    }
    fs::remove_all(base);
    return std::to_string(artifacts.size()) + " artifacts byte-identical across two runs";
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::printf("fareylab acceptance suite\n");

    run(1, "convergent correctness vs continuant enumeration", c1_convergents);
    run(2, "intersection numbers vs flat-torus crossing oracle", c2_intersection_oracle);
    run(3, "twist recursion with parity-alternating signs", c3_twist_recursion);
    run(4, "Farey geodesicity under the restricted BFS oracle", c4_geodesic);

    Pipeline pl;
    ModelParams defaults;
    run(5, "pivot separation on both sides", [&] { return c5_pivots(pl); });
    run(6, "growth invariants of the generated schedule", [&] { return c6_growth(pl); });
    run(7, "sandwich inequality with certified kappa", [&] { return c7_sandwich(pl); });
    run(8, "intersection/coefficient decay", [&] { return c8_decay(pl); });
    run(9, "mid-time twist-dominance ratios", [&] { return c9_ratios(pl, defaults, true); });
    run(10, "endpoint convergence, both parities",
        [&] { return c10_endpoints(pl, defaults, true); });
    run(11, "interior sweep separation", [&] { return c11_sweep(pl, defaults); });
    run(12, "alpha-term share decay", [&] { return c12_alpha_share(pl); });
    run(13, "robustness to model-parameter changes", [&] { return c13_robustness(pl); });
    run(14, "byte-identical artifacts across reruns", [&] { return c14_determinism(cli); });

    size_t passed = 0;
    for (const Outcome& o : g_results) passed += o.pass ? 1 : 0;
    std::printf("%zu/%zu criteria passed\n", passed, g_results.size());
    return passed == g_results.size() ? 0 : 1;
}
