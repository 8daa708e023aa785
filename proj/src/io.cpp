#include "fareylab/io.hpp"

#include <fstream>
#include <sstream>

namespace fareylab {

namespace {

Json rat_list(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& r : v) a.push_back(rat_str(r));
    return a;
}

Json int_list(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& n : v) a.push_back(n.get_str());
    return a;
}

std::vector<Int> parse_int_list(const Json& a, const char* what) {
    if (!a.is_array()) throw std::invalid_argument(std::string(what) + ": expected array");
    std::vector<Int> out;
    for (const auto& e : a) out.emplace_back(e.get<std::string>());
    return out;
}

std::vector<Rat> parse_rat_list(const Json& a, const char* what) {
    if (!a.is_array()) throw std::invalid_argument(std::string(what) + ": expected array");
    std::vector<Rat> out;
    for (const auto& e : a) out.push_back(parse_rat(e.get<std::string>()));
    return out;
}

}  // namespace

Json schedule_to_json(const GrowthSchedule& s) {
    Json j;
    j["D"] = rat_str(s.params.D);
    j["kmax"] = s.params.kmax;
    Json floors = Json::array();
    for (size_t k = 0; k <= s.params.kmax; ++k)
        floors.push_back(s.params.floor_at(k).get_str());
    j["floors"] = floors;
    if (s.params.eta.kind == EtaParams::Kind::power) {
        j["eta"] = Json{{"kind", "power"},
                        {"scale", rat_str(s.params.eta.scale)},
                        {"exponent", s.params.eta.exponent}};
    } else {
        j["eta"] = Json{{"kind", "custom"}, {"values", rat_list(s.params.eta.custom)}};
    }
    j["f1"] = Json{{"kind", "exp_decay"},
                   {"params", Json{{"c", rat_str(s.params.f1.c)},
                                   {"rate", rat_str(s.params.f1.rate)}}}};
    j["f2"] = Json{{"kind", "affine"},
                   {"params", Json{{"c", rat_str(s.params.f2.c)},
                                   {"slope", rat_str(s.params.f2.slope)}}}};
    j["sides"] = Json{{"even", int_list(s.sides[0].coeffs)},
                      {"odd", int_list(s.sides[1].coeffs)}};
    j["times"] = rat_list(s.times);
    j["midtimes"] = rat_list(s.midtimes);
    j["ell_alpha_bound"] = rat_str(s.params.ell_alpha_bound);
    j["digit_cap"] = s.params.digit_cap;
    return j;
}

GrowthSchedule schedule_from_json(const Json& j) {
    GrowthSchedule s;
    try {
        s.params.D = parse_rat(j.at("D").get<std::string>());
        s.params.kmax = j.at("kmax").get<size_t>();
        s.params.floors = parse_int_list(j.at("floors"), "floors");
        const Json& eta = j.at("eta");
        if (eta.at("kind") == "power") {
            s.params.eta.kind = EtaParams::Kind::power;
            s.params.eta.scale = parse_rat(eta.at("scale").get<std::string>());
            s.params.eta.exponent = eta.at("exponent").get<unsigned>();
        } else if (eta.at("kind") == "custom") {
            s.params.eta.kind = EtaParams::Kind::custom;
            s.params.eta.custom = parse_rat_list(eta.at("values"), "eta values");
        } else {
            throw std::invalid_argument("unknown eta kind");
        }
        if (j.at("f1").at("kind") != "exp_decay")
            throw std::invalid_argument("unknown f1 kind");
        s.params.f1.c = parse_rat(j.at("f1").at("params").at("c").get<std::string>());
        s.params.f1.rate = parse_rat(j.at("f1").at("params").at("rate").get<std::string>());
        if (j.at("f2").at("kind") != "affine")
            throw std::invalid_argument("unknown f2 kind");
        s.params.f2.c = parse_rat(j.at("f2").at("params").at("c").get<std::string>());
        s.params.f2.slope = parse_rat(j.at("f2").at("params").at("slope").get<std::string>());
        if (j.contains("ell_alpha_bound"))
            s.params.ell_alpha_bound = parse_rat(j.at("ell_alpha_bound").get<std::string>());
        if (j.contains("digit_cap")) s.params.digit_cap = j.at("digit_cap").get<size_t>();

        std::vector<Int> even = parse_int_list(j.at("sides").at("even"), "sides.even");
        std::vector<Int> odd = parse_int_list(j.at("sides").at("odd"), "sides.odd");
        s.sides[0] = CFSide::unchecked(even, 0);
        s.sides[1] = CFSide::unchecked(odd, 1);
        for (size_t k = 0; k <= s.params.kmax; ++k) {
            auto& side = (k % 2 == 0) ? even : odd;
            if (k / 2 >= side.size())
                throw std::invalid_argument("sides shorter than kmax");
            s.e.push_back(side[k / 2]);
        }
        s.times = parse_rat_list(j.at("times"), "times");
        s.midtimes = parse_rat_list(j.at("midtimes"), "midtimes");
        if (s.times.size() != s.params.kmax + 3 || s.midtimes.size() != s.params.kmax + 2)
            throw std::invalid_argument("times/midtimes length mismatch");
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("schedule json: ") + e.what());
    }
    return s;
}

Json model_params_to_json(const ModelParams& p) {
    return Json{{"ell_active", rat_str(p.ell_active)},
                {"c_O", rat_str(p.c_O)},
                {"twist_offset", p.twist_offset.get_str()},
                {"interp", p.interp == TwistInterp::mixture ? "mixture" : "geometric"}};
}

ModelParams model_params_from_json(const Json& j) {
    ModelParams p;
    try {
        if (j.contains("ell_active")) p.ell_active = parse_rat(j.at("ell_active").get<std::string>());
        if (j.contains("c_O")) p.c_O = parse_rat(j.at("c_O").get<std::string>());
        if (j.contains("twist_offset")) p.twist_offset = Int(j.at("twist_offset").get<std::string>());
        if (j.contains("interp")) {
            std::string kind = j.at("interp").get<std::string>();
            if (kind == "mixture")
                p.interp = TwistInterp::mixture;
            else if (kind == "geometric")
                p.interp = TwistInterp::geometric;
            else
                throw std::invalid_argument("unknown twist interpolation '" + kind + "'");
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("model params json: ") + e.what());
    }
    return p;
}

namespace {

Json arcs_to_json(const std::vector<ArcClass>& arcs) {
    Json a = Json::array();
    for (const ArcClass& arc : arcs)
        a.push_back(Json::array({arc.a.get_str(), arc.b.get_str()}));
    return a;
}

std::vector<ArcClass> arcs_from_json(const Json& a) {
    std::vector<ArcClass> out;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("arc entry must be [a, b]");
        out.emplace_back(Int(e[0].get<std::string>()), Int(e[1].get<std::string>()));
    }
    return out;
}

}  // namespace

Json family_to_json(const std::vector<TestCurve>& family) {
    Json a = Json::array();
    for (const TestCurve& d : family)
        a.push_back(Json{{"id", d.id},
                         {"arcs0", arcs_to_json(d.arcs0)},
                         {"arcs1", arcs_to_json(d.arcs1)}});
    return a;
}

std::vector<TestCurve> family_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("family: expected a JSON array");
    std::vector<TestCurve> out;
    try {
        for (const auto& e : j)
            out.emplace_back(e.at("id").get<std::string>(), arcs_from_json(e.at("arcs0")),
                             arcs_from_json(e.at("arcs1")));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("family json: ") + e.what());
    }
    if (out.empty()) throw std::invalid_argument("family: no curves");
    return out;
}

std::string lengths_csv(const std::vector<RaySample>& samples) {
    std::ostringstream os;
    os << "k,s,delta_id,length,x,y\n";
    for (const RaySample& sm : samples)
        for (const auto& [id, len] : sm.lengths)
            os << sm.k << "," << rat_str(sm.s) << "," << id << "," << rat_str(len) << ","
               << rat_str(sm.x) << "," << rat_str(sm.y) << "\n";
    return os.str();
}

std::vector<CsvRow> parse_lengths_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    std::vector<CsvRow> rows;
    auto fail = [&lineno](const std::string& why) {
        throw std::invalid_argument("lengths.csv line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "k,s,delta_id,length,x,y") fail("bad header");
            continue;
        }
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 6) fail("expected 6 fields");
        CsvRow row;
        try {
            row.k = std::stoul(fields[0]);
            row.s = parse_rat(fields[1]);
            row.delta_id = fields[2];
            row.length = parse_rat(fields[3]);
            row.x = parse_rat(fields[4]);
            row.y = parse_rat(fields[5]);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        rows.push_back(std::move(row));
    }
    if (lineno == 0) throw std::invalid_argument("lengths.csv line 1: empty file");
    return rows;
}

std::vector<RaySample> samples_from_rows(const std::vector<CsvRow>& rows) {
    std::vector<RaySample> out;
    for (const CsvRow& row : rows) {
        if (out.empty() || out.back().k != row.k || out.back().s != row.s) {
            RaySample sm;
            sm.k = row.k;
            sm.s = row.s;
            sm.x = row.x;
            sm.y = row.y;
            out.push_back(std::move(sm));
        }
        out.back().lengths.emplace_back(row.delta_id, row.length);
    }
    return out;
}

Json interval_to_json(const RatInterval& iv) {
    return Json::array({rat_str(iv.lo), rat_str(iv.hi)});
}

namespace {

Json point_to_json(const ProjectivePoint& p) { return rat_list(p.coords); }

Json endpoint_rows_json(const std::vector<EndpointRow>& rows) {
    Json arr = Json::array();
    for (const EndpointRow& r : rows) {
        arr.push_back(Json{{"k", r.k},
                           {"s", rat_str(r.s)},
                           {"point", point_to_json(r.point)},
                           {"dist", interval_to_json(r.dist_to_endpoint)},
                           {"ratios", rat_list(r.twist_ratios)},
                           {"alpha_share_max", rat_str(r.alpha_share_max)}});
    }
    return arr;
}

}  // namespace

Json limits_to_json(const GrowthSchedule& schedule, const std::vector<TestCurve>& family,
                    const std::vector<EndpointRow>& even_rows,
                    const std::vector<EndpointRow>& odd_rows,
                    const std::vector<SweepReport>& sweeps, const LimitVerdicts& verdicts) {
    Json j;
    j["kmax"] = schedule.params.kmax;
    Json ids = Json::array();
    for (const TestCurve& d : family) ids.push_back(d.id);
    j["family"] = ids;
    if (verdicts.has_even) j["endpoint_even"] = endpoint_rows_json(even_rows);
    if (verdicts.has_odd) j["endpoint_odd"] = endpoint_rows_json(odd_rows);
    if (verdicts.has_sweep) {
        Json sw = Json::array();
        for (const SweepReport& rep : sweeps) {
            Json rows = Json::array();
            for (const SweepRow& r : rep.rows) {
                rows.push_back(Json{{"k", r.k},
                                    {"s", rat_str(r.s)},
                                    {"point", point_to_json(r.point)},
                                    {"dist_segment", interval_to_json(r.dist_to_segment)},
                                    {"best_t", rat_str(r.best_t)},
                                    {"alpha_share_max", rat_str(r.alpha_share_max)}});
            }
            sw.push_back(Json{{"theta", rat_str(rep.theta)}, {"rows", rows}});
        }
        j["sweep"] = sw;
    }
    Json v;
    if (verdicts.has_even) v["converges-to-endpoint-0"] = verdicts.converges_to_endpoint_0;
    if (verdicts.has_odd) v["converges-to-endpoint-1"] = verdicts.converges_to_endpoint_1;
    if (verdicts.has_sweep) {
        v["on-segment"] = verdicts.on_segment;
        v["interior-points-distinct"] = verdicts.interior_points_distinct;
    }
    j["verdicts"] = v;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot write file: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const Json& resolved_config) {
    Json m;
    m["tool"] = "fareylab";
    m["command"] = command;
    m["config"] = resolved_config;
    write_file(out_path + ".manifest.json", json_str(m));
}

std::string json_str(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fareylab
