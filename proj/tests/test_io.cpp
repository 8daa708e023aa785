#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fareylab/io.hpp"
#include "test_util.hpp"

using namespace fareylab;

TEST_CASE("schedule json round-trips exactly") {
    ScheduleParams p;
    p.kmax = 7;
    GrowthSchedule s = generate_schedule(p);
    Json j = schedule_to_json(s);
    GrowthSchedule t = schedule_from_json(j);
    CHECK(schedule_to_json(t) == j);
    CHECK(t.e == s.e);
    CHECK(t.times == s.times);
    CHECK(t.midtimes == s.midtimes);
    // serialization is byte-stable
    CHECK(json_str(j) == json_str(schedule_to_json(generate_schedule(p))));
}

TEST_CASE("schedule loader tolerates invariant-breaking data") {
    ScheduleParams p;
    p.kmax = 4;
    Json j = schedule_to_json(generate_schedule(p));
    j["sides"]["even"][0] = "3";  // violates e >= 4; cmd_check's job to flag
    GrowthSchedule s = schedule_from_json(j);
    bool floor_fails = false;
    for (const auto& c : check_schedule(s))
        if (c.name == "coefficient-floor" && !c.pass) floor_fails = true;
    CHECK(floor_fails);
}

TEST_CASE("schedule loader rejects malformed files") {
    CHECK_THROWS_AS(schedule_from_json(Json{{"D", "1"}}), std::invalid_argument);
    ScheduleParams p;
    p.kmax = 4;
    Json j = schedule_to_json(generate_schedule(p));
    j["times"] = Json::array();
    CHECK_THROWS_AS(schedule_from_json(j), std::invalid_argument);
}

TEST_CASE("model params round trip") {
    ModelParams p;
    p.ell_active = Rat(1, 2);
    p.c_O = Rat(3, 7);
    p.twist_offset = -10;
    p.interp = TwistInterp::geometric;
    ModelParams q = model_params_from_json(model_params_to_json(p));
    CHECK(q.ell_active == p.ell_active);
    CHECK(q.c_O == p.c_O);
    CHECK(q.twist_offset == p.twist_offset);
    CHECK(q.interp == p.interp);
    CHECK_THROWS_AS(model_params_from_json(Json{{"interp", "cubic"}}),
                    std::invalid_argument);
}

TEST_CASE("family round trip") {
    auto fam = default_family();
    auto back = family_from_json(family_to_json(fam));
    REQUIRE(back.size() == fam.size());
    for (size_t i = 0; i < fam.size(); ++i) {
        CHECK(back[i].id == fam[i].id);
        CHECK(back[i].arcs0 == fam[i].arcs0);
        CHECK(back[i].arcs1 == fam[i].arcs1);
    }
    CHECK_THROWS_AS(family_from_json(Json::array()), std::invalid_argument);
    // unequal arc multisets are rejected at parse time
    Json bad = Json::array();
    bad.push_back(Json{{"id", "x"},
                       {"arcs0", Json::array({Json::array({"1", "0"})})},
                       {"arcs1", Json::array()}});
    CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);
}

TEST_CASE("lengths csv round trip") {
    GrowthSchedule s = testutil::fours_schedule(4);
    ModelParams p;
    auto fam = default_family();
    std::vector<RaySample> samples;
    for (size_t k = 2; k + 1 <= s.kmax(); ++k)
        samples.push_back(sample_ray(fam, s.nominal_midtime(k), s, p));
    std::string csv = lengths_csv(samples);
    auto rows = parse_lengths_csv(csv);
    CHECK(rows.size() == samples.size() * fam.size());
    auto back = samples_from_rows(rows);
    REQUIRE(back.size() == samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        CHECK(back[i].k == samples[i].k);
        CHECK(back[i].s == samples[i].s);
        CHECK(back[i].x == samples[i].x);
        CHECK(back[i].y == samples[i].y);
        CHECK(back[i].lengths == samples[i].lengths);
    }
    CHECK(lengths_csv(back) == csv);
}

TEST_CASE("csv errors carry line numbers") {
    try {
        parse_lengths_csv("k,s,delta_id,length,x,y\n2,7/4,d,1/2\n");
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    try {
        parse_lengths_csv("wrong,header\n");
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_lengths_csv("k,s,delta_id,length,x,y\n2,7/4,d,notanumber,1,1\n"),
                    std::invalid_argument);
}

TEST_CASE("rational literal parsing") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-3/4") == Rat(-3, 4));
    CHECK(parse_rat("6/8") == Rat(3, 4));  // canonicalized on input
    CHECK(parse_rat("5") == Rat(5));
    CHECK(rat_str(Rat(3, 4)) == "3/4");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}
