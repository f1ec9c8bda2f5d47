#include "doctest.h"
#include "vf/dtpt0.hpp"

using namespace vf;

namespace {
const Convention kConv = calibrated_convention();
}

TEST_CASE("analytic DT weight") {
    ParamSample s = sample_random(1, 20);
    // a single column of height 2 is a DT configuration
    Tracked w = dt_analytic_weight({1}, {2}, s, kConv);
    CHECK(w.zero_order == 0);
    CHECK(w.v == dt_weight(LeggedPlanePartition{{}, {{{0, 0}, 2}}}, s, kConv));
    // heights increasing away from the corner are not
    CHECK(dt_analytic_weight({2}, {1, 2}, s, kConv).zero_order > 0);
}

TEST_CASE("degree zero report") {
    ParamSample s = sample_random(1, 16);
    Dtpt0Report r = dtpt0_report({1}, {2}, 2, s, kConv);
    CHECK(r.vanishing_pass);
    CHECK(r.gcheck_pass);
    CHECK_FALSE(r.vanishing.empty());
    CHECK_FALSE(r.gcheck.empty());
    // three lower bounds times two orientations
    REQUIRE(r.records.size() == 6);
    int dt_matches = 0;
    for (const auto& rec : r.records) {
        CHECK((rec.bound >= -1 && rec.bound <= 1));
        CHECK((rec.orientation == 1 || rec.orientation == -1));
        CHECK(rec.shift == rec.bound * 1);
        CHECK_FALSE(rec.dt_target.empty());
        dt_matches += rec.dt_match;
    }
    CHECK(dt_matches <= 1);
}

TEST_CASE("g series against descendent characters") {
    ParamSample s = sample_random(2, 16);
    const Rational T = s.t1 * s.t2 * s.t3;
    LeggedPlanePartition col{{}, {{{0, 0}, 2}, {{0, 1}, 1}}};
    auto ch = descendent_char(col, DescMode::ch, 3, s);
    for (auto& c : ch) c /= T;
    CHECK(g_series({2}, {2, 1}, 3, s) == ch);
}
