#include "doctest.h"
#include "vf/characters.hpp"

using namespace vf;

namespace {

const Convention kConv = calibrated_convention();

LaurentPoly m(int a, int b, int c, Rational k = 1) { return LaurentPoly::mono({a, b, c}, k); }

RppConfig transpose(const RppConfig& r) {
    RppConfig t;
    t.shape = conjugate(r.shape);
    for (const auto& c : cells(t.shape)) t.k.push_back(r.at({c.j, c.i}));
    return t;
}

}  // namespace

TEST_CASE("leg and tangent characters") {
    CHECK(leg_char({}).is_zero());
    CHECK(leg_char({1}) == LaurentPoly(1));
    CHECK(leg_char({2, 1}) == LaurentPoly(1) + m(1, 0, 0) + m(0, 1, 0));
    CHECK(fe_char({}).is_zero());
    CHECK(fe_char({1}) == -m(-1, 0, 0) - m(0, -1, 0));
    for (const auto& lam : enum_partitions(4)) CHECK(fe_char(conjugate(lam)) == fe_char(lam).swap12());
}

TEST_CASE("Euler classes") {
    ParamSample s = sample_random(3, 12);
    CHECK(euler_hilb({1}, s, kConv) == s.t1 * s.t2);
    ParamSample w{s.t2, s.t1, s.t3, 0};
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : enum_partitions(n)) {
            CHECK(euler_hilb(lam, s, kConv) == euler_hilb(conjugate(lam), w, kConv));
            Rational r = euler_hilb(lam, s, kConv) / euler_armleg(lam, s);
            CHECK((r == 1 || r == -1));
        }
}

TEST_CASE("PT vertex character") {
    ParamSample s = sample_random(4, 12);
    RppConfig c0{{1}, {0}};
    LaurentPoly v = vertex_char_pt(c0, kConv);
    CHECK(pt_weight(c0, s, kConv) != 0);
    CHECK(exp_pleth(-v, s) == pt_weight(c0, s, kConv));
    for (int n = 0; n <= 3; ++n)
        for (const auto& lam : enum_partitions(n))
            for (const auto& r : enum_rpp(lam, 3)) CHECK(vertex_char_pt(transpose(r), kConv) == vertex_char_pt(r, kConv).swap12());
}

TEST_CASE("DT vertex character") {
    ParamSample s = sample_random(5, 12);
    LeggedPlanePartition empty{};
    CHECK(vertex_char_dt(empty, kConv).is_zero());
    CHECK(dt_weight(empty, s, kConv) == 1);
    LeggedPlanePartition box{{}, {{{0, 0}, 1}}};
    LaurentPoly p3 = (LaurentPoly(1) - m(1, 0, 0)) * (LaurentPoly(1) - m(0, 1, 0)) * (LaurentPoly(1) - m(0, 0, 1));
    CHECK(vertex_char_dt(box, kConv) == LaurentPoly(1) - m(-1, -1, -1) + p3 * m(-1, -1, -1));
    LeggedPlanePartition leg{{1}, {}};
    CHECK(dt_weight(leg, s, kConv) != 0);
}

TEST_CASE("edge factor") {
    ParamSample s = sample_random(6, 12);
    CHECK(edge_factor({}, 0, 0, s) == 1);
    CHECK(reduce_char(edge_char({1}, 0, 0)) == m(-1, 0, 0) + m(0, -1, 0));
    CHECK(edge_factor({1}, 0, 0, s) == 1 / (s.t1 * s.t2));
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : enum_partitions(n)) {
            Rational r = edge_factor(lam, 0, 0, s) * euler_hilb(lam, s, kConv);
            CHECK((r == 1 || r == -1));
        }
}

TEST_CASE("descendent characters") {
    ParamSample s = sample_random(7, 12);
    LeggedPlanePartition empty{};
    auto ch = descendent_char(empty, DescMode::ch, 3, s);
    for (const auto& c : ch) CHECK(c == 0);
    auto hat = descendent_char(empty, DescMode::ch_hat, 3, s);
    CHECK(hat[0] == 1);
    for (int k = 1; k <= 3; ++k) CHECK(hat[k] == 0);
    LeggedPlanePartition box{{}, {{{0, 0}, 1}}};
    auto b = descendent_char(box, DescMode::ch, 4, s);
    CHECK(b[0] == 0);
    CHECK(b[3] == -s.t1 * s.t2 * s.t3);
    // (1 - e^{t1 z})(1 - e^{t2 z})
    auto pt = descendent_char(RppConfig{{1}, {0}}, DescMode::ch, 3, s, kConv);
    auto e1 = exp_coeffs(s.t1, 3), e2 = exp_coeffs(s.t2, 3);
    for (auto& x : e1) x = -x;
    for (auto& x : e2) x = -x;
    e1[0] += 1;
    e2[0] += 1;
    CHECK(pt == series_mul(e1, e2, 3));
}
