#include "doctest.h"
#include "vf/localcurve.hpp"

using namespace vf;

namespace {
const Convention kConv = calibrated_convention();
}

TEST_CASE("second vertex parameters") {
    ParamSample s = sample_random(1, 12);
    ParamSample r = second_vertex_sample(s, -1, -1, kConv);
    CHECK(r.t3 == -s.t3);
    CHECK(r.t1 == s.t1 + kConv.substitution_sign * -1 * s.t3);
    ParamSample bad{1, 2, 1, 4};  // s1 = s2 after substitution
    CHECK_THROWS_WITH(second_vertex_sample(bad, -1, 0, kConv), "non-generic substituted sample");
}

TEST_CASE("substitution consistency") {
    ParamSample s = sample_random(2, 14);
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}}) {
        ParamSample r = second_vertex_sample(s, -1, 0, kConv);
        CHECK(pt_fixed_sum_substituted(lam, -1, 0, 2, s, kConv).scalar() == pt_fixed_sum(lam, 2, {}, r, kConv).scalar());
    }
}

TEST_CASE("degree zero local curve") {
    ParamSample s = sample_random(3, 14);
    QSeries z = dt0_localcurve(-1, -1, 2, s, kConv).scalar();
    ParamSample r = second_vertex_sample(s, -1, -1, kConv);
    LeggedPlanePartition box{{}, {{{0, 0}, 1}}};
    CHECK(z[0] == 1);
    CHECK(z[1] == dt_weight(box, s, kConv) + dt_weight(box, r, kConv));
}

TEST_CASE("tangent edge gluing") {
    ParamSample s = sample_random(4, 14);
    GlueRequest req;
    req.qorder = 2;
    QSeries g = glue(req, s, kConv).scalar();
    ParamSample r = second_vertex_sample(s, 0, 0, kConv);
    QSeries a = pt_fixed_sum({1}, 2, {}, s, kConv).scalar(), b = pt_fixed_sum({1}, 2, {}, r, kConv).scalar();
    QSeries expect = a * b;
    expect *= edge_factor({1}, 0, 0, s);
    CHECK(g == expect);
}

TEST_CASE("interpolation polynomials") {
    ParamSample s = sample_random(5, 14);
    InterpPoly j1 = interp_poly({1}, s, kConv);
    CHECK(evaluate(j1, {1}, s) == euler_hilb({1}, s, kConv));
    CHECK(j1.expanded(1).terms.size() == 1);
    for (const auto& lam : enum_partitions(3)) {
        InterpPoly j = interp_poly(lam, s, kConv);
        for (const auto& mu : enum_partitions(3))
            CHECK(evaluate(j, mu, s) == (mu == lam ? euler_hilb(mu, s, kConv) : Rational(0)));
    }
    InterpPoly j2 = interp_poly({2}, s, kConv);
    CHECK(evaluate(j2, {1, 1}, s) == 0);
    CHECK(monomial_symmetric_value({2, 1}, {Rational(1), Rational(2)}) == 1 * 1 * 2 + 2 * 2 * 1);
}

TEST_CASE("residue assembly matches gluing") {
    for (std::uint64_t seed : {1, 2}) {
        ParamSample s = sample_random(seed, 14);
        GlueRequest a;
        a.qorder = 1;
        CHECK(ptint_residue(a, s, kConv) == glue(a, s, kConv));
        GlueRequest b;
        b.d1 = b.d2 = -1;
        b.qorder = 2;
        b.desc = {{DescMode::ch, 0, "u", 2}};
        CHECK(ptint_residue(b, s, kConv) == glue(b, s, kConv));
    }
}

TEST_CASE("DT/PT factorization on the conifold") {
    std::vector<QSeries> runs;
    for (std::uint64_t seed : {1, 2, 3}) {
        ParamSample s = sample_random(seed, 20);
        SimpleCheck c = simple_check(-1, -1, 3, s, kConv);
        CHECK(c.pass);
        REQUIRE(c.shift.has_value());
        CHECK(*c.shift == 0);
        for (const auto& x : c.residual.coeffs) CHECK(x == 0);
        GlueRequest req;
        req.d1 = req.d2 = -1;
        req.qorder = 4;
        runs.push_back(glue(req, s, kConv).scalar());
    }
    CHECK(parameter_independent(runs));
    // 1/(1+q)^2
    for (int k = 0; k <= 4; ++k) CHECK(runs[0][k] == (k % 2 ? -1 : 1) * (k + 1));
}
