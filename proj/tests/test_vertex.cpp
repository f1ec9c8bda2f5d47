#include "doctest.h"
#include "vf/vertex.hpp"

using namespace vf;

namespace {
const Convention kConv = calibrated_convention();
}

TEST_CASE("Chern monomial values") {
    ParamSample s = sample_random(1, 10);
    CHECK(chern_monomial_value({}, {2}, s) == 1);
    CHECK(chern_monomial_value({1}, {2}, s) == s.t2);
    CHECK(chern_monomial_value({2}, {1, 1}, s) == 0);
    CHECK(chern_monomial_value({1, 1}, {1, 1}, s) == s.t1 * s.t1);
}

TEST_CASE("PT bare vertex") {
    ParamSample s = sample_random(2, 14);
    VertexSeries v = bare_pt_fixed({1}, 2, {}, s, kConv);
    CHECK(v.shift == 0);
    CHECK(v.scalar()[0] == pt_weight(RppConfig{{1}, {0}}, s, kConv) / euler_hilb({1}, s, kConv));
    // Chern basis is the c_lambda-weighted combination of the fixed-point series
    const Partition lam{1, 1};
    VertexSeries lin;
    for (const auto& mu : enum_partitions(2)) {
        VertexSeries t = scaled(bare_pt_fixed(mu, 2, {}, s, kConv), chern_monomial_value(lam, mu, s));
        lin = lin.coeffs.empty() ? t : lin + t;
    }
    CHECK(lin.scalar() == bare_pt_chern(lam, 2, {}, s, kConv).scalar());
}

TEST_CASE("DT bare vertex") {
    ParamSample s = sample_random(3, 14);
    QSeries z = bare_dt({}, 4, {}, s, kConv).scalar();
    CHECK(z[0] == 1);
    CHECK(z[1] == dt_weight(LeggedPlanePartition{{}, {{{0, 0}, 1}}}, s, kConv));
    QSeries e = dt0_slice({}, 3, {}, s, kConv).scalar();
    CHECK(e[0] == 1);
    for (int i = 1; i <= 3; ++i) CHECK(e[i] == 0);
    QSeries one = dt0_slice({1}, 1, {}, s, kConv).scalar();
    CHECK(one[1] == z[1]);
    VertexSeries sum = dt0_slice({}, 4, {}, s, kConv);
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enum_partitions(n)) sum = sum + dt0_slice(mu, 4, {}, s, kConv);
    CHECK(sum.scalar() == z);
}

TEST_CASE("specialization polynomiality") {
    ParamSample on = sample_random(4, 14, 1);
    SpecPolyReport r = specialization_poly_check(1, 0, 6, 4, on);
    CHECK(r.pass);
    ParamSample off = sample_random(4, 14);
    CHECK_FALSE(specialization_poly_check(1, 0, 6, 4, off).localization.polynomial);
    SpecPolyReport d = specialization_poly_check(1, 2, 8, 6, sample_random(5, 14, 1));
    CHECK(d.pass);
    REQUIRE(d.per_coefficient.size() == 3);
    CHECK(d.per_coefficient[0].fit_degree <= d.per_coefficient[2].fit_degree);
}

TEST_CASE("polynomial fit protocol") {
    std::vector<Rational> cubic, other;
    for (int k = 0; k <= 8; ++k) {
        cubic.push_back(Rational(k * k * k - 2 * k) / 3);
        other.push_back(Rational(1, k + 1));
    }
    CHECK(fit_and_verify(cubic, 6).polynomial);
    CHECK(fit_and_verify(cubic, 6).fit_degree == 3);
    CHECK_FALSE(fit_and_verify(other, 6).polynomial);
}
