#include "doctest.h"
#include "vf/residue.hpp"
#include "vf/vertex.hpp"

using namespace vf;

namespace {
const Convention kConv = calibrated_convention();
using RF = RationalFactor;
}  // namespace

TEST_CASE("coefficient extraction") {
    CHECK(iterated_residue({}, {0, 0, 0}, 3) == 1);
    CHECK(iterated_residue({}, {2}, 1) == 0);
    CHECK(iterated_residue({}, {-1, 1}, 2) == 0);  // z2/z1
    CHECK_THROWS(iterated_residue({}, {0}, 2));
}

TEST_CASE("nested region guard") {
    // dz1 dz2/(z1 z2) * 1/(1 - z2/z1), written as z1/(z1 - z2)
    std::vector<RF> inner_second{{RF::Linear, 0, -1, 0, 1}, {RF::Difference, 0, 1, 0, -1}};
    CHECK(iterated_residue(inner_second, {0, 0}, 2) == 1);
    // same integrand with the ordering reversed: -z_b/(z_a - z_b), z_a outermost
    std::vector<RF> reversed{{RF::Linear, 1, -1, 0, 1}, {RF::Difference, 0, 1, 0, -1}};
    CHECK(-iterated_residue(reversed, {0, 0}, 2) == 0);
}

TEST_CASE("omega kernel at infinity") {
    ParamSample s = sample_random(2, 10);
    CHECK(omega_kernel(1, s.t1, s.t2).empty());
    // constant term of omega(z1 - z2) is 1
    CHECK(iterated_residue(omega_kernel(2, s.t1, s.t2), {0, 0}, 2) == 1);
    // z1/(z1 - z2 - a) has constant term 1
    std::vector<RF> f{{RF::Difference, 0, 1, s.t1, -1}};
    CHECK(iterated_residue(f, {1, 0}, 2) == 1);
}

TEST_CASE("shared expansion agrees with single residues") {
    ParamSample s = sample_random(3, 10);
    auto f = omega_kernel(3, s.t1, s.t2);
    std::vector<std::vector<int>> alphas{{0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {1, 1, 1}, {0, 2, 1}, {3, 0, 0}};
    auto all = iterated_residues(f, alphas, 3);
    for (const auto& a : alphas) CHECK(all.at(a) == iterated_residue(f, a, 3));
}

TEST_CASE("EGL identity at small n") {
    ParamSample s = sample_random(4, 14);
    DescSeries a = egl_localization(1, {1}, -1, s, kConv);
    CHECK(a.coeff({0}) == 1 / (s.t1 * s.t2));
    CHECK(a.coeff({1}) == 0);
    CHECK(egl_residue(1, {1}, -1, s, kConv) == a);
    for (std::uint64_t seed : {1, 2, 3}) {
        ParamSample t = sample_random(seed, 14);
        CHECK(egl_residue(2, {2}, -1, t, kConv) == egl_localization(2, {2}, -1, t, kConv));
    }
    Convention raw = kConv;
    raw.hilb_norm = 0;  // printed normalization
    CHECK(egl_residue(1, {1}, -1, s, raw).coeff({0}) == 1);
}

TEST_CASE("residue vertex kernel") {
    // k = 0: all Pochhammer blocks are empty, only the measure dz/z remains
    ResTerm t = mainpt_kernel({0});
    CHECK(t.coef == 1);
    REQUIRE(t.facs.size() == 1);
    CHECK(t.facs.begin()->first == Form{0, -1, {0, 0, 0}});
    CHECK(t.facs.begin()->second == -1);
}

TEST_CASE("residue vertex against localization") {
    ParamSample s = sample_random(5, 16);
    SymPoly one;
    one.terms[{0}] = 1;  // J_(1)/e_(1)
    auto res = pt_residue_vertex(1, one, 2, {}, s, kConv);
    CHECK(res == bare_pt_fixed({1}, 2, {}, s, kConv).coeffs);
    std::vector<DescendentSpec> d{{DescMode::ch, 0, "u", 3}};
    for (const Partition& lam : {Partition{2}, Partition{1, 1}})
        CHECK(pt_residue_vertex(2, chern_monomial_poly(lam, 2), 2, d, s, kConv) ==
              bare_pt_chern(lam, 2, d, s, kConv).coeffs);
}

TEST_CASE("measure ratio") {
    ParamSample s = sample_random(6, 20);
    CHECK(measure_ratio_closed({1}, {0}, s) == Tracked{1, 0});
    CHECK(measure_ratio_closed({1}, {1}, s) == measure_ratio_exp({1}, {1}, s, kConv));
    ParamSample w{s.t2, s.t1, s.t3, 0};
    // (2) has cells (0,0),(0,1); its transpose (1,1) has them as (0,0),(1,0)
    CHECK(measure_ratio_closed({2}, {1, 2}, s) == measure_ratio_closed({1, 1}, {1, 2}, w));
    CHECK(measure_ratio_closed({2, 1}, {0, 1, 3}, s) == measure_ratio_exp({2, 1}, {0, 1, 3}, s, kConv));
}

TEST_CASE("difference formula") {
    // the assembled difference matches the formula with the cross term sign reversed
    for (int k = 0; k <= 3; ++k) {
        auto diff = measure_ratio_difference({1}, {k}, kConv);
        CHECK(diff.equals(measure_ratio_difference_formula({1}, {k}, -1)));
    }
}
