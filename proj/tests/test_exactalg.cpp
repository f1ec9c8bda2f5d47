#include "doctest.h"
#include "vf/exactalg.hpp"

using namespace vf;

namespace {
const Mono T1{1, 0, 0}, T2{0, 1, 0}, T3{0, 0, 1};
LaurentPoly one_minus(const Mono& m) { return LaurentPoly(1) - LaurentPoly::mono(m); }
}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(Rational(-3) / 6) == "-1/2");
    CHECK(to_string(Rational(4)) == "4/1");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(7, 3), 0) == 1);
    CHECK(pochhammer(Rational(2), 3) == 24);
    CHECK(pochhammer(Rational(5), -2) == Rational(1, 12));
    Tracked z = pochhammer_tracked(Rational(0), 2);  // 0 * 1
    CHECK(z.zero_order == 1);
    CHECK(z.v == 1);
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly a = LaurentPoly::mono(T1) + LaurentPoly(2);
    LaurentPoly b = a - a;
    CHECK(b.is_zero());
    CHECK(b.terms().empty());  // no stored zeros
    LaurentPoly p = (LaurentPoly(1) + LaurentPoly::mono(T1)) * (LaurentPoly(1) - LaurentPoly::mono(T1));
    CHECK(p == LaurentPoly(1) - LaurentPoly::mono({2, 0, 0}));
    CHECK(LaurentPoly::mono({1, -2, 3}).bar() == LaurentPoly::mono({-1, 2, -3}));
    CHECK(LaurentPoly::mono({1, 2, 0}).swap12() == LaurentPoly::mono({2, 1, 0}));
}

TEST_CASE("substitution is a ring map") {
    std::array<Mono, 3> img{Mono{1, 0, 1}, Mono{0, 1, -1}, Mono{0, 0, -1}};
    LaurentPoly a = LaurentPoly::mono(T1) + LaurentPoly::mono({0, -1, 2}, 3);
    LaurentPoly b = LaurentPoly(1) - LaurentPoly::mono({1, 1, 1}, Rational(1, 2));
    CHECK((a * b).subst(img) == a.subst(img) * b.subst(img));
    CHECK((a + b).subst(img) == a.subst(img) + b.subst(img));
}

TEST_CASE("character reduction") {
    LaurentPoly num = LaurentPoly(1) - LaurentPoly::mono({0, 0, 2});
    CHECK(reduce_char({num, {T3}}) == LaurentPoly(1) + LaurentPoly::mono(T3));
    CHECK(reduce_char({one_minus(T1) * one_minus(T3), {T3}}) == one_minus(T1));
    CHECK_THROWS_WITH(reduce_char({LaurentPoly(1), {T3}}), "non-polynomial character");
    CHECK_FALSE(divide_one_minus(LaurentPoly(1), T3).has_value());
}

TEST_CASE("character equality by cross multiplication") {
    EquivariantCharacter a{LaurentPoly(1), {T3}};
    EquivariantCharacter b{LaurentPoly(1) + LaurentPoly::mono(T3), {{0, 0, 2}}};
    CHECK(a.equals(b));
    CHECK_FALSE(a.equals(EquivariantCharacter{LaurentPoly(1)}));
}

TEST_CASE("plethystic exponential") {
    ParamSample s{2, 3, 5, 0};
    CHECK(exp_pleth(LaurentPoly(), s) == 1);
    CHECK(exp_pleth(LaurentPoly::mono(T1) + LaurentPoly::mono(T2), s) == 6);
    CHECK(exp_pleth(-LaurentPoly::mono(T1), s) == Rational(1, 2));
    CHECK_THROWS(exp_pleth(LaurentPoly(1), s));  // zero weight
    Tracked t = exp_pleth_tracked(LaurentPoly(1) + LaurentPoly::mono(T3), s);
    CHECK(t.zero_order == 1);
    CHECK(t.v == 5);
}

TEST_CASE("generic samples") {
    ParamSample a = sample_random(1, 6), b = sample_random(1, 6);
    CHECK(a == b);
    CHECK(is_generic(a, 6));
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j)
            for (int k = -6; k <= 6; ++k)
                if (i || j || k) CHECK(i * a.t1 + j * a.t2 + k * a.t3 != 0);
    CHECK_FALSE(sample_random(2, 6) == a);
    ParamSample c = sample_random(1, 6, 1);
    CHECK(c.t1 + c.t2 - c.t3 == 0);
    CHECK(is_generic_on_line(c, 6, 1));
    CHECK_FALSE(is_generic(ParamSample{1, 2, 3, 0}, 1));
}

TEST_CASE("substituted sample") {
    ParamSample s{2, 3, 5, 0};
    ParamSample r = s.substituted(-1, 2, -1);
    CHECK(r.t1 == 2 + 5);
    CHECK(r.t2 == 3 - 10);
    CHECK(r.t3 == -5);
    CHECK(s.substituted(-1, 2, 1).t1 == 2 - 5);
}

TEST_CASE("truncated series") {
    QSeries a(2), b(2);
    a[0] = 1;
    a[1] = 1;
    b[0] = 1;
    b[1] = -1;
    QSeries p = a * b;  // 1 - q^2
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == -1);
    std::vector<Rational> e = exp_coeffs(Rational(2), 3);
    CHECK(e[3] == Rational(4, 3));
    DescSeries shape({"u", "v"}, {2, 2}, 2);
    DescSeries x = DescSeries::univariate(shape, 0, {1, 1});
    DescSeries y = DescSeries::univariate(shape, 1, {1, 1});
    DescSeries xy = x * x * y;
    CHECK(xy.coeff({2, 0}) == 1);
    CHECK(xy.coeff({1, 1}) == 2);
    CHECK(xy.coeff({2, 1}) == 0);  // beyond the total cap
    CHECK_FALSE(shape.admissible({2, 1}));
}
