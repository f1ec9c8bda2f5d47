#include "vf/characters.hpp"

#include <sstream>

namespace vf {

namespace {

const Mono T3{0, 0, 1};

LaurentPoly one_minus(const Mono& m) { return LaurentPoly(1) - LaurentPoly::mono(m); }

LaurentPoly p3() { return one_minus({1, 0, 0}) * one_minus({0, 1, 0}) * one_minus(T3); }

EquivariantCharacter ch(const LaurentPoly& p) { return EquivariantCharacter(p); }

std::vector<Rational> one_minus_exp(const Rational& w, int n) {
    auto e = exp_coeffs(w, n);
    for (auto& x : e) x = -x;
    e[0] += 1;
    return e;
}

void add_into(std::vector<Rational>& acc, const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < acc.size() && i < x.size(); ++i) acc[i] += x[i];
}

}  // namespace

std::string Convention::str() const {
    std::ostringstream os;
    os << "pt_column_sign=" << pt_column_sign
       << ",dt_dual_denominator=" << (dt_dual_denominator == DualDen::T123 ? "t1t2t3" : "t1t2")
       << ",euler_sign=" << euler_sign << ",hilb_norm=" << hilb_norm
       << ",substitution_sign=" << substitution_sign;
    return os.str();
}

Convention calibrated_convention() { return Convention{}; }

std::vector<Convention> convention_candidates() {
    // substitution_sign is held at its default; calibrate() reports both values
    const int eps = calibrated_convention().substitution_sign;
    std::vector<Convention> out;
    for (int sigma : {-1, 1})
        for (DualDen d : {DualDen::T12, DualDen::T123})
            for (int e : {-1, 1})
                for (int g : {-1, 0, 1}) out.push_back(Convention{sigma, d, e, g, eps});
    return out;
}

LaurentPoly leg_char(const Partition& lambda) {
    LaurentPoly q;
    for (const auto& c : cells(lambda)) q.add_term({c.i, c.j, 0}, 1);
    return q;
}

LaurentPoly fe_char(const Partition& lambda) { return fe_char_shifted(lambda, 0, 0); }

LaurentPoly fe_char_shifted(const Partition& lambda, int s1, int s2) {
    LaurentPoly q = leg_char(lambda).subst({Mono{1, 0, s1}, Mono{0, 1, s2}, T3});
    LaurentPoly qb = q.bar();
    // 1/(t1 t2) in the substituted variables
    Mono inv{-1, -1, -s1 - s2};
    LaurentPoly p = LaurentPoly(1) - LaurentPoly::mono({1, 0, s1});
    p = p * (LaurentPoly(1) - LaurentPoly::mono({0, 1, s2}));
    return -q - qb.shifted(inv) + (q * qb * p).shifted(inv);
}

Rational euler_hilb(const Partition& lambda, const ParamSample& s, const Convention& conv) {
    return exp_pleth(fe_char(lambda) * Rational(conv.euler_sign), s);
}

Rational euler_armleg(const Partition& lambda, const ParamSample& s) {
    Partition conj = conjugate(lambda);
    Rational r = 1;
    for (const auto& c : cells(lambda)) {
        int a = lambda[c.i] - c.j - 1;
        int l = conj[c.j] - c.i - 1;
        r *= (s.t1 * (l + 1) - s.t2 * a) * (s.t2 * (a + 1) - s.t1 * l);
    }
    return r;
}

EquivariantCharacter pt_vertex_from_columns(const Partition& shape, const LaurentPoly& columns) {
    const Mono Tinv{-1, -1, -1};
    EquivariantCharacter F(columns, {T3});
    EquivariantCharacter Fb = F.bar();
    EquivariantCharacter Fe(fe_char(shape), {T3});
    EquivariantCharacter FFb = F * Fb;
    FFb.num = (FFb.num * p3()).shifted(Tinv);
    Fb.num = Fb.num.shifted(Tinv);
    return F - Fb + FFb + Fe;
}

EquivariantCharacter dt_vertex_from_q(const EquivariantCharacter& q, const Partition& leg, DualDen d) {
    const Mono Tinv{-1, -1, -1};
    const Mono D = d == DualDen::T123 ? Tinv : Mono{-1, -1, 0};
    EquivariantCharacter qb = q.bar();
    EquivariantCharacter qqb = q * qb;
    qqb.num = (qqb.num * p3()).shifted(Tinv);
    qb.num = qb.num.shifted(D);
    EquivariantCharacter v = q - qb + qqb;
    if (!leg.empty()) v = v + EquivariantCharacter(fe_char(leg), {T3});
    return v;
}

LaurentPoly pt_columns(const RppConfig& cfg, int sigma) {
    LaurentPoly x;
    auto cs = cells(cfg.shape);
    for (std::size_t n = 0; n < cs.size(); ++n) x.add_term({cs[n].i, cs[n].j, sigma * cfg.k[n]}, 1);
    return x;
}

LaurentPoly vertex_char_pt(const RppConfig& cfg, const Convention& conv) {
    return reduce_char(pt_vertex_from_columns(cfg.shape, pt_columns(cfg, conv.pt_column_sign)));
}

LaurentPoly dt_finite_boxes(const LeggedPlanePartition& pp) {
    LaurentPoly q;
    for (const auto& [c, h] : pp.heights)
        for (int k = 0; k < h; ++k) q.add_term({c.i, c.j, k}, 1);
    return q;
}

LaurentPoly vertex_char_dt(const LeggedPlanePartition& pp, const Convention& conv) {
    EquivariantCharacter q = ch(dt_finite_boxes(pp)) + EquivariantCharacter(leg_char(pp.leg), {T3});
    return reduce_char(dt_vertex_from_q(q, pp.leg, conv.dt_dual_denominator));
}

Rational pt_weight(const RppConfig& cfg, const ParamSample& s, const Convention& conv) {
    return exp_pleth(-vertex_char_pt(cfg, conv), s);
}

Rational dt_weight(const LeggedPlanePartition& pp, const ParamSample& s, const Convention& conv) {
    return exp_pleth(-vertex_char_dt(pp, conv), s);
}

EquivariantCharacter edge_char(const Partition& lambda, int d1, int d2) {
    const Mono T3inv{0, 0, -1};
    EquivariantCharacter a(fe_char(lambda).shifted(T3inv), {T3inv});
    EquivariantCharacter b(fe_char_shifted(lambda, -d1, -d2), {T3inv});
    return a - b;
}

Rational edge_factor(const Partition& lambda, int d1, int d2, const ParamSample& s) {
    return exp_pleth(-reduce_char(edge_char(lambda, d1, d2)), s);
}

std::string to_string(DescMode m) {
    switch (m) {
        case DescMode::ch: return "ch";
        case DescMode::ch_prime: return "ch_prime";
        case DescMode::ch_hat: return "ch_hat";
    }
    return "ch";
}

DescMode parse_desc_mode(const std::string& s) {
    if (s == "ch") return DescMode::ch;
    if (s == "ch_prime") return DescMode::ch_prime;
    if (s == "ch_hat") return DescMode::ch_hat;
    throw MathError("unknown descendent mode: " + s);
}

std::vector<Rational> descendent_char(const RppConfig& cfg, DescMode mode, int n, const ParamSample& s,
                                      const Convention& conv) {
    auto P12 = series_mul(one_minus_exp(s.t1, n), one_minus_exp(s.t2, n), n);
    auto P123 = series_mul(P12, one_minus_exp(s.t3, n), n);
    std::vector<Rational> acc(n + 1, Rational(0));
    auto cs = cells(cfg.shape);
    const int sigma = conv.pt_column_sign;
    for (std::size_t idx = 0; idx < cs.size(); ++idx) {
        Rational c = content(cs[idx], s);
        if (mode == DescMode::ch_prime) {
            for (int m = 1; m <= cfg.k[idx]; ++m) add_into(acc, exp_coeffs(c + sigma * m * s.t3, n));
        } else {
            add_into(acc, exp_coeffs(c + sigma * cfg.k[idx] * s.t3, n));
        }
    }
    auto r = series_mul(mode == DescMode::ch_prime ? P123 : P12, acc, n);
    if (mode == DescMode::ch_hat) {
        for (auto& x : r) x = -x;
        r[0] += 1;
    }
    return r;
}

std::vector<Rational> descendent_char(const LeggedPlanePartition& pp, DescMode mode, int n, const ParamSample& s) {
    auto P12 = series_mul(one_minus_exp(s.t1, n), one_minus_exp(s.t2, n), n);
    auto P123 = series_mul(P12, one_minus_exp(s.t3, n), n);
    std::vector<Rational> boxes(n + 1, Rational(0)), leg(n + 1, Rational(0));
    for (const auto& [c, h] : pp.heights)
        for (int k = 0; k < h; ++k) add_into(boxes, exp_coeffs(content(c, s) + k * s.t3, n));
    for (const auto& c : cells(pp.leg)) add_into(leg, exp_coeffs(content(c, s), n));
    auto r = series_mul(P123, boxes, n);
    if (mode != DescMode::ch_prime) add_into(r, series_mul(P12, leg, n));
    if (mode == DescMode::ch_hat) {
        for (auto& x : r) x = -x;
        r[0] += 1;
    }
    return r;
}

}  // namespace vf
