#include "vf/vertex.hpp"

#include <algorithm>

namespace vf {

QSeries VertexSeries::scalar() const {
    QSeries q(order(), shift);
    for (int i = 0; i <= order(); ++i) {
        const auto& d = coeffs[i];
        q[i] = d.coeff(DescSeries::Key(d.vars().size(), 0));
    }
    return q;
}

VertexSeries operator*(const VertexSeries& a, const VertexSeries& b) {
    int n = std::min(a.order(), b.order());
    VertexSeries r{a.shift + b.shift, std::vector<DescSeries>(n + 1, DescSeries::constant(0, a.coeffs[0]))};
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

VertexSeries operator+(const VertexSeries& a, const VertexSeries& b) {
    if (a.shift != b.shift) throw MathError("q-shift mismatch");
    int n = std::min(a.order(), b.order());
    VertexSeries r{a.shift, {}};
    for (int i = 0; i <= n; ++i) r.coeffs.push_back(a.coeffs[i] + b.coeffs[i]);
    return r;
}

VertexSeries scaled(VertexSeries a, const Rational& c) {
    for (auto& x : a.coeffs) x *= c;
    return a;
}

Rational chern_monomial_value(const Partition& nu, const Partition& mu, const ParamSample& s) {
    std::vector<Rational> cs;
    for (const auto& c : cells(mu)) cs.push_back(content(c, s));
    // elementary symmetric polynomials of the contents
    std::vector<Rational> e(cs.size() + 1, Rational(0));
    e[0] = 1;
    for (const auto& x : cs)
        for (std::size_t k = cs.size(); k >= 1; --k) e[k] += e[k - 1] * x;
    Rational r = 1;
    for (int part : nu) r *= part < static_cast<int>(e.size()) ? e[part] : Rational(0);
    return r;
}

DescSeries pt_descendents(const RppConfig& cfg, const std::vector<DescendentSpec>& desc, const DescSeries& shape,
                          const ParamSample& s, const Convention& conv) {
    DescSeries r = DescSeries::constant(1, shape);
    for (std::size_t v = 0; v < desc.size(); ++v)
        r = r * DescSeries::univariate(shape, v, descendent_char(cfg, desc[v].mode, desc[v].order, s, conv));
    return r;
}

DescSeries dt_descendents(const LeggedPlanePartition& pp, const std::vector<DescendentSpec>& desc,
                          const DescSeries& shape, const ParamSample& s) {
    DescSeries r = DescSeries::constant(1, shape);
    for (std::size_t v = 0; v < desc.size(); ++v)
        r = r * DescSeries::univariate(shape, v, descendent_char(pp, desc[v].mode, desc[v].order, s));
    return r;
}

namespace {

VertexSeries empty_series(int N, const DescSeries& shape) {
    return VertexSeries{0, std::vector<DescSeries>(N + 1, shape)};
}

}  // namespace

VertexSeries pt_fixed_sum(const Partition& mu, int N, const std::vector<DescendentSpec>& desc, const ParamSample& s,
                          const Convention& conv) {
    DescSeries shape = desc_shape(desc);
    VertexSeries out = empty_series(N, shape);
    for (const auto& cfg : enum_rpp(mu, N)) {
        DescSeries d = pt_descendents(cfg, desc, shape, s, conv);
        out.coeffs[cfg.size()] += d * pt_weight(cfg, s, conv);
    }
    return out;
}

VertexSeries bare_pt_fixed(const Partition& mu, int N, const std::vector<DescendentSpec>& desc,
                           const ParamSample& s, const Convention& conv) {
    return scaled(pt_fixed_sum(mu, N, desc, s, conv), 1 / euler_hilb(mu, s, conv));
}

VertexSeries bare_pt_chern(const Partition& lambda, int N, const std::vector<DescendentSpec>& desc,
                           const ParamSample& s, const Convention& conv) {
    VertexSeries out = empty_series(N, desc_shape(desc));
    for (const auto& mu : enum_partitions(size(lambda))) {
        Rational c = chern_monomial_value(lambda, mu, s);
        if (c == 0) continue;
        out = out + scaled(bare_pt_fixed(mu, N, desc, s, conv), c);
    }
    return out;
}

VertexSeries bare_dt(const Partition& leg, int N, const std::vector<DescendentSpec>& desc, const ParamSample& s,
                     const Convention& conv) {
    DescSeries shape = desc_shape(desc);
    VertexSeries out = empty_series(N, shape);
    for (const auto& pp : enum_legged_pp(leg, N))
        out.coeffs[pp.renorm_volume()] += dt_descendents(pp, desc, shape, s) * dt_weight(pp, s, conv);
    return out;
}

VertexSeries dt0_slice(const Partition& mu, int N, const std::vector<DescendentSpec>& desc, const ParamSample& s,
                       const Convention& conv) {
    DescSeries shape = desc_shape(desc);
    VertexSeries out = empty_series(N, shape);
    for (const auto& pp : enum_legged_pp({}, N)) {
        if (first_slice(pp) != mu) continue;
        out.coeffs[pp.renorm_volume()] += dt_descendents(pp, desc, shape, s) * dt_weight(pp, s, conv);
    }
    return out;
}

// ------------------------------------------------------- specialization

Rational pt_single_cell_infinity_coeff(int k, const std::vector<int>& zpowers, const ParamSample& s) {
    // [-z-A]_k / [-z+1]_k = prod_m (z - (m - A)) / (z - (1 + m))
    const Rational A = s.a1() + s.a2();
    std::vector<RationalFactor> f;
    for (int m = 0; m < k; ++m) {
        f.push_back({RationalFactor::Linear, 0, -1, Rational(m) - A, 1});
        f.push_back({RationalFactor::Linear, 0, -1, Rational(1 + m), -1});
    }
    return iterated_residue(f, zpowers, 1);
}

PolyFitReport fit_and_verify(const std::vector<Rational>& values, int fit_count) {
    PolyFitReport r;
    r.values = values;
    if (fit_count < 1 || fit_count > static_cast<int>(values.size())) throw MathError("bad fit window");
    // Newton forward differences on 0..fit_count-1
    std::vector<Rational> diff(values.begin(), values.begin() + fit_count), lead;
    for (int d = 0; d < fit_count; ++d) {
        lead.push_back(diff[0]);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    for (int d = fit_count - 1; d >= 0; --d)
        if (lead[d] != 0) {
            r.fit_degree = d;
            break;
        }
    r.polynomial = true;
    for (std::size_t x = fit_count; x < values.size(); ++x) {
        // sum_d lead[d] * C(x, d)
        Rational p = 0, binom = 1;
        for (int d = 0; d < fit_count; ++d) {
            p += lead[d] * binom;
            binom = binom * (Rational(static_cast<long>(x)) - d) / (d + 1);
        }
        r.predicted.push_back(p);
        if (p != values[x]) r.polynomial = false;
    }
    return r;
}

SpecPolyReport specialization_poly_check(int c, int uorder, int kmax, int fit_count, const ParamSample& s) {
    SpecPolyReport rep;
    rep.c = c;
    rep.uorder = uorder;
    Convention conv = calibrated_convention();
    std::vector<Rational> p12;
    {
        auto e1 = exp_coeffs(s.t1, uorder), e2 = exp_coeffs(s.t2, uorder);
        for (auto& x : e1) x = -x;
        for (auto& x : e2) x = -x;
        e1[0] += 1;
        e2[0] += 1;
        p12 = series_mul(e1, e2, uorder);
    }
    const Rational norm = rpow(s.t1 * s.t2, conv.hilb_norm);
    std::vector<std::vector<Rational>> vals(uorder + 1);
    std::vector<Rational> loc;
    for (int k = 0; k <= kmax; ++k) {
        std::vector<Rational> R;
        for (int e = 0; e <= uorder; ++e) R.push_back(pt_single_cell_infinity_coeff(k, {e}, s));
        for (int m = 0; m <= uorder; ++m) {
            // u^m of e^{t3 u (z + sigma k)} (1 - e^{t1 u})(1 - e^{t2 u}) against R
            Rational v = 0;
            for (int a = 0; a <= m; ++a) {
                int b = m - a;
                if (p12[b] == 0) continue;
                Rational fa = 1;
                for (int i = 2; i <= a; ++i) fa *= i;
                for (int e = 0; e <= a; ++e) {
                    Rational bin = 1;
                    for (int t = 0; t < e; ++t) bin = bin * (a - t) / (t + 1);
                    v += p12[b] * rpow(s.t3, a) / fa * bin * rpow(Rational(conv.pt_column_sign * k), a - e) * R[e];
                }
            }
            vals[m].push_back(v * norm);
        }
        RppConfig cfg{{1}, {k}};
        Tracked w = exp_pleth_tracked(-vertex_char_pt(cfg, conv), s);
        if (w.zero_order < 0) throw MathError("pole at specialization");
        loc.push_back(w.zero_order > 0 ? Rational(0) : w.v);
    }
    rep.pass = true;
    for (int m = 0; m <= uorder; ++m) {
        auto f = fit_and_verify(vals[m], fit_count);
        f.reading = "infinity expansion, u^" + std::to_string(m);
        rep.pass = rep.pass && f.polynomial;
        rep.per_coefficient.push_back(std::move(f));
    }
    rep.localization = fit_and_verify(loc, fit_count);
    rep.localization.reading = "fixed-point weight";
    return rep;
}

}  // namespace vf
