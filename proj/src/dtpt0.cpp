#include "vf/dtpt0.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "vf/localcurve.hpp"

namespace vf {

namespace {

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<Rational> one_minus_exp_series(const Rational& x, int n) {
    auto e = exp_coeffs(x, n);
    for (auto& c : e) c = -c;
    e[0] += 1;
    return e;
}

// (1 - e^{k w t3}) / (1 - e^{w t3}) to w^n
std::vector<Rational> column_sum_series(int k, const Rational& t3, int n) {
    std::vector<Rational> num = one_minus_exp_series(k * t3, n + 1), den = one_minus_exp_series(t3, n + 1);
    // both vanish at w = 0; divide by w first
    num.erase(num.begin());
    den.erase(den.begin());
    std::vector<Rational> q(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        Rational r = num[i];
        for (int j = 1; j <= i; ++j) r -= den[j] * q[i - j];
        q[i] = r / den[0];
    }
    return q;
}

// (1 - e^{w t1})(1 - e^{w t2})(1 - e^{w t3}) / (t1 t2 t3) to w^n
std::vector<Rational> p123_over_t(const ParamSample& s, int n) {
    auto p = series_mul(series_mul(one_minus_exp_series(s.t1, n), one_minus_exp_series(s.t2, n), n),
                        one_minus_exp_series(s.t3, n), n);
    Rational T = s.t1 * s.t2 * s.t3;
    for (auto& c : p) c /= T;
    return p;
}

bool dt_heights_valid(const Partition& mu, const std::vector<int>& k) {
    auto cs = cells(mu);
    for (std::size_t a = 0; a < cs.size(); ++a) {
        if (k[a] < 1) return false;
        for (std::size_t b = 0; b < cs.size(); ++b) {
            bool below = (cs[b].i == cs[a].i + 1 && cs[b].j == cs[a].j) || (cs[b].i == cs[a].i && cs[b].j == cs[a].j + 1);
            if (below && k[b] > k[a]) return false;
        }
    }
    return true;
}

void for_each_box(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(n, lo);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(k);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            k[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

void bump(ResTerm& t, const Form& f, int e) {
    t.facs[f] += e;
    if (t.facs[f] == 0) t.facs.erase(f);
}

// [1+x]_k [1+A+x]_k [x-a1]_k [x-a2]_k / ([x]_k [x-A]_k [1+a1+x]_k [1+a2+x]_k) at x = 0
Tracked diagonal_factor(long k, const ParamSample& s) {
    const Rational a1 = s.a1(), a2 = s.a2(), A = a1 + a2;
    Tracked r = pochhammer_tracked(1, k) * pochhammer_tracked(1 + A, k) * pochhammer_tracked(-a1, k) *
                pochhammer_tracked(-a2, k);
    r /= pochhammer_tracked(0, k) * pochhammer_tracked(-A, k) * pochhammer_tracked(1 + a1, k) *
         pochhammer_tracked(1 + a2, k);
    return r;
}

// z-dependent part of f (without the diagonal constants), indices orientation * k
ResTerm f_kernel(const std::vector<int>& k, int orientation) {
    const int n = static_cast<int>(k.size());
    ResTerm t{Rational(1), {}};
    for (int i = 0; i < n; ++i) {
        long d = static_cast<long>(orientation) * k[i];
        add_pochhammer(t, i, -1, 1, {1, 1, 1}, d, 1);
        add_pochhammer(t, i, -1, 1, {0, 0, 0}, d, -1);
    }
    // F^{-1}_{k_i - k_j}(z_i - z_j), i < j
    const std::array<std::pair<WConst, int>, 6> fblocks{
        {{{0, -1, 0}, 1}, {{0, 0, -1}, 1}, {{0, 1, 1}, 1}, {{0, 1, 0}, -1}, {{0, 0, 1}, -1}, {{0, -1, -1}, -1}}};
    // pair quadruple ratio at x = z_i - z_j, index k_i
    const std::array<std::pair<WConst, int>, 8> quad{{{{1, 0, 0}, 1},
                                                      {{1, 1, 1}, 1},
                                                      {{0, -1, 0}, 1},
                                                      {{0, 0, -1}, 1},
                                                      {{0, 0, 0}, -1},
                                                      {{0, -1, -1}, -1},
                                                      {{1, 1, 0}, -1},
                                                      {{1, 0, 1}, -1}}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i < j) {
                long d = static_cast<long>(orientation) * (k[i] - k[j]);
                for (const auto& [c, e] : fblocks) add_pochhammer(t, i, j, 1, c, d, -e);
            }
            long d = static_cast<long>(orientation) * k[i];
            for (const auto& [c, e] : quad) add_pochhammer(t, i, j, 1, c, d, e);
        }
    // Omega: dz/z and omega(z_i - z_j)
    for (int i = 0; i < n; ++i) {
        bump(t, Form{i, -1, {0, 0, 0}}, -1);
        for (int j = i + 1; j < n; ++j) {
            bump(t, Form{i, j, {0, 0, 0}}, 1);
            bump(t, Form{i, j, {0, 1, 1}}, 1);
            bump(t, Form{i, j, {0, 1, 0}}, -1);
            bump(t, Form{i, j, {0, 0, 1}}, -1);
        }
    }
    return t;
}

using PolyMap = std::map<std::pair<DescSeries::Key, std::vector<int>>, Rational>;

// J_mu(Z) prod_r g(k', w_r, Z), as (w-key, alpha) -> coefficient
PolyMap f_polynomial(const SymPoly& J, const std::vector<int>& kk, const DescSeries& shape, const ParamSample& s) {
    const int n = static_cast<int>(kk.size());
    const std::size_t m = shape.vars().size();
    PolyMap acc;
    for (const auto& [a, c] : J.terms) acc[{DescSeries::Key(m, 0), a}] += c;
    for (std::size_t r = 0; r < m; ++r) {
        const int ord = shape.orders()[r];
        auto pre = p123_over_t(s, ord);
        PolyMap next;
        for (int i = 0; i < n; ++i) {
            auto pref = series_mul(pre, column_sum_series(kk[i], s.t3, ord), ord);
            for (int a = 0; a <= ord; ++a)
                for (int b = 0; a + b <= ord; ++b) {
                    if (pref[b] == 0) continue;
                    Rational c = pref[b] / factorial(a);
                    for (const auto& [key, v] : acc) {
                        auto u = key.first;
                        u[r] += a + b;
                        if (!shape.admissible(u)) continue;
                        auto al = key.second;
                        al[i] += a;
                        next[{u, al}] += v * c;
                    }
                }
        }
        acc = std::move(next);
    }
    return acc;
}

DescSeries w_shape(const std::vector<int>& worders) {
    std::vector<std::string> vars;
    for (std::size_t r = 0; r < worders.size(); ++r) vars.push_back("w" + std::to_string(r + 1));
    return DescSeries(vars, worders);
}

bool tables_equal(const std::vector<DescSeries>& res, int shift, const std::vector<DescSeries>& target) {
    // residue[i] is the coefficient of q^{i + shift}; target starts at q^0
    for (std::size_t i = 0; i < res.size(); ++i) {
        int p = static_cast<int>(i) + shift;
        if (p < 0) {
            if (!res[i].is_zero()) return false;
        } else if (p < static_cast<int>(target.size()) && !(res[i].coeffs() == target[p].coeffs())) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Rational> g_series(const Partition& mu, const std::vector<int>& k, int worder, const ParamSample& s) {
    auto pre = p123_over_t(s, worder);
    auto cs = cells(mu);
    std::vector<Rational> sum(worder + 1, Rational(0));
    for (std::size_t a = 0; a < cs.size(); ++a) {
        auto term = series_mul(column_sum_series(k[a], s.t3, worder), exp_coeffs(content(cs[a], s), worder), worder);
        for (int i = 0; i <= worder; ++i) sum[i] += term[i];
    }
    return series_mul(pre, sum, worder);
}

Tracked dt_analytic_weight(const Partition& mu, const std::vector<int>& k, const ParamSample& s,
                           const Convention& conv) {
    auto cs = cells(mu);
    LaurentPoly x;
    for (std::size_t a = 0; a < cs.size(); ++a) x.add_term({cs[a].i, cs[a].j, k[a]}, 1);
    EquivariantCharacter q(leg_char(mu) - x, {Mono{0, 0, 1}});
    return exp_pleth_tracked(-reduce_char(dt_vertex_from_q(q, {}, conv.dt_dual_denominator)), s);
}

Dtpt0Report dtpt0_report(const Partition& mu, const std::vector<int>& worders, int N, const ParamSample& s,
                         const Convention& conv) {
    Dtpt0Report rep;
    rep.mu = mu;
    rep.worders = worders;
    rep.qorder = N;
    const int n = size(mu);
    const int m = static_cast<int>(worders.size());
    const Rational T = s.t1 * s.t2 * s.t3;

    // vanishing off the DT locus, all shapes up to size 3, entries 1..3
    rep.vanishing_pass = true;
    for (int sz = 1; sz <= 3; ++sz)
        for (const auto& nu : enum_partitions(sz))
            for_each_box(sz, 1, 3, [&](const std::vector<int>& k) {
                VanishingRecord v{nu, k, dt_heights_valid(nu, k), dt_analytic_weight(nu, k, s, conv).zero_order, false};
                v.pass = v.dt_valid ? v.zero_order == 0 : v.zero_order > 0;
                rep.vanishing_pass = rep.vanishing_pass && v.pass;
                rep.vanishing.push_back(std::move(v));
            });

    // g against descendent characters of the point class divided by t1 t2 t3
    rep.gcheck_pass = true;
    const int gorder = 3;
    for (int sz = 1; sz <= 3; ++sz)
        for (const auto& nu : enum_partitions(sz))
            for_each_box(sz, 0, 3, [&](const std::vector<int>& k) {
                auto cs = cells(nu);
                LeggedPlanePartition pp;
                bool dt_ok = true;
                for (std::size_t a = 0; a < cs.size(); ++a) {
                    if (k[a] > 0) pp.heights[cs[a]] = k[a];
                }
                dt_ok = valid_lpp(pp);
                if (dt_ok) {
                    auto ch = descendent_char(pp, DescMode::ch, gorder, s);
                    for (auto& c : ch) c /= T;
                    GCheckRecord g{nu, k, "DT", g_series(nu, k, gorder, s) == ch};
                    rep.gcheck_pass = rep.gcheck_pass && g.pass;
                    rep.gcheck.push_back(std::move(g));
                }
                RppConfig cfg{nu, k};
                if (valid_rpp(cfg)) {
                    auto chp = descendent_char(cfg, DescMode::ch_prime, gorder, s, conv);
                    for (auto& c : chp) c = -c / T;
                    std::vector<int> neg(k);
                    for (auto& v : neg) v = -v;
                    GCheckRecord g{nu, k, "PT", g_series(nu, neg, gorder, s) == chp};
                    rep.gcheck_pass = rep.gcheck_pass && g.pass;
                    rep.gcheck.push_back(std::move(g));
                }
            });

    DescSeries shape = w_shape(worders);
    std::vector<DescendentSpec> wdesc;
    for (int r = 0; r < m; ++r) wdesc.push_back({DescMode::ch, 0, shape.vars()[r], worders[r]});

    // DT target: slice sum with ch(1) = ch([0]) / T per descendent
    std::vector<DescSeries> dt_target;
    {
        VertexSeries v = dt0_slice(mu, N, wdesc, s, conv);
        for (auto& c : v.coeffs) dt_target.push_back(c * rpow(T, -m));
    }
    // PT target: (-1)^m sum over PT fixed points of the analytic DT weight prod ch'(1)
    std::vector<DescSeries> pt_target(N + 1, shape);
    std::vector<std::string> pt_flags;
    for (const auto& cfg : enum_rpp(mu, N)) {
        std::vector<int> neg(cfg.k);
        for (auto& v : neg) v = -v;
        Tracked w = dt_analytic_weight(mu, neg, s, conv);
        if (w.zero_order != 0) {
            pt_flags.push_back("degenerate PT weight at k=" + to_string(Partition(cfg.k)));
            if (w.zero_order > 0) continue;
        }
        DescSeries d = DescSeries::constant(rpow(Rational(-1), m), shape);
        for (int r = 0; r < m; ++r) {
            auto chp = descendent_char(cfg, DescMode::ch_prime, worders[r], s, conv);
            for (auto& c : chp) c /= T;
            d = d * DescSeries::univariate(shape, r, chp);
        }
        pt_target[cfg.size()] += d * w.v;
    }

    SymPoly J = interp_poly(mu, s, conv).expanded(n);
    ContentResidue engine(n, std::vector<int>(n, 0), {BlockParams{s.a1(), s.a2()}});
    const Rational norm = rpow(s.t1 * s.t2, static_cast<long>(conv.hilb_norm) * n) / factorial(n);

    for (int bound : {-1, 0, 1})
        for (int orient : {1, -1}) {
            Dtpt0Record rec;
            rec.bound = bound;
            rec.orientation = orient;
            rec.shift = bound * n;
            rec.residue.assign(N - rec.shift + 1, shape);
            rec.flags = pt_flags;
            bool degenerate = false;
            for_each_box(n, bound, N - bound * (n - 1), [&](const std::vector<int>& k) {
                int K = std::accumulate(k.begin(), k.end(), 0);
                if (K > N) return;
                Tracked diag;
                for (int i = 0; i < n; ++i) diag *= diagonal_factor(static_cast<long>(orient) * k[i], s);
                if (diag.zero_order != 0) {
                    rec.flags.push_back("degenerate diagonal factor at k=" + to_string(Partition(k)));
                    degenerate = true;
                    return;
                }
                std::vector<int> kk(k);
                for (auto& v : kk) v *= orient;
                ResTerm ker = f_kernel(k, orient);
                ker.coef *= diag.v;
                std::map<std::vector<int>, Rational> cache;
                for (const auto& [key, c] : f_polynomial(J, kk, shape, s)) {
                    if (c == 0) continue;
                    const auto& al = key.second;
                    auto it = cache.find(al);
                    if (it == cache.end()) {
                        ResTerm t = ker;
                        int deg = 0;
                        for (int i = 0; i < n; ++i) {
                            if (al[i]) bump(t, Form{i, -1, {0, 0, 0}}, al[i]);
                            deg += al[i];
                        }
                        it = cache.emplace(al, engine.evaluate({t}) * rpow(s.t3, deg)).first;
                    }
                    rec.residue[K - rec.shift].add(key.first, c * it->second * norm);
                }
            });
            rec.dt_target = dt_target;
            rec.pt_target = pt_target;
            rec.dt_match = !degenerate && tables_equal(rec.residue, rec.shift, dt_target);
            rec.pt_match = !degenerate && pt_flags.empty() && tables_equal(rec.residue, rec.shift, pt_target);
            rep.records.push_back(std::move(rec));
        }
    return rep;
}

}  // namespace vf
