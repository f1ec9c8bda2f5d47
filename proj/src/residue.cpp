#include "vf/residue.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace vf {

namespace {

// generalized binomial C(e, s)
Rational binom(long e, long s) {
    Rational r = 1;
    for (long t = 0; t < s; ++t) r = r * (e - t) / (t + 1);
    return r;
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

// ------------------------------------------------------------ at infinity

NestedLaurentSeries NestedLaurentSeries::monomial(int n, const Key& alpha, const Rational& c) {
    NestedLaurentSeries s(n);
    s.add(alpha, c);
    return s;
}

void NestedLaurentSeries::add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool NestedLaurentSeries::viable(const Key& k) const {
    // negative powers only lower prefix sums of exponents in the nested region
    int s = 0;
    for (int v = 0; v < n_; ++v) {
        s += k[v];
        if (s < floor_[v]) return false;
    }
    return true;
}

void NestedLaurentSeries::multiply(const RationalFactor& f, int window) {
    if (f.exponent == 0) return;
    if (f.kind == RationalFactor::Difference && !(f.i < f.j && f.j < n_)) throw MathError("bad difference factor");
    if (f.exponent > 0) {
        for (int rep = 0; rep < f.exponent; ++rep) {
            NestedLaurentSeries out(n_);
            for (const auto& [k, c] : t_) {
                Key a = k;
                a[f.i] += 1;
                out.add(a, c);
                if (f.kind == RationalFactor::Difference) {
                    Key b = k;
                    b[f.j] += 1;
                    out.add(b, -c);
                }
                out.add(k, -c * f.c);
            }
            t_ = std::move(out.t_);
        }
        return;
    }
    const int e = -f.exponent;
    NestedLaurentSeries out(n_);
    for (const auto& [k, c] : t_) {
        int prefix = 0;
        for (int v = 0; v <= f.i; ++v) prefix += k[v];
        for (int m = 0; m <= window && m + e <= prefix - floor_[f.i]; ++m) {
            Rational w = binom(m + e - 1, m) * c;
            Key a = k;
            a[f.i] -= m + e;
            if (f.kind == RationalFactor::Linear) {
                if (viable(a)) out.add(a, w * rpow(f.c, m));
                continue;
            }
            for (int r = 0; r <= m; ++r) {
                Key b = a;
                b[f.j] += r;
                if (viable(b)) out.add(b, w * binom(m, r) * rpow(f.c, m - r));
            }
        }
    }
    t_ = std::move(out.t_);
}

Rational NestedLaurentSeries::constant_term() const { return coefficient(Key(n_, 0)); }

Rational NestedLaurentSeries::coefficient(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
}

namespace {

Rational residue_at_window(const std::vector<RationalFactor>& factors, const std::vector<int>& alpha, int n, int w) {
    NestedLaurentSeries s = NestedLaurentSeries::monomial(n, alpha);
    for (const auto& f : factors)
        if (f.exponent > 0) s.multiply(f, w);
    for (const auto& f : factors)
        if (f.exponent < 0) s.multiply(f, w);
    return s.constant_term();
}

}  // namespace

Rational iterated_residue(const std::vector<RationalFactor>& factors, const std::vector<int>& alpha, int n,
                          int window) {
    if (static_cast<int>(alpha.size()) != n) throw MathError("exponent vector length mismatch");
    if (window < 0) {
        int deg = std::max(0, std::accumulate(alpha.begin(), alpha.end(), 0));
        for (const auto& f : factors)
            if (f.exponent > 0) deg += f.exponent;
        window = deg;
    }
    Rational a = residue_at_window(factors, alpha, n, window);
    Rational b = residue_at_window(factors, alpha, n, window + 2);
    if (a != b) throw MathError("window instability");
    return a;
}

std::map<std::vector<int>, Rational> iterated_residues(const std::vector<RationalFactor>& factors,
                                                       const std::vector<std::vector<int>>& alphas, int n) {
    if (alphas.empty()) return {};
    // residue of z^alpha K is the coefficient of z^-alpha in K
    NestedLaurentSeries::Key floor(n, 0);
    int deg = 0;
    for (const auto& a : alphas) {
        if (static_cast<int>(a.size()) != n) throw MathError("exponent vector length mismatch");
        int p = 0;
        for (int v = 0; v < n; ++v) {
            p += a[v];
            floor[v] = std::min(floor[v], -p);
        }
        deg = std::max(deg, p);
    }
    for (const auto& f : factors)
        if (f.exponent > 0) deg += f.exponent;
    auto expand = [&](int w) {
        NestedLaurentSeries s = NestedLaurentSeries::monomial(n, NestedLaurentSeries::Key(n, 0));
        s.set_floor(floor);
        for (const auto& f : factors)
            if (f.exponent > 0) s.multiply(f, w);
        for (const auto& f : factors)
            if (f.exponent < 0) s.multiply(f, w);
        return s;
    };
    NestedLaurentSeries a = expand(deg), b = expand(deg + 2);
    std::map<std::vector<int>, Rational> out;
    for (const auto& al : alphas) {
        NestedLaurentSeries::Key k(n);
        for (int v = 0; v < n; ++v) k[v] = -al[v];
        Rational r = a.coefficient(k);
        if (r != b.coefficient(k)) throw MathError("window instability");
        out.emplace(al, r);
    }
    return out;
}

std::vector<RationalFactor> omega_kernel(int n, const Rational& w1, const Rational& w2) {
    std::vector<RationalFactor> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.push_back({RationalFactor::Difference, i, j, 0, 1});
            out.push_back({RationalFactor::Difference, i, j, w1 + w2, 1});
            out.push_back({RationalFactor::Difference, i, j, w1, -1});
            out.push_back({RationalFactor::Difference, i, j, w2, -1});
        }
    return out;
}

// ------------------------------------------------------ at content poles

namespace {

WConst cadd(const WConst& a, const WConst& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
WConst cneg(const WConst& a) { return {-a[0], -a[1], -a[2]}; }

void bump(std::map<Form, int>& m, const Form& f, int e) {
    if (e == 0) return;
    int& v = m[f];
    v += e;
    if (v == 0) m.erase(f);
}

using Series = std::vector<std::vector<ResTerm>>;  // by order in the local parameter

}  // namespace

std::vector<ResTerm> ContentResidue::residue_var(const std::vector<ResTerm>& terms, int k) const {
    std::map<std::map<Form, int>, Rational> acc;
    const BlockParams& bp = params_.at(block_.at(k));
    for (const auto& term : terms) {
        for (const auto& [pf, pe] : term.facs) {
            if (!(pf.i == k && pf.j == -1 && pe < 0 && pf.c[0] == 0)) continue;
            const WConst p = pf.c;
            const int r = -pe;
            Series ser(r);
            ser[0].push_back({term.coef, {}});
            std::map<Form, int> rest;
            for (const auto& [f, e] : term.facs) {
                if (f.i != k && f.j != k) {
                    rest[f] = e;
                    continue;
                }
                if (f.j == -1 && f.c == p) continue;
                if (f.i == k && f.j != -1) throw MathError("outer form depends on an inner variable");
                Series fac(r);
                if (f.j == -1) {
                    // (z_k - c)^e at z_k = p + eps
                    Rational v = bp.value(cadd(p, cneg(f.c)));
                    if (v == 0) throw MathError("pole at non-generic input");
                    for (int s = 0; s < r; ++s) fac[s].push_back({binom(e, s) * rpow(v, e - s), {}});
                } else {
                    // (z_i - z_k - c)^e = (z_i - (p + c) - eps)^e
                    Form nf{f.i, -1, cadd(p, f.c)};
                    for (int s = 0; s < r; ++s) {
                        ResTerm t{binom(e, s) * (s % 2 ? -1 : 1), {}};
                        bump(t.facs, nf, e - s);
                        fac[s].push_back(std::move(t));
                    }
                }
                Series nxt(r);
                for (int o1 = 0; o1 < r; ++o1)
                    for (int o2 = 0; o1 + o2 < r; ++o2)
                        for (const auto& a : ser[o1])
                            for (const auto& b : fac[o2]) {
                                ResTerm t{a.coef * b.coef, a.facs};
                                for (const auto& [ff, ee] : b.facs) bump(t.facs, ff, ee);
                                nxt[o1 + o2].push_back(std::move(t));
                            }
                // merge within each order to keep the series small
                for (auto& lvl : nxt) {
                    std::map<std::map<Form, int>, Rational> m;
                    for (auto& t : lvl) m[t.facs] += t.coef;
                    lvl.clear();
                    for (auto& [fs, c] : m)
                        if (c != 0) lvl.push_back({c, fs});
                }
                ser = std::move(nxt);
            }
            for (const auto& t : ser[r - 1]) {
                std::map<Form, int> fs = rest;
                for (const auto& [ff, ee] : t.facs) bump(fs, ff, ee);
                acc[fs] += t.coef;
            }
        }
    }
    std::vector<ResTerm> out;
    for (auto& [fs, c] : acc)
        if (c != 0) out.push_back({c, fs});
    return out;
}

Rational ContentResidue::evaluate(std::vector<ResTerm> terms) const {
    for (int k = n_ - 1; k >= 0; --k) terms = residue_var(terms, k);
    Rational tot = 0;
    for (const auto& t : terms) {
        if (!t.facs.empty()) throw MathError("unresolved factors after iterated residue");
        tot += t.coef;
    }
    return tot;
}

void add_pochhammer(ResTerm& t, int i, int j, int sgn, const WConst& c, long d, int e) {
    auto one = [&](int m, int ex) {
        // sgn*x + cc = sgn*(x - target), target = -sgn*cc
        WConst cc{c[0] + m, c[1], c[2]};
        WConst target = sgn == 1 ? cneg(cc) : cc;
        int fs = 1;
        Form f{i, j, target};
        if (j != -1 && j < i) {
            f = Form{j, i, cneg(target)};
            fs = -1;
        }
        if ((sgn * fs) < 0 && (ex % 2 != 0)) t.coef = -t.coef;
        bump(t.facs, f, ex);
    };
    if (d >= 0)
        for (long m = 0; m < d; ++m) one(static_cast<int>(m), e);
    else
        for (long m = 1; m <= -d; ++m) one(static_cast<int>(-m), -e);
}

ResTerm mainpt_kernel(const std::vector<int>& k, int off) {
    const int n = static_cast<int>(k.size());
    int tot = std::accumulate(k.begin(), k.end(), 0);
    ResTerm t{tot % 2 ? Rational(-1) : Rational(1), {}};
    for (int i = 0; i < n; ++i) {
        add_pochhammer(t, off + i, -1, -1, {0, -1, -1}, k[i], 1);
        add_pochhammer(t, off + i, -1, -1, {1, 0, 0}, k[i], -1);
    }
    // inverse pair factor [x-A][x][x+a1+1][x+a2+1] / ([x-a1][x-a2][x+A+1][x+1]) at index k_j - k_i
    const std::array<std::pair<WConst, int>, 8> pair_blocks{{{{0, -1, -1}, 1},
                                                             {{0, 0, 0}, 1},
                                                             {{1, 1, 0}, 1},
                                                             {{1, 0, 1}, 1},
                                                             {{0, -1, 0}, -1},
                                                             {{0, 0, -1}, -1},
                                                             {{1, 1, 1}, -1},
                                                             {{1, 0, 0}, -1}}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (const auto& [c, s] : pair_blocks) add_pochhammer(t, off + i, off + j, 1, c, k[j] - k[i], -s);
            bump(t.facs, Form{off + i, off + j, {0, 0, 0}}, 1);
            bump(t.facs, Form{off + i, off + j, {0, 1, 1}}, 1);
            bump(t.facs, Form{off + i, off + j, {0, 1, 0}}, -1);
            bump(t.facs, Form{off + i, off + j, {0, 0, 1}}, -1);
        }
    for (int i = 0; i < n; ++i) bump(t.facs, Form{off + i, -1, {0, 0, 0}}, -1);
    return t;
}

// ---------------------------------------------------------------- formulas

DescSeries desc_shape(const std::vector<DescendentSpec>& desc, int cap) {
    std::vector<std::string> vars;
    std::vector<int> orders;
    for (const auto& d : desc) {
        vars.push_back(d.var);
        orders.push_back(d.order);
    }
    return DescSeries(vars, orders, cap);
}

namespace {

DescSeries egl_shape(const std::vector<int>& uorders, int cap) {
    std::vector<std::string> vars;
    for (std::size_t l = 0; l < uorders.size(); ++l) vars.push_back("u" + std::to_string(l + 1));
    return DescSeries(vars, uorders, cap);
}

}  // namespace

DescSeries egl_localization(int n, const std::vector<int>& uorders, int cap, const ParamSample& s,
                            const Convention& conv) {
    DescSeries shape = egl_shape(uorders, cap);
    DescSeries total = shape;
    for (const auto& lam : enum_partitions(n)) {
        DescSeries term = DescSeries::constant(1 / euler_hilb(lam, s, conv), shape);
        for (std::size_t l = 0; l < uorders.size(); ++l)
            for (const auto& c : cells(lam)) term = term * DescSeries::univariate(shape, l, {Rational(1), -content(c, s)});
        total += term;
    }
    return total;
}

DescSeries egl_residue(int n, const std::vector<int>& uorders, int cap, const ParamSample& s,
                       const Convention& conv) {
    DescSeries shape = egl_shape(uorders, cap);
    // polynomial prod_{k,l} (1 - u_l z_k) as (u, alpha) -> coefficient
    std::map<std::pair<DescSeries::Key, std::vector<int>>, Rational> poly;
    poly[{DescSeries::Key(uorders.size(), 0), std::vector<int>(n, 0)}] = 1;
    for (int k = 0; k < n; ++k)
        for (std::size_t l = 0; l < uorders.size(); ++l) {
            auto next = poly;
            for (const auto& [key, c] : poly) {
                auto [u, a] = key;
                u[l] += 1;
                a[k] += 1;
                if (!shape.admissible(u)) continue;
                next[{u, a}] -= c;
            }
            poly = std::move(next);
        }
    auto factors = omega_kernel(n, s.t1, s.t2);
    std::vector<std::vector<int>> alphas;
    for (const auto& [key, c] : poly)
        if (c != 0) alphas.push_back(key.second);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    auto res = iterated_residues(factors, alphas, n);
    DescSeries out = shape;
    Rational norm = rpow(s.t1 * s.t2, static_cast<long>(conv.hilb_norm) * n) / factorial(n);
    for (const auto& [key, c] : poly) {
        if (c == 0) continue;
        out.add(key.first, c * res.at(key.second) * norm);
    }
    return out;
}

SymPoly chern_monomial_poly(const Partition& nu, int n) {
    SymPoly p;
    p.terms[std::vector<int>(n, 0)] = 1;
    for (int part : nu) {
        if (part > n) return SymPoly{};
        SymPoly e;  // elementary symmetric e_part
        std::vector<int> sel(n, 0);
        std::fill(sel.end() - part, sel.end(), 1);
        do {
            e.terms[sel] += 1;
        } while (std::next_permutation(sel.begin(), sel.end()));
        SymPoly prod;
        for (const auto& [a, ca] : p.terms)
            for (const auto& [b, cb] : e.terms) {
                std::vector<int> x(n);
                for (int i = 0; i < n; ++i) x[i] = a[i] + b[i];
                prod.terms[x] += ca * cb;
            }
        p = std::move(prod);
    }
    return p;
}

std::vector<PolyTerm> pt_descendent_poly(const std::vector<int>& k, const std::vector<DescendentSpec>& desc,
                                         const DescSeries& shape, const ParamSample& s, int sigma) {
    const int n = static_cast<int>(k.size());
    std::vector<PolyTerm> acc{{DescSeries::Key(desc.size(), 0), std::vector<int>(n, 0), Rational(1)}};
    for (std::size_t r = 0; r < desc.size(); ++r) {
        const int ord = desc[r].order;
        std::vector<Rational> om1 = exp_coeffs(s.t1, ord), om2 = exp_coeffs(s.t2, ord);
        for (auto& x : om1) x = -x;
        for (auto& x : om2) x = -x;
        om1[0] += 1;
        om2[0] += 1;
        auto p12 = series_mul(om1, om2, ord);
        // factor for this variable: list of (u-power, alpha, coef)
        std::vector<PolyTerm> fac;
        for (int i = 0; i < n; ++i) {
            Rational w = sigma * k[i] * s.t3;
            for (int a = 0; a <= ord; ++a)          // exponential part u^a (Z_i + w)^a / a!
                for (int b = 0; a + b <= ord; ++b) {
                    if (p12[b] == 0) continue;
                    for (int e = 0; e <= a; ++e) {
                        Rational c = p12[b] * binom(a, e) * rpow(w, a - e) / factorial(a);
                        if (c == 0) continue;
                        DescSeries::Key u(desc.size(), 0);
                        u[r] = a + b;
                        std::vector<int> al(n, 0);
                        al[i] = e;
                        fac.push_back({u, al, c});
                    }
                }
        }
        std::map<std::pair<DescSeries::Key, std::vector<int>>, Rational> merged;
        for (const auto& x : acc)
            for (const auto& y : fac) {
                DescSeries::Key u(x.u.size());
                for (std::size_t v = 0; v < u.size(); ++v) u[v] = x.u[v] + y.u[v];
                if (!shape.admissible(u)) continue;
                std::vector<int> al(n);
                for (int i = 0; i < n; ++i) al[i] = x.alpha[i] + y.alpha[i];
                merged[{u, al}] += x.c * y.c;
            }
        acc.clear();
        for (auto& [key, c] : merged)
            if (c != 0) acc.push_back({key.first, key.second, c});
    }
    return acc;
}

namespace {

void for_each_kvec(int n, int N, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            fn(k);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[i] = v;
            rec(i + 1, left - v);
        }
        k[i] = 0;
    };
    rec(0, N);
}

}  // namespace

std::vector<DescSeries> pt_residue_vertex(int n, const SymPoly& P, int N, const std::vector<DescendentSpec>& desc,
                                          const ParamSample& s, const Convention& conv) {
    DescSeries shape = desc_shape(desc);
    std::vector<DescSeries> out(N + 1, shape);
    ContentResidue engine(n, std::vector<int>(n, 0), {BlockParams{s.a1(), s.a2()}});
    Rational norm = rpow(s.t1 * s.t2, static_cast<long>(conv.hilb_norm) * n) / factorial(n);
    for_each_kvec(n, N, [&](const std::vector<int>& k) {
        int K = std::accumulate(k.begin(), k.end(), 0);
        ResTerm kernel = mainpt_kernel(k);
        std::map<std::pair<DescSeries::Key, std::vector<int>>, Rational> poly;
        for (const auto& d : pt_descendent_poly(k, desc, shape, s, conv.pt_column_sign))
            for (const auto& [a, c] : P.terms) {
                std::vector<int> al(n);
                for (int i = 0; i < n; ++i) al[i] = a[i] + d.alpha[i];
                poly[{d.u, al}] += c * d.c;
            }
        std::map<std::vector<int>, Rational> cache;
        for (const auto& [key, c] : poly) {
            if (c == 0) continue;
            const auto& al = key.second;
            auto it = cache.find(al);
            if (it == cache.end()) {
                ResTerm t = kernel;
                int deg = 0;
                for (int i = 0; i < n; ++i) {
                    if (al[i]) bump(t.facs, Form{i, -1, {0, 0, 0}}, al[i]);
                    deg += al[i];
                }
                it = cache.emplace(al, engine.evaluate({t}) * rpow(s.t3, deg)).first;
            }
            out[K].add(key.first, c * it->second * norm);
        }
    });
    return out;
}

Tracked measure_ratio_closed(const Partition& mu, const std::vector<int>& k, const ParamSample& s, bool as_printed) {
    auto cs = cells(mu);
    if (k.size() != cs.size()) throw MathError("k-vector length differs from |mu|");
    const Rational a1 = s.a1(), a2 = s.a2(), A = a1 + a2;
    std::vector<Rational> z;
    for (const auto& c : cs) z.push_back(content(c, s) / s.t3);
    Tracked r;
    for (std::size_t c = 0; c < cs.size(); ++c) {
        Tracked x = pochhammer_tracked(z[c] + A + 1, k[c]) / pochhammer_tracked(z[c], k[c]);
        r *= x * x;
    }
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t d = 0; d < cs.size(); ++d) {
            Rational Y = z[c] - z[d];
            long kk = k[c];
            Tracked p = pochhammer_tracked(Y + 1, kk) * pochhammer_tracked(Y + 1 + A, kk) *
                        pochhammer_tracked(Y - a1, kk) * pochhammer_tracked(Y - a2, kk);
            p /= pochhammer_tracked(Y, kk) * pochhammer_tracked(Y - A, kk) * pochhammer_tracked(Y + 1 + a1, kk) *
                 pochhammer_tracked(Y + 1 + a2, kk);
            if (as_printed)
                r *= p;
            else
                r /= p;
        }
    // vanishing factors are linear forms divided by t3
    r.v *= rpow(s.t3, -r.zero_order);
    return r;
}

namespace {

LaurentPoly columns_plus(const Partition& mu, const std::vector<int>& k) {
    LaurentPoly x;
    auto cs = cells(mu);
    for (std::size_t n = 0; n < cs.size(); ++n) x.add_term({cs[n].i, cs[n].j, k[n]}, 1);
    return x;
}

EquivariantCharacter dt_q_from_columns(const Partition& mu, const LaurentPoly& x) {
    return EquivariantCharacter(leg_char(mu) - x, {Mono{0, 0, 1}});
}

}  // namespace

EquivariantCharacter measure_ratio_difference(const Partition& mu, const std::vector<int>& k, const Convention& conv) {
    LaurentPoly x = columns_plus(mu, k);
    EquivariantCharacter vpt = pt_vertex_from_columns(mu, x);
    EquivariantCharacter vdt = dt_vertex_from_q(dt_q_from_columns(mu, x), {}, conv.dt_dual_denominator);
    return vpt - vdt;
}

Tracked measure_ratio_exp(const Partition& mu, const std::vector<int>& k, const ParamSample& s,
                          const Convention& conv) {
    return exp_pleth_tracked(reduce_char(measure_ratio_difference(mu, k, conv)), s);
}

EquivariantCharacter measure_ratio_difference_formula(const Partition& mu, const std::vector<int>& k, int cross) {
    const Mono Tinv{-1, -1, -1};
    LaurentPoly x = columns_plus(mu, k);
    EquivariantCharacter q = dt_q_from_columns(mu, x);
    EquivariantCharacter qb = q.bar();
    EquivariantCharacter qe(leg_char(mu));
    EquivariantCharacter qeb(leg_char(mu).bar());
    EquivariantCharacter first = q - EquivariantCharacter(qb.num.shifted(Tinv), qb.den);
    first.num *= Rational(-2);
    EquivariantCharacter t3c(LaurentPoly::mono({0, 0, 1}));
    EquivariantCharacter cr = qe * qb - t3c * qeb * q;
    LaurentPoly p2 = (LaurentPoly(1) - LaurentPoly::mono({1, 0, 0})) * (LaurentPoly(1) - LaurentPoly::mono({0, 1, 0}));
    cr.num = (cr.num * p2).shifted(Tinv) * Rational(cross);
    return first + cr;
}

}  // namespace vf
