#include "vf/localcurve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace vf {

std::string to_string(Theory t) { return t == Theory::PT ? "PT" : "DT"; }

Theory parse_theory(const std::string& s) {
    if (s == "PT") return Theory::PT;
    if (s == "DT") return Theory::DT;
    throw MathError("unknown theory: " + s);
}

ParamSample second_vertex_sample(const ParamSample& s, int d1, int d2, const Convention& conv) {
    ParamSample r = s.substituted(d1, d2, conv.substitution_sign);
    if (!is_generic(r, s.genericity_bound)) throw MathError("non-generic substituted sample");
    return r;
}

namespace {

// Descendents of one vertex, with their positions in the full list.
struct DescSplit {
    std::vector<DescendentSpec> at[2];
    std::vector<std::size_t> index[2];
};

DescSplit split_desc(const std::vector<DescendentSpec>& desc) {
    DescSplit r;
    for (std::size_t v = 0; v < desc.size(); ++v) {
        int p = desc[v].point;
        if (p != 0 && p != 1) throw MathError("descendent point must be 0 or 1");
        r.at[p].push_back(desc[v]);
        r.index[p].push_back(v);
    }
    return r;
}

DescSeries embed(const DescSeries& x, const std::vector<std::size_t>& index, const DescSeries& full) {
    DescSeries r = full;
    for (const auto& [k, c] : x.coeffs()) {
        DescSeries::Key key(full.vars().size(), 0);
        for (std::size_t v = 0; v < k.size(); ++v) key[index[v]] = k[v];
        if (full.admissible(key)) r.add(key, c);
    }
    return r;
}

VertexSeries embed(const VertexSeries& x, const std::vector<std::size_t>& index, const DescSeries& full) {
    VertexSeries r{x.shift, {}};
    for (const auto& c : x.coeffs) r.coeffs.push_back(embed(c, index, full));
    return r;
}

VertexSeries vertex_sum(Theory th, const Partition& lambda, int N, const std::vector<DescendentSpec>& desc,
                        const ParamSample& s, const Convention& conv) {
    return th == Theory::PT ? pt_fixed_sum(lambda, N, desc, s, conv) : bare_dt(lambda, N, desc, s, conv);
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

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

VertexSeries glue(const GlueRequest& req, const ParamSample& s, const Convention& conv) {
    ParamSample sp = second_vertex_sample(s, req.d1, req.d2, conv);
    DescSeries full = desc_shape(req.desc);
    DescSplit sp_desc = split_desc(req.desc);
    VertexSeries out{0, std::vector<DescSeries>(req.qorder + 1, full)};
    for (const auto& lam : enum_partitions(req.n)) {
        Rational edge = edge_factor(lam, req.d1, req.d2, s);
        VertexSeries a = embed(vertex_sum(req.theory, lam, req.qorder, sp_desc.at[0], s, conv), sp_desc.index[0], full);
        VertexSeries b = embed(vertex_sum(req.theory, lam, req.qorder, sp_desc.at[1], sp, conv), sp_desc.index[1], full);
        out = out + scaled(a * b, edge);
    }
    return out;
}

VertexSeries dt0_localcurve(int d1, int d2, int N, const ParamSample& s, const Convention& conv) {
    ParamSample sp = second_vertex_sample(s, d1, d2, conv);
    return bare_dt({}, N, {}, s, conv) * bare_dt({}, N, {}, sp, conv);
}

VertexSeries pt_fixed_sum_substituted(const Partition& lambda, int d1, int d2, int N, const ParamSample& s,
                                      const Convention& conv) {
    const int eps = conv.substitution_sign;
    const std::array<Mono, 3> img{Mono{1, 0, eps * d1}, Mono{0, 1, eps * d2}, Mono{0, 0, -1}};
    DescSeries shape = desc_shape({});
    VertexSeries out{0, std::vector<DescSeries>(N + 1, shape)};
    for (const auto& cfg : enum_rpp(lambda, N)) {
        LaurentPoly v = vertex_char_pt(cfg, conv).subst(img);
        out.coeffs[cfg.size()] += DescSeries::constant(exp_pleth(-v, s), shape);
    }
    return out;
}

// ------------------------------------------------------------ interpolation

namespace {

std::vector<Rational> contents_of(const Partition& mu, const ParamSample& s) {
    std::vector<Rational> x;
    for (const auto& c : cells(mu)) x.push_back(content(c, s));
    return x;
}

// distinct arrangements of nu padded with zeros to length n
std::vector<std::vector<int>> arrangements(const Partition& nu, int n) {
    std::vector<int> e(n, 0);
    for (std::size_t i = 0; i < nu.size(); ++i) e[i] = nu[i];
    std::sort(e.begin(), e.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace

Rational monomial_symmetric_value(const Partition& nu, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    if (static_cast<int>(nu.size()) > n) return 0;
    Rational r = 0;
    for (const auto& e : arrangements(nu, n)) {
        Rational m = 1;
        for (int i = 0; i < n; ++i) m *= rpow(x[i], e[i]);
        r += m;
    }
    return r;
}

SymPoly InterpPoly::expanded(int n) const {
    SymPoly p;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coeffs[b] == 0) continue;
        for (const auto& e : arrangements(basis[b], n)) p.terms[e] += coeffs[b];
    }
    return p;
}

InterpPoly interp_poly(const Partition& lambda, const ParamSample& s, const Convention& conv) {
    const int n = size(lambda);
    InterpPoly J{lambda, {}, {}};
    for (const auto& nu : enum_partitions_upto(n))
        if (static_cast<int>(nu.size()) <= n) J.basis.push_back(nu);
    const auto points = enum_partitions(n);
    const std::size_t R = points.size(), C = J.basis.size();
    // augmented matrix rows: points, columns: basis then right-hand side
    std::vector<std::vector<Rational>> A(R, std::vector<Rational>(C + 1, Rational(0)));
    for (std::size_t r = 0; r < R; ++r) {
        auto x = contents_of(points[r], s);
        for (std::size_t c = 0; c < C; ++c) A[r][c] = monomial_symmetric_value(J.basis[c], x);
        A[r][C] = points[r] == lambda ? euler_hilb(points[r], s, conv) : Rational(0);
    }
    // Gauss-Jordan, pivot columns taken in basis order
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < C && row < R; ++c) {
        std::size_t p = row;
        while (p < R && A[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(A[p], A[row]);
        Rational inv = 1 / A[row][c];
        for (auto& v : A[row]) v *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || A[r][c] == 0) continue;
            Rational f = A[r][c];
            for (std::size_t k = c; k <= C; ++k) A[r][k] -= f * A[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    if (row < R) throw MathError("singular interpolation system");
    J.coeffs.assign(C, Rational(0));
    for (std::size_t r = 0; r < R; ++r) J.coeffs[pivot_col[r]] = A[r][C];
    for (const auto& mu : points) {
        Rational want = mu == lambda ? euler_hilb(mu, s, conv) : Rational(0);
        if (evaluate(J, mu, s) != want) throw MathError("singular interpolation system");
    }
    return J;
}

Rational evaluate(const InterpPoly& J, const Partition& mu, const ParamSample& s) {
    auto x = contents_of(mu, s);
    Rational r = 0;
    for (std::size_t b = 0; b < J.basis.size(); ++b)
        if (J.coeffs[b] != 0) r += J.coeffs[b] * monomial_symmetric_value(J.basis[b], x);
    return r;
}

// ------------------------------------------------------------ residue form

VertexSeries ptint_residue(const GlueRequest& req, const ParamSample& s, const Convention& conv) {
    if (req.theory != Theory::PT) throw MathError("residue assembly is PT only");
    const int n = req.n, N = req.qorder;
    ParamSample sp = second_vertex_sample(s, req.d1, req.d2, conv);
    DescSeries full = desc_shape(req.desc);
    DescSplit sd = split_desc(req.desc);
    const ParamSample* samp[2] = {&s, &sp};

    // edge kernel sum_lambda J(Z') Exp(-E^d) J(Z''), variables Z'_0..Z'_{n-1}, Z''_0..Z''_{n-1}
    std::map<std::vector<int>, Rational> kernel;
    for (const auto& lam : enum_partitions(n)) {
        Rational edge = edge_factor(lam, req.d1, req.d2, s);
        SymPoly a = interp_poly(lam, s, conv).expanded(n), b = interp_poly(lam, sp, conv).expanded(n);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(ea);
                e.insert(e.end(), eb.begin(), eb.end());
                kernel[e] += ca * cb * edge;
            }
    }

    std::vector<int> block(2 * n, 0);
    std::fill(block.begin() + n, block.end(), 1);
    ContentResidue engine(2 * n, block, {BlockParams{s.a1(), s.a2()}, BlockParams{sp.a1(), sp.a2()}});
    Rational norm = 1;
    for (const ParamSample* p : samp) norm *= rpow(p->t1 * p->t2, static_cast<long>(conv.hilb_norm) * n) / factorial(n);

    VertexSeries out{0, std::vector<DescSeries>(N + 1, full)};
    for_each_kvec(n, N, [&](const std::vector<int>& k0) {
        int K0 = std::accumulate(k0.begin(), k0.end(), 0);
        for_each_kvec(n, N - K0, [&](const std::vector<int>& k1) {
            int K = K0 + std::accumulate(k1.begin(), k1.end(), 0);
            ResTerm ker = mainpt_kernel(k0, 0), ker1 = mainpt_kernel(k1, n);
            ker.coef *= ker1.coef;
            for (const auto& [f, e] : ker1.facs) ker.facs[f] += e;
            // descendent polynomials per vertex, then combined
            std::vector<PolyTerm> d0 = pt_descendent_poly(k0, sd.at[0], desc_shape(sd.at[0]), s, conv.pt_column_sign);
            std::vector<PolyTerm> d1 = pt_descendent_poly(k1, sd.at[1], desc_shape(sd.at[1]), sp, conv.pt_column_sign);
            std::map<std::pair<DescSeries::Key, std::vector<int>>, Rational> poly;
            for (const auto& x : d0)
                for (const auto& y : d1) {
                    DescSeries::Key u(full.vars().size(), 0);
                    for (std::size_t v = 0; v < x.u.size(); ++v) u[sd.index[0][v]] = x.u[v];
                    for (std::size_t v = 0; v < y.u.size(); ++v) u[sd.index[1][v]] = y.u[v];
                    if (!full.admissible(u)) continue;
                    for (const auto& [e, c] : kernel) {
                        std::vector<int> al(2 * n);
                        for (int i = 0; i < n; ++i) {
                            al[i] = e[i] + x.alpha[i];
                            al[n + i] = e[n + i] + y.alpha[i];
                        }
                        poly[{u, al}] += x.c * y.c * c;
                    }
                }
            std::map<std::vector<int>, Rational> cache;
            for (const auto& [key, c] : poly) {
                if (c == 0) continue;
                const auto& al = key.second;
                auto it = cache.find(al);
                if (it == cache.end()) {
                    ResTerm t = ker;
                    Rational unit = 1;
                    for (int i = 0; i < 2 * n; ++i) {
                        if (al[i] == 0) continue;
                        t.facs[Form{i, -1, {0, 0, 0}}] += al[i];
                        unit *= rpow(samp[block[i]]->t3, al[i]);
                    }
                    std::erase_if(t.facs, [](const auto& fe) { return fe.second == 0; });
                    it = cache.emplace(al, engine.evaluate({t}) * unit).first;
                }
                out.coeffs[K].add(key.first, c * it->second * norm);
            }
        });
    });
    return out;
}

// ------------------------------------------------------------ factorization

SimpleCheck simple_check(int d1, int d2, int N, const ParamSample& s, const Convention& conv) {
    SimpleCheck r;
    GlueRequest req{d1, d2, 1, {}, Theory::DT, N};
    r.dt = glue(req, s, conv);
    req.theory = Theory::PT;
    r.pt = glue(req, s, conv);
    r.dt0 = dt0_localcurve(d1, d2, N, s, conv);
    r.rhs = r.pt * r.dt0;
    QSeries a = r.dt.scalar(), b = r.rhs.scalar();
    auto matches = [&](int h) {
        for (int i = 0; i <= N; ++i) {
            int j = i - h;
            if (j > N) continue;
            Rational want = j >= 0 ? b[j] : Rational(0);
            if (a[i] != want) return false;
        }
        return true;
    };
    std::vector<int> order{0};
    for (int h = 1; h <= N; ++h) {
        order.push_back(h);
        order.push_back(-h);
    }
    for (int h : order)
        if (matches(h)) {
            r.shift = h;
            break;
        }
    int h = r.shift.value_or(0);
    r.residual = QSeries(N, 0);
    for (int i = 0; i <= N; ++i) {
        int j = i - h;
        r.residual[i] = a[i] - ((j >= 0 && j <= N) ? b[j] : Rational(0));
    }
    r.pass = r.shift.has_value();
    return r;
}

bool parameter_independent(const std::vector<QSeries>& runs) {
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (!(runs[i] == runs[0])) return false;
    return true;
}

}  // namespace vf
