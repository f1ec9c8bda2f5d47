#include "vf/exactalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace vf {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw MathError("malformed rational: " + s);
    if (r.get_den() == 0) throw MathError("malformed rational: " + s);
    r.canonicalize();
    return r;
}

Rational rpow(const Rational& x, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (x == 0) throw MathError("division by zero");
        return 1 / rpow(x, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

LaurentPoly LaurentPoly::mono(const Mono& m, const Rational& c) {
    LaurentPoly p;
    p.add_term(m, c);
    return p;
}

Rational LaurentPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Mono& s) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m + s, c);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(-m, c);
    return r;
}

LaurentPoly LaurentPoly::subst(const std::array<Mono, 3>& img) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        Mono e{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) e[k] += m[i] * img[i][k];
        r.add_term(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::swap12() const {
    return subst({Mono{0, 1, 0}, Mono{1, 0, 0}, Mono{0, 0, 1}});
}

bool LaurentPoly::integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Rational LaurentPoly::eval(const Rational& t1, const Rational& t2, const Rational& t3) const {
    Rational r = 0;
    for (const auto& [m, c] : terms_) r += c * rpow(t1, m[0]) * rpow(t2, m[1]) * rpow(t3, m[2]);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        const char* names[3] = {"t1", "t2", "t3"};
        for (int i = 0; i < 3; ++i)
            if (m[i] != 0) os << "*" << names[i] << "^" << m[i];
    }
    return os.str();
}

// ------------------------------------------------------ EquivariantCharacter

namespace {

// multiply p by prod (1 - t^d)
LaurentPoly times_factors(LaurentPoly p, const std::vector<Mono>& ds) {
    for (const auto& d : ds) p = p - p.shifted(d);
    return p;
}

// multiset difference a \ b
std::vector<Mono> mdiff(std::vector<Mono> a, const std::vector<Mono>& b) {
    for (const auto& x : b) {
        auto it = std::find(a.begin(), a.end(), x);
        if (it != a.end()) a.erase(it);
    }
    return a;
}

}  // namespace

EquivariantCharacter EquivariantCharacter::bar() const {
    // 1/(1 - t^-d) = -t^d / (1 - t^d)
    LaurentPoly n = num.bar();
    for (const auto& d : den) n = -n.shifted(d);
    return {n, den};
}

EquivariantCharacter operator+(const EquivariantCharacter& a, const EquivariantCharacter& b) {
    auto extra_b = mdiff(a.den, b.den);  // factors a has that b lacks
    auto extra_a = mdiff(b.den, a.den);
    std::vector<Mono> den = a.den;
    den.insert(den.end(), extra_a.begin(), extra_a.end());
    return {times_factors(a.num, extra_a) + times_factors(b.num, extra_b), den};
}

EquivariantCharacter operator-(const EquivariantCharacter& a, const EquivariantCharacter& b) { return a + (-b); }

EquivariantCharacter operator*(const EquivariantCharacter& a, const EquivariantCharacter& b) {
    std::vector<Mono> den = a.den;
    den.insert(den.end(), b.den.begin(), b.den.end());
    return {a.num * b.num, den};
}

bool EquivariantCharacter::equals(const EquivariantCharacter& o) const {
    return times_factors(num, o.den) == times_factors(o.num, den);
}

std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const Mono& d) {
    if (d == Mono{0, 0, 0}) throw MathError("division by zero character (1 - 1)");
    if (p.is_zero()) return LaurentPoly{};
    const Mono zero{0, 0, 0};
    const bool d_leads = zero < d;
    const Mono lead = d_leads ? d : zero;
    const Mono trail = d_leads ? zero : d;
    const Rational lead_c = d_leads ? Rational(-1) : Rational(1);
    const Mono floor = p.terms().begin()->first - trail;  // lowest admissible quotient monomial
    LaurentPoly q, r = p;
    while (!r.is_zero()) {
        const auto& [x, cx] = *r.terms().rbegin();
        Mono qm = x - lead;
        if (qm < floor) return std::nullopt;
        Rational qc = cx / lead_c;
        q.add_term(qm, qc);
        LaurentPoly sub = LaurentPoly::mono(qm, qc);
        r -= sub - sub.shifted(d);
    }
    return q;
}

LaurentPoly reduce_char(const EquivariantCharacter& c) {
    LaurentPoly p = c.num;
    for (const auto& d : c.den) {
        auto q = divide_one_minus(p, d);
        if (!q) throw MathError("non-polynomial character");
        p = std::move(*q);
    }
    return p;
}

// ----------------------------------------------------------------- samples

ParamSample ParamSample::substituted(int d1, int d2, int sign) const {
    ParamSample s;
    s.t1 = t1 + sign * d1 * t3;
    s.t2 = t2 + sign * d2 * t3;
    s.t3 = -t3;
    s.genericity_bound = genericity_bound;
    return s;
}

namespace {

// integer representatives N_i proportional to t_i
std::array<__int128, 3> integer_ray(const ParamSample& s) {
    Integer D = s.t1.get_den() * s.t2.get_den() * s.t3.get_den();
    std::array<Rational, 3> t{s.t1, s.t2, s.t3};
    std::array<__int128, 3> out{};
    for (int i = 0; i < 3; ++i) {
        Rational v = t[i] * D;
        Integer n = v.get_num();
        if (!n.fits_slong_p()) {
            // fall back to a decimal parse for very large heights
            out[i] = 0;
            for (char ch : n.get_str()) {
                if (ch == '-') continue;
                out[i] = out[i] * 10 + (ch - '0');
            }
            if (n < 0) out[i] = -out[i];
        } else {
            out[i] = n.get_si();
        }
    }
    return out;
}

}  // namespace

bool is_generic(const ParamSample& s, int L) {
    if (s.t3 == 0 || s.t1 == 0 || s.t2 == 0) return false;
    auto n = integer_ray(s);
    for (int i = -L; i <= L; ++i)
        for (int j = -L; j <= L; ++j)
            for (int k = -L; k <= L; ++k) {
                if (i == 0 && j == 0 && k == 0) continue;
                if (i * n[0] + j * n[1] + k * n[2] == 0) return false;
            }
    return true;
}

bool is_generic_on_line(const ParamSample& s, int L, int c) {
    // with t3 = (t1 + t2)/c: c(i t1 + j t2 + k t3) = (c i + k) t1 + (c j + k) t2
    if (s.t3 == 0 || s.t1 == 0 || s.t2 == 0) return false;
    auto n = integer_ray(s);
    for (int i = -L; i <= L; ++i)
        for (int j = -L; j <= L; ++j)
            for (int k = -L; k <= L; ++k) {
                __int128 x = c * i + k, y = c * j + k;
                if (x == 0 && y == 0) continue;
                if (x * n[0] + y * n[1] == 0) return false;
            }
    return true;
}

ParamSample sample_random(std::uint64_t seed, int L, std::optional<int> line_c) {
    if (L < 1) throw MathError("genericity bound must be positive");
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x5851F42D4C957F2DULL);
    std::uniform_int_distribution<long> num(1000, 9999), sgn(0, 1);
    auto draw = [&]() {
        long p = num(rng), q = num(rng);
        Rational r(p, q);
        r.canonicalize();
        return sgn(rng) ? Rational(-r) : r;
    };
    constexpr int budget = 1000;
    for (int attempt = 0; attempt < budget; ++attempt) {
        ParamSample s;
        s.t1 = draw();
        s.t2 = draw();
        s.genericity_bound = L;
        if (line_c) {
            if (*line_c == 0) throw MathError("line constant must be nonzero");
            s.t3 = (s.t1 + s.t2) / *line_c;
            if (is_generic_on_line(s, L, *line_c)) return s;
        } else {
            s.t3 = draw();
            if (is_generic(s, L)) return s;
        }
    }
    throw MathError("sampling exhausted");
}

// ------------------------------------------------------- Pochhammer and Exp

Rational pochhammer(const Rational& x, long n) {
    Rational r = 1;
    if (n >= 0) {
        for (long m = 0; m < n; ++m) r *= x + m;
        return r;
    }
    for (long m = 1; m <= -n; ++m) {
        Rational f = x - m;
        if (f == 0) throw MathError("pole at non-generic input");
        r *= f;
    }
    return 1 / r;
}

Tracked pochhammer_tracked(const Rational& x, long n) {
    Tracked r;
    if (n >= 0) {
        for (long m = 0; m < n; ++m) r *= Tracked::of(x + m);
        return r;
    }
    for (long m = 1; m <= -n; ++m) r /= Tracked::of(x - m);
    return r;
}

namespace {

void check_exp_input(const Mono& m, const Rational& c, const ParamSample& s) {
    if (c.get_den() != 1) throw MathError("non-integer plethystic coefficient");
    if (m == Mono{0, 0, 0}) throw MathError("zero-weight monomial");
    int L = s.genericity_bound;
    if (L > 0 && (std::abs(m[0]) > L || std::abs(m[1]) > L || std::abs(m[2]) > L))
        throw MathError("sample genericity insufficient");
}

}  // namespace

Rational exp_pleth(const LaurentPoly& p, const ParamSample& s) {
    Rational r = 1;
    for (const auto& [m, c] : p.terms()) {
        check_exp_input(m, c, s);
        Rational w = s.weight(m);
        if (w == 0) throw MathError("sample genericity insufficient");
        r *= rpow(w, c.get_num().get_si());
    }
    return r;
}

Tracked exp_pleth_tracked(const LaurentPoly& p, const ParamSample& s) {
    Tracked r;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw MathError("non-integer plethystic coefficient");
        long e = c.get_num().get_si();
        Rational w = s.weight(m);
        if (w == 0)
            r.zero_order += static_cast<int>(e);
        else
            r.v *= rpow(w, e);
    }
    return r;
}

// ------------------------------------------------------------------ QSeries

QSeries QSeries::truncated(int n) const {
    QSeries r(n, shift);
    for (int i = 0; i <= std::min(n, order); ++i) r.coeffs[i] = coeffs[i];
    r.order = std::min(n, order);
    r.coeffs.resize(r.order + 1);
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.shift != b.shift) throw MathError("q-shift mismatch");
    QSeries r(std::min(a.order, b.order), a.shift);
    for (int i = 0; i <= r.order; ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order, b.order), a.shift + b.shift);
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs) x *= c;
    return *this;
}

bool QSeries::operator==(const QSeries& o) const {
    return order == o.order && shift == o.shift && coeffs == o.coeffs;
}

// --------------------------------------------------------------- DescSeries

DescSeries::DescSeries(std::vector<std::string> vars, std::vector<int> orders, int total_cap)
    : vars_(std::move(vars)), orders_(std::move(orders)), cap_(total_cap) {
    if (vars_.size() != orders_.size()) throw MathError("descendent variables and orders differ in length");
    for (int o : orders_)
        if (o < 0) throw MathError("negative truncation order");
}

DescSeries DescSeries::constant(const Rational& c, const DescSeries& shape) {
    DescSeries r(shape.vars_, shape.orders_, shape.cap_);
    r.add(Key(shape.vars_.size(), 0), c);
    return r;
}

DescSeries DescSeries::univariate(const DescSeries& shape, std::size_t var, const std::vector<Rational>& coeff) {
    DescSeries r(shape.vars_, shape.orders_, shape.cap_);
    for (std::size_t m = 0; m < coeff.size(); ++m) {
        Key k(shape.vars_.size(), 0);
        k[var] = static_cast<int>(m);
        if (r.admissible(k)) r.add(k, coeff[m]);
    }
    return r;
}

bool DescSeries::admissible(const Key& k) const {
    int tot = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] > orders_[i]) return false;
        tot += k[i];
    }
    return cap_ < 0 || tot <= cap_;
}

Rational DescSeries::coeff(const Key& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
}

void DescSeries::add(const Key& k, const Rational& v) {
    if (v == 0 || !admissible(k)) return;
    auto [it, fresh] = c_.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

DescSeries& DescSeries::operator+=(const DescSeries& o) {
    if (vars_.empty() && orders_.empty() && c_.empty() && !o.vars_.empty()) {
        vars_ = o.vars_;
        orders_ = o.orders_;
        cap_ = o.cap_;
    }
    if (o.vars_ != vars_) throw MathError("descendent variable mismatch");
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
}

DescSeries& DescSeries::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= c;
    return *this;
}

DescSeries operator*(const DescSeries& a, const DescSeries& b) {
    if (a.vars_ != b.vars_) throw MathError("descendent variable mismatch");
    DescSeries r(a.vars_, a.orders_, a.cap_);
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) {
            DescSeries::Key k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            r.add(k, va * vb);
        }
    return r;
}

std::vector<Rational> exp_coeffs(const Rational& x, int n) {
    std::vector<Rational> r(n + 1);
    r[0] = 1;
    for (int m = 1; m <= n; ++m) r[m] = r[m - 1] * x / m;
    return r;
}

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
    std::vector<Rational> r(n + 1, Rational(0));
    for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace vf
