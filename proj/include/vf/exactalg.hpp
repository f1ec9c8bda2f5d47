#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vf {

using Rational = mpq_class;
using Integer = mpz_class;

// Raised on any mathematically meaningful failure (non-generic input, bad
// reduction, ...). The message is the stable error tag.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);
Rational rpow(const Rational& x, long e);

// Exponent triple (a,b,c) of t1^a t2^b t3^c.
using Mono = std::array<int, 3>;

inline Mono operator+(const Mono& a, const Mono& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Mono operator-(const Mono& a, const Mono& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Mono operator-(const Mono& a) { return {-a[0], -a[1], -a[2]}; }

class LaurentPoly {
public:
    using Terms = std::map<Mono, Rational>;  // lex order on (a,b,c)

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    static LaurentPoly mono(const Mono& m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Mono& m) const;
    void add_term(const Mono& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly shifted(const Mono& m) const;  // multiply by t^m
    LaurentPoly bar() const;                   // t_i -> 1/t_i
    // Ring map t_i -> t^{img[i]}.
    LaurentPoly subst(const std::array<Mono, 3>& img) const;
    LaurentPoly swap12() const;
    bool integral() const;
    Rational eval(const Rational& t1, const Rational& t2, const Rational& t3) const;
    std::string str() const;

private:
    Terms terms_;
};

// num / prod (1 - t^d), d in den
struct EquivariantCharacter {
    LaurentPoly num;
    std::vector<Mono> den;

    EquivariantCharacter() = default;
    EquivariantCharacter(LaurentPoly n, std::vector<Mono> d = {}) : num(std::move(n)), den(std::move(d)) {}

    EquivariantCharacter bar() const;
    friend EquivariantCharacter operator+(const EquivariantCharacter& a, const EquivariantCharacter& b);
    friend EquivariantCharacter operator-(const EquivariantCharacter& a, const EquivariantCharacter& b);
    friend EquivariantCharacter operator*(const EquivariantCharacter& a, const EquivariantCharacter& b);
    EquivariantCharacter operator-() const { return {-num, den}; }
    // cross-multiplication equality
    bool equals(const EquivariantCharacter& o) const;
};

// Exact quotient num / prod(1 - t^d); throws MathError("non-polynomial character").
LaurentPoly reduce_char(const EquivariantCharacter& c);
// Exact division by (1 - t^d), nullopt on remainder.
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const Mono& d);

struct ParamSample {
    Rational t1, t2, t3;
    int genericity_bound = 0;

    Rational weight(const Mono& m) const { return m[0] * t1 + m[1] * t2 + m[2] * t3; }
    Rational a1() const { return t1 / t3; }
    Rational a2() const { return t2 / t3; }
    // Parameters at the other end of a degree (d1,d2) local curve:
    // (t1 + eps d1 t3, t2 + eps d2 t3, -t3) with eps = substitution_sign.
    ParamSample substituted(int d1, int d2, int substitution_sign) const;
    bool operator==(const ParamSample& o) const { return t1 == o.t1 && t2 == o.t2 && t3 == o.t3; }
};

// No relation i t1 + j t2 + k t3 = 0 with |i|,|j|,|k| <= L, not all zero.
bool is_generic(const ParamSample& s, int L);
// Same, ignoring relations implied by t1 + t2 = c t3.
bool is_generic_on_line(const ParamSample& s, int L, int c);

ParamSample sample_random(std::uint64_t seed, int L, std::optional<int> line_c = std::nullopt);

// Value with a tracked power of an infinitesimal: v * eps^zero_order.
struct Tracked {
    Rational v = 1;
    int zero_order = 0;
    Tracked& operator*=(const Tracked& o) { v *= o.v; zero_order += o.zero_order; return *this; }
    Tracked& operator/=(const Tracked& o) { v /= o.v; zero_order -= o.zero_order; return *this; }
    friend Tracked operator*(Tracked a, const Tracked& b) { return a *= b; }
    friend Tracked operator/(Tracked a, const Tracked& b) { return a /= b; }
    bool operator==(const Tracked& o) const { return v == o.v && zero_order == o.zero_order; }
    static Tracked of(const Rational& x) { return x == 0 ? Tracked{1, 1} : Tracked{x, 0}; }
};

Rational pochhammer(const Rational& x, long n);
Tracked pochhammer_tracked(const Rational& x, long n);

// Exp(sum a_m t^m) = prod (m . t)^{a_m}
Rational exp_pleth(const LaurentPoly& p, const ParamSample& s);
// Zero weights are tracked instead of rejected.
Tracked exp_pleth_tracked(const LaurentPoly& p, const ParamSample& s);

// Truncated power series in q, times q^shift.
struct QSeries {
    int order = 0;
    int shift = 0;
    std::vector<Rational> coeffs;

    QSeries() = default;
    explicit QSeries(int n, int sh = 0) : order(n), shift(sh), coeffs(n + 1, Rational(0)) {}
    Rational& operator[](int i) { return coeffs.at(i); }
    const Rational& operator[](int i) const { return coeffs.at(i); }
    QSeries truncated(int n) const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const Rational& c);
    bool operator==(const QSeries& o) const;
};

// Truncated multivariate power series in named variables. Orders are
// per variable, an optional total degree cap applies on top.
class DescSeries {
public:
    using Key = std::vector<int>;

    DescSeries() = default;
    DescSeries(std::vector<std::string> vars, std::vector<int> orders, int total_cap = -1);
    static DescSeries constant(const Rational& c, const DescSeries& shape);
    // sum_m coeff[m] var^m
    static DescSeries univariate(const DescSeries& shape, std::size_t var, const std::vector<Rational>& coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& orders() const { return orders_; }
    int total_cap() const { return cap_; }
    const std::map<Key, Rational>& coeffs() const { return c_; }
    Rational coeff(const Key& k) const;
    void add(const Key& k, const Rational& v);
    bool admissible(const Key& k) const;
    bool is_zero() const { return c_.empty(); }

    DescSeries& operator+=(const DescSeries& o);
    DescSeries& operator*=(const Rational& c);
    friend DescSeries operator+(DescSeries a, const DescSeries& b) { return a += b; }
    friend DescSeries operator*(const DescSeries& a, const DescSeries& b);
    friend DescSeries operator*(DescSeries a, const Rational& c) { return a *= c; }
    bool operator==(const DescSeries& o) const { return vars_ == o.vars_ && c_ == o.c_; }

private:
    std::vector<std::string> vars_;
    std::vector<int> orders_;
    int cap_ = -1;
    std::map<Key, Rational> c_;
};

// Coefficients of exp(x u) up to u^n.
std::vector<Rational> exp_coeffs(const Rational& x, int n);
// Product of truncated univariate series.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int n);

}  // namespace vf
