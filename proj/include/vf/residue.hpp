#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vf/characters.hpp"
#include "vf/exactalg.hpp"
#include "vf/partitions.hpp"

namespace vf {

// ------------------------------------------------ expansion at infinity

// Building block of an integrand in z_0..z_{n-1} (region |z_0| > |z_1| > ...).
struct RationalFactor {
    enum Kind { Linear, Difference } kind = Linear;
    int i = 0, j = -1;   // Linear: z_i - c ; Difference: z_i - z_j - c with i < j
    Rational c = 0;
    int exponent = 1;    // may be negative
};

// Multivariate Laurent polynomial in z, expanded in the nested region.
class NestedLaurentSeries {
public:
    using Key = std::vector<int>;
    explicit NestedLaurentSeries(int n) : n_(n), floor_(n, 0) {}
    static NestedLaurentSeries monomial(int n, const Key& alpha, const Rational& c = 1);

    int nvars() const { return n_; }
    const std::map<Key, Rational>& terms() const { return t_; }
    void add(const Key& k, const Rational& c);

    // Multiply by a factor; negative powers are expanded to depth `window`
    // and terms that can no longer reach z^0 are dropped.
    void multiply(const RationalFactor& f, int window);
    Rational constant_term() const;
    Rational coefficient(const Key& k) const;
    // Lower bounds on the prefix sums kept by pruning (default 0), for
    // extracting several coefficients from one expansion.
    void set_floor(Key floor) { floor_ = std::move(floor); }

private:
    bool viable(const Key& k) const;
    int n_;
    Key floor_;
    std::map<Key, Rational> t_;
};

// Coefficient of z^0 of z^alpha * prod factors, checked against window + 2.
Rational iterated_residue(const std::vector<RationalFactor>& factors, const std::vector<int>& alpha, int n,
                          int window = -1);
// Same for several exponent vectors, sharing one expansion of the factors.
std::map<std::vector<int>, Rational> iterated_residues(const std::vector<RationalFactor>& factors,
                                                       const std::vector<std::vector<int>>& alphas, int n);

// omega(z_i - z_j) = x (x - a - b) / ((x - a)(x - b)) with (a,b) = (w1,w2)
std::vector<RationalFactor> omega_kernel(int n, const Rational& w1, const Rational& w2);

// ------------------------------------------------ residues at content poles

// Constant m + al1 a1 + al2 a2 in units of the third parameter of its block.
using WConst = std::array<int, 3>;  // (m, al1, al2)

struct Form {
    int i = 0, j = -1;  // z_i - z_j - c, j = -1 for z_i - c
    WConst c{0, 0, 0};
    auto operator<=>(const Form&) const = default;
};

struct ResTerm {
    Rational coef;
    std::map<Form, int> facs;
};

struct BlockParams {
    Rational a1, a2;
    Rational value(const WConst& c) const { return c[0] + c[1] * a1 + c[2] * a2; }
};

class ContentResidue {
public:
    // block[i] selects the parameters used for forms of variable z_i
    ContentResidue(int n, std::vector<int> block, std::vector<BlockParams> params)
        : n_(n), block_(std::move(block)), params_(std::move(params)) {}
    // Iterated residues at content-type poles, innermost variable first.
    Rational evaluate(std::vector<ResTerm> terms) const;

private:
    std::vector<ResTerm> residue_var(const std::vector<ResTerm>& terms, int k) const;
    int n_;
    std::vector<int> block_;
    std::vector<BlockParams> params_;
};

// Multiplies sgn*(z_i - z_j) + c pochhammer block [.]_d^e into a term (j = -1 for sgn*z_i + c).
void add_pochhammer(ResTerm& t, int i, int j, int sgn, const WConst& c, long d, int e);
// Integrand of the one-leg PT residue vertex for a fixed k (no polynomial part),
// variables offset..offset+n-1.
ResTerm mainpt_kernel(const std::vector<int>& k, int offset = 0);

// ------------------------------------------------ formulas

// Polynomial in Z_i = t3 z_i (t-units) tagged by descendent exponents.
struct PolyTerm {
    DescSeries::Key u;
    std::vector<int> alpha;
    Rational c;
};

// Localization side: sum_{|lambda|=n} prod_l prod_cells (1 - u_l c)/e_lambda.
DescSeries egl_localization(int n, const std::vector<int>& uorders, int total_cap, const ParamSample& s,
                            const Convention& conv);
// Residue side at infinity.
DescSeries egl_residue(int n, const std::vector<int>& uorders, int total_cap, const ParamSample& s,
                       const Convention& conv);

// Symmetric polynomial inserted at the vertex, in variables Z.
struct SymPoly {
    std::map<std::vector<int>, Rational> terms;  // exponent vector -> coefficient
};

SymPoly chern_monomial_poly(const Partition& nu, int n);
// Empty series over the descendent variables.
DescSeries desc_shape(const std::vector<DescendentSpec>& desc, int total_cap = -1);

// Descendent factor prod_r sum_i e^{u_r(Z_i + sigma k_i t3)} (1 - e^{u_r t1})(1 - e^{u_r t2}).
std::vector<PolyTerm> pt_descendent_poly(const std::vector<int>& k, const std::vector<DescendentSpec>& desc,
                                         const DescSeries& shape, const ParamSample& s, int sigma);

// Residue vertex for symmetric insertion P, per q-order up to N.
std::vector<DescSeries> pt_residue_vertex(int n, const SymPoly& P, int N, const std::vector<DescendentSpec>& desc,
                                          const ParamSample& s, const Convention& conv);

// Closed product for E^DT/E^PT; `as_printed` keeps the printed pair orientation.
Tracked measure_ratio_closed(const Partition& mu, const std::vector<int>& k, const ParamSample& s,
                             bool as_printed = false);
// Exp(V^PT - V^DT) on the common column parametrization.
Tracked measure_ratio_exp(const Partition& mu, const std::vector<int>& k, const ParamSample& s,
                          const Convention& conv);
// Character of V^PT - V^DT and the printed difference formula.
EquivariantCharacter measure_ratio_difference(const Partition& mu, const std::vector<int>& k, const Convention& conv);
// 2(-Q + Qbar/T) + cross (Q_e Qbar - t3 Qbar_e Q)(1-t1)(1-t2)/T, cross = +1 as printed.
EquivariantCharacter measure_ratio_difference_formula(const Partition& mu, const std::vector<int>& k, int cross);

}  // namespace vf
