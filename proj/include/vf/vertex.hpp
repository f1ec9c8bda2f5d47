#pragma once

#include <string>
#include <vector>

#include "vf/characters.hpp"
#include "vf/residue.hpp"

namespace vf {

// q-series with descendent-series coefficients, times q^shift.
struct VertexSeries {
    int shift = 0;
    std::vector<DescSeries> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    QSeries scalar() const;  // coefficient of u^0
    bool operator==(const VertexSeries& o) const { return shift == o.shift && coeffs == o.coeffs; }
};

VertexSeries operator*(const VertexSeries& a, const VertexSeries& b);
VertexSeries operator+(const VertexSeries& a, const VertexSeries& b);
VertexSeries scaled(VertexSeries a, const Rational& c);

// prod_i e_{nu_i}(contents of mu)
Rational chern_monomial_value(const Partition& nu, const Partition& mu, const ParamSample& s);

// Descendent value of a fixed point as a series in the descendent variables.
DescSeries pt_descendents(const RppConfig& cfg, const std::vector<DescendentSpec>& desc, const DescSeries& shape,
                          const ParamSample& s, const Convention& conv);
DescSeries dt_descendents(const LeggedPlanePartition& pp, const std::vector<DescendentSpec>& desc,
                          const DescSeries& shape, const ParamSample& s);

// sum over PT fixed points on mu of q^{|k|} E_pi prod ch (no 1/e_mu)
VertexSeries pt_fixed_sum(const Partition& mu, int N, const std::vector<DescendentSpec>& desc, const ParamSample& s,
                          const Convention& conv);
// fixed-point basis: pt_fixed_sum / e_mu
VertexSeries bare_pt_fixed(const Partition& mu, int N, const std::vector<DescendentSpec>& desc,
                           const ParamSample& s, const Convention& conv);
// Chern monomial basis: sum_mu c_lambda(mu)/e_mu * pt_fixed_sum(mu)
VertexSeries bare_pt_chern(const Partition& lambda, int N, const std::vector<DescendentSpec>& desc,
                           const ParamSample& s, const Convention& conv);

VertexSeries bare_dt(const Partition& leg, int N, const std::vector<DescendentSpec>& desc, const ParamSample& s,
                     const Convention& conv);
// Leg-free DT configurations with first slice exactly mu.
VertexSeries dt0_slice(const Partition& mu, int N, const std::vector<DescendentSpec>& desc, const ParamSample& s,
                       const Convention& conv);

struct PolyFitReport {
    bool polynomial = false;
    int fit_degree = -1;             // minimal degree through the fit points
    std::vector<Rational> values;    // per grid point
    std::vector<Rational> predicted; // fitted polynomial on the held-out points
    std::string reading;
};

// Per-k coefficient for shape (1): expansion at infinity of the k-th summand.
Rational pt_single_cell_infinity_coeff(int k, const std::vector<int>& zpowers, const ParamSample& s);
// Fit a polynomial in k through values[0..fit_count-1], test the rest.
PolyFitReport fit_and_verify(const std::vector<Rational>& values, int fit_count);

// Polynomiality of per-k coefficients for shape (1) on t1 + t2 = c t3, one descendent of order `uorder`.
struct SpecPolyReport {
    int c = 0;
    int uorder = 0;
    std::vector<PolyFitReport> per_coefficient;  // one per descendent power, infinity reading
    PolyFitReport localization;                  // per-k fixed-point weights (informative)
    bool pass = false;
};

SpecPolyReport specialization_poly_check(int c, int uorder, int kmax, int fit_count, const ParamSample& s);

}  // namespace vf
