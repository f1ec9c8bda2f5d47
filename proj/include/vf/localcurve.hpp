#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vf/vertex.hpp"

namespace vf {

enum class Theory { PT, DT };

std::string to_string(Theory t);
Theory parse_theory(const std::string& s);

struct GlueRequest {
    int d1 = 0, d2 = 0;
    int n = 1;                           // leg size
    std::vector<DescendentSpec> desc;    // point 0 or 1 per entry
    Theory theory = Theory::PT;
    int qorder = 2;
};

// Parameters at the second vertex, rejected when not generic.
ParamSample second_vertex_sample(const ParamSample& s, int d1, int d2, const Convention& conv);

// sum_{|lambda|=n} W(desc_0 | lambda; t) Exp(-E^d(lambda)) W(desc_inf | lambda; s), fixed-point basis.
VertexSeries glue(const GlueRequest& req, const ParamSample& s, const Convention& conv);

// bare_dt(empty; t) * bare_dt(empty; s)
VertexSeries dt0_localcurve(int d1, int d2, int N, const ParamSample& s, const Convention& conv);

// Second vertex series obtained by substituting the characters instead of the sample.
VertexSeries pt_fixed_sum_substituted(const Partition& lambda, int d1, int d2, int N, const ParamSample& s,
                                      const Convention& conv);

// Symmetric polynomial in Z (t-units) over the monomial symmetric basis.
struct InterpPoly {
    Partition lambda;
    std::vector<Partition> basis;        // monomial symmetric m_nu, |nu| <= n
    std::vector<Rational> coeffs;
    SymPoly expanded(int n) const;
};

Rational monomial_symmetric_value(const Partition& nu, const std::vector<Rational>& x);
// J(contents(mu)) = delta_{lambda mu} e_mu; throws "singular interpolation system".
InterpPoly interp_poly(const Partition& lambda, const ParamSample& s, const Convention& conv);
Rational evaluate(const InterpPoly& J, const Partition& mu, const ParamSample& s);

// Two-block iterated residue with kernel sum_lambda J_lambda(z') Exp(-E^d(lambda)) J_lambda(z'').
VertexSeries ptint_residue(const GlueRequest& req, const ParamSample& s, const Convention& conv);

struct SimpleCheck {
    VertexSeries dt, pt, dt0, rhs;
    QSeries residual;            // dt - q^shift pt dt0 at the best shift (0 if none)
    std::optional<int> shift;    // global q-shift making both sides agree
    bool pass = false;
};

// Z_DT(glued) against Z_PT(glued) Z_DT,0(glued), degree (d1,d2), n = 1, no descendents.
SimpleCheck simple_check(int d1, int d2, int N, const ParamSample& s, const Convention& conv);

// Agreement of glued PT coefficients over several samples.
bool parameter_independent(const std::vector<QSeries>& runs);

}  // namespace vf
