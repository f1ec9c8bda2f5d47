#pragma once

#include <string>
#include <vector>

#include "vf/exactalg.hpp"
#include "vf/partitions.hpp"

namespace vf {

enum class DualDen { T12, T123 };

struct Convention {
    int pt_column_sign = -1;            // PT columns t1^i t2^j t3^{sigma k} / (1 - t3)
    DualDen dt_dual_denominator = DualDen::T123;
    int euler_sign = -1;                // e_lambda = Exp(euler_sign * F_e)
    int hilb_norm = -1;                 // (t1 t2)^{gamma n} in the residue form of the Hilbert scheme integral
    int substitution_sign = -1;         // s_i = t_i + eps d_i t3 at the second vertex

    bool operator==(const Convention&) const = default;
    std::string str() const;
};

// Shipped default, fixed by the calibration suite.
Convention calibrated_convention();
// All candidates scanned by calibration.
std::vector<Convention> convention_candidates();

LaurentPoly leg_char(const Partition& lambda);
LaurentPoly fe_char(const Partition& lambda);
// F_e with t_i replaced by t_i t3^{shift_i}
LaurentPoly fe_char_shifted(const Partition& lambda, int shift1, int shift2);

Rational euler_hilb(const Partition& lambda, const ParamSample& s, const Convention& conv);
// prod over cells (t1(l+1) - t2 a)(t2(a+1) - t1 l), arm a along t2, leg l along t1
Rational euler_armleg(const Partition& lambda, const ParamSample& s);

// Vertex character from a column character X = sum t^c t3^{m_c}: F = X/(1-t3).
EquivariantCharacter pt_vertex_from_columns(const Partition& shape, const LaurentPoly& columns);
// DT vertex from Q = finite + leg/(1-t3); F_e of the leg is added.
EquivariantCharacter dt_vertex_from_q(const EquivariantCharacter& q, const Partition& leg, DualDen d);

LaurentPoly pt_columns(const RppConfig& cfg, int sigma);
LaurentPoly vertex_char_pt(const RppConfig& cfg, const Convention& conv);
LaurentPoly vertex_char_dt(const LeggedPlanePartition& pp, const Convention& conv);
// Finite part of Q_v.
LaurentPoly dt_finite_boxes(const LeggedPlanePartition& pp);

Rational pt_weight(const RppConfig& cfg, const ParamSample& s, const Convention& conv);
Rational dt_weight(const LeggedPlanePartition& pp, const ParamSample& s, const Convention& conv);

EquivariantCharacter edge_char(const Partition& lambda, int d1, int d2);
Rational edge_factor(const Partition& lambda, int d1, int d2, const ParamSample& s);

enum class DescMode { ch, ch_prime, ch_hat };

struct DescendentSpec {
    DescMode mode = DescMode::ch;
    int point = 0;  // 0 or 1 (infinity)
    std::string var = "u";
    int order = 0;
};

std::string to_string(DescMode m);
DescMode parse_desc_mode(const std::string& s);

// Generating series in z up to z^order, evaluated at the sample.
std::vector<Rational> descendent_char(const RppConfig& cfg, DescMode mode, int order, const ParamSample& s,
                                      const Convention& conv);
std::vector<Rational> descendent_char(const LeggedPlanePartition& pp, DescMode mode, int order,
                                      const ParamSample& s);

}  // namespace vf
