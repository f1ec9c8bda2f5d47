#pragma once

#include <string>
#include <vector>

#include "vf/vertex.hpp"

namespace vf {

// g(k, w, c) as a series in w, c = contents of mu.
std::vector<Rational> g_series(const Partition& mu, const std::vector<int>& k, int worder, const ParamSample& s);

// Exp(-V^DT) of Q = Q_e/(1-t3) - sum t^c t3^{k_c}/(1-t3), zero-tracked; any integer k.
Tracked dt_analytic_weight(const Partition& mu, const std::vector<int>& k, const ParamSample& s,
                           const Convention& conv);

struct VanishingRecord {
    Partition mu;
    std::vector<int> k;
    bool dt_valid = false;
    int zero_order = 0;
    bool pass = false;   // vanishes exactly off the DT locus
};

struct GCheckRecord {
    Partition mu;
    std::vector<int> k;
    std::string side;    // "DT" (k >= 0) or "PT" (g at -k against -ch')
    bool pass = false;
};

struct Dtpt0Record {
    int bound = 0;                 // summation range k >= bound
    int orientation = 1;           // Pochhammer indices taken at orientation * k
    int shift = 0;                 // q-power of residue[0]
    std::vector<DescSeries> residue;
    std::vector<DescSeries> dt_target, pt_target;
    std::vector<std::string> flags;  // degenerate factors met during the sum
    bool dt_match = false, pt_match = false;
};

struct Dtpt0Report {
    Partition mu;
    std::vector<int> worders;
    int qorder = 0;
    std::vector<VanishingRecord> vanishing;
    std::vector<GCheckRecord> gcheck;
    std::vector<Dtpt0Record> records;
    bool vanishing_pass = false;
    bool gcheck_pass = false;
};

Dtpt0Report dtpt0_report(const Partition& mu, const std::vector<int>& worders, int N, const ParamSample& s,
                         const Convention& conv);

}  // namespace vf
