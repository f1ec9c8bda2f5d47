#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vf/exactalg.hpp"

namespace vf {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct Cell {
    int i = 0, j = 0;  // i: row (t1 direction), j: column (t2 direction)
    auto operator<=>(const Cell&) const = default;
};

int size(const Partition& p);
bool valid_partition(const Partition& p);
// Row-major list of cells.
std::vector<Cell> cells(const Partition& p);
Partition conjugate(const Partition& p);
std::string to_string(const Partition& p);
// i t1 + j t2 at the sample
Rational content(const Cell& c, const ParamSample& s);

// All partitions of n, reverse-lexicographic.
std::vector<Partition> enum_partitions(int n);
// Partitions of each size 0..n.
std::vector<Partition> enum_partitions_upto(int n);

// PT fixed point: k on cells(shape), weakly increasing along rows and columns.
struct RppConfig {
    Partition shape;
    std::vector<int> k;  // aligned with cells(shape)
    int size() const;
    int at(const Cell& c) const;
    bool operator==(const RppConfig&) const = default;
};

bool valid_rpp(const RppConfig& cfg);
// Sorted by size, then lexicographically in k.
std::vector<RppConfig> enum_rpp(const Partition& shape, int max_size);

// DT fixed point with infinite leg along t3.
struct LeggedPlanePartition {
    Partition leg;
    std::map<Cell, int> heights;  // cells outside the leg, nonzero entries only
    int renorm_volume() const;
    int height(const Cell& c) const;  // -1 encodes infinity on the leg
    bool operator==(const LeggedPlanePartition&) const = default;
};

bool valid_lpp(const LeggedPlanePartition& pp);
// Sorted by volume, deterministic within a volume.
std::vector<LeggedPlanePartition> enum_legged_pp(const Partition& leg, int max_volume);

using SliceSeq = std::vector<Partition>;

SliceSeq slices_of(const LeggedPlanePartition& pp);
LeggedPlanePartition from_slices(const SliceSeq& s);
Partition first_slice(const LeggedPlanePartition& pp);

// Coefficients of prod_i (1 - q^i)^{-i} up to q^n.
std::vector<Integer> macmahon_coeffs(int n);

}  // namespace vf
