#include "vf/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vf {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool valid_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

std::vector<Cell> cells(const Partition& p) {
    std::vector<Cell> out;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (int j = 0; j < p[i]; ++j) out.push_back({i, j});
    return out;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 0; j < p[0]; ++j) {
        int n = 0;
        while (n < static_cast<int>(p.size()) && p[n] > j) ++n;
        c.push_back(n);
    }
    return c;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

Rational content(const Cell& c, const ParamSample& s) { return c.i * s.t1 + c.j * s.t2; }

std::vector<Partition> enum_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Partition> enum_partitions_upto(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& p : enum_partitions(m)) out.push_back(p);
    return out;
}

// ------------------------------------------------------------------ RPP

int RppConfig::size() const { return std::accumulate(k.begin(), k.end(), 0); }

int RppConfig::at(const Cell& c) const {
    int idx = 0;
    for (int i = 0; i < c.i; ++i) idx += shape[i];
    return k.at(idx + c.j);
}

bool valid_rpp(const RppConfig& cfg) {
    if (!valid_partition(cfg.shape) || static_cast<int>(cfg.k.size()) != size(cfg.shape)) return false;
    for (const auto& c : cells(cfg.shape)) {
        int v = cfg.at(c);
        if (v < 0) return false;
        if (c.i > 0 && cfg.at({c.i - 1, c.j}) > v) return false;
        if (c.j > 0 && cfg.at({c.i, c.j - 1}) > v) return false;
    }
    return true;
}

std::vector<RppConfig> enum_rpp(const Partition& shape, int max_size) {
    auto cs = cells(shape);
    std::vector<RppConfig> out;
    RppConfig cur{shape, std::vector<int>(cs.size(), 0)};
    std::vector<int> offset(shape.size() + 1, 0);
    for (std::size_t i = 0; i < shape.size(); ++i) offset[i + 1] = offset[i] + shape[i];
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int used) {
        if (idx == cs.size()) {
            out.push_back(cur);
            return;
        }
        const Cell& c = cs[idx];
        int lo = 0;
        if (c.i > 0) lo = std::max(lo, cur.k[offset[c.i - 1] + c.j]);
        if (c.j > 0) lo = std::max(lo, cur.k[idx - 1]);
        for (int v = lo; used + v <= max_size; ++v) {
            cur.k[idx] = v;
            rec(idx + 1, used + v);
        }
        cur.k[idx] = 0;
    };
    if (max_size >= 0) rec(0, 0);
    std::stable_sort(out.begin(), out.end(), [](const RppConfig& a, const RppConfig& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.k < b.k;
    });
    return out;
}

// ------------------------------------------------------------------ legged

int LeggedPlanePartition::renorm_volume() const {
    int v = 0;
    for (const auto& [c, h] : heights) v += h;
    return v;
}

int LeggedPlanePartition::height(const Cell& c) const {
    if (c.i < static_cast<int>(leg.size()) && c.j < leg[c.i]) return -1;
    auto it = heights.find(c);
    return it == heights.end() ? 0 : it->second;
}

bool valid_lpp(const LeggedPlanePartition& pp) {
    if (!pp.leg.empty() && !valid_partition(pp.leg)) return false;
    auto inf = [](int h) { return h < 0; };
    for (const auto& [c, h] : pp.heights) {
        if (h <= 0) return false;
        if (pp.height(c) < 0) return false;  // stored entry on the leg
        if (c.i > 0) {
            int up = pp.height({c.i - 1, c.j});
            if (!inf(up) && up < h) return false;
        }
        if (c.j > 0) {
            int left = pp.height({c.i, c.j - 1});
            if (!inf(left) && left < h) return false;
        }
    }
    return true;
}

std::vector<LeggedPlanePartition> enum_legged_pp(const Partition& leg, int max_volume) {
    std::vector<LeggedPlanePartition> out;
    if (max_volume < 0) return out;
    const int rows = static_cast<int>(leg.size()) + max_volume + 1;
    const int cols = (leg.empty() ? 0 : leg[0]) + max_volume + 1;
    auto leg_len = [&](int i) { return i < static_cast<int>(leg.size()) ? leg[i] : 0; };
    constexpr int INF = 1 << 28;
    std::vector<std::vector<int>> h(rows, std::vector<int>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < leg_len(i); ++j) h[i][j] = INF;

    std::function<void(int, int, int)> rec = [&](int i, int j, int used) {
        if (j == cols) {
            ++i;
            j = 0;
        }
        if (i == rows) {
            LeggedPlanePartition pp{leg, {}};
            for (int a = 0; a < rows; ++a)
                for (int b = leg_len(a); b < cols; ++b)
                    if (h[a][b] > 0) {
                        if (a == rows - 1 || b == cols - 1) throw MathError("enumeration box too small");
                        pp.heights[{a, b}] = h[a][b];
                    }
            out.push_back(std::move(pp));
            return;
        }
        if (j < leg_len(i)) {
            rec(i, leg_len(i), used);
            return;
        }
        int up = i > 0 ? h[i - 1][j] : INF;
        int left = j > 0 ? h[i][j - 1] : INF;
        int hi = std::min({up, left, max_volume - used});
        if (hi <= 0) {
            // the rest of this row is forced to zero
            rec(i, cols, used);
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            h[i][j] = v;
            if (v == 0) {
                rec(i, cols, used);
            } else {
                rec(i, j + 1, used + v);
            }
        }
        h[i][j] = 0;
    };
    rec(0, 0, 0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.renorm_volume() != b.renorm_volume()) return a.renorm_volume() < b.renorm_volume();
        return a.heights < b.heights;
    });
    return out;
}

// ------------------------------------------------------------------ slices

SliceSeq slices_of(const LeggedPlanePartition& pp) {
    if (!pp.leg.empty()) throw MathError("slices require an empty leg");
    int top = 0;
    for (const auto& [c, h] : pp.heights) top = std::max(top, h);
    SliceSeq out;
    for (int k = 1; k <= top; ++k) {
        std::map<int, int> rowlen;
        for (const auto& [c, h] : pp.heights)
            if (h >= k) rowlen[c.i] = std::max(rowlen[c.i], c.j + 1);
        Partition p;
        for (int i = 0; rowlen.count(i); ++i) p.push_back(rowlen[i]);
        out.push_back(p);
    }
    return out;
}

LeggedPlanePartition from_slices(const SliceSeq& s) {
    LeggedPlanePartition pp;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) {
            for (std::size_t i = 0; i < s[k].size(); ++i)
                if (i >= s[k - 1].size() || s[k][i] > s[k - 1][i]) throw MathError("slices are not nested");
        }
        for (const auto& c : cells(s[k])) pp.heights[c] += 1;
    }
    return pp;
}

Partition first_slice(const LeggedPlanePartition& pp) {
    auto s = slices_of(pp);
    return s.empty() ? Partition{} : s[0];
}

std::vector<Integer> macmahon_coeffs(int n) {
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int rep = 0; rep < i; ++rep)       // (1 - q^i)^{-1}, i times
            for (int m = i; m <= n; ++m) c[m] += c[m - i];
    return c;
}

}  // namespace vf
