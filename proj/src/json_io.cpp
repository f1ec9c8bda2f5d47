#include "vf/json_io.hpp"

#include <sstream>

namespace vf {

json to_json(const Rational& r) {
    mpq_class c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

json to_json(const LaurentPoly& p) {
    json a = json::array();
    for (const auto& [m, c] : p.terms()) a.push_back({{"e", {m[0], m[1], m[2]}}, {"c", to_json(c)}});
    return a;
}

json to_json(const Partition& p) { return json(std::vector<int>(p.begin(), p.end())); }

json to_json(const RppConfig& c) {
    json k = json::array();
    auto cs = cells(c.shape);
    for (std::size_t a = 0; a < cs.size(); ++a) k.push_back({cs[a].i, cs[a].j, c.k[a]});
    return {{"shape", to_json(c.shape)}, {"k", k}};
}

json to_json(const LeggedPlanePartition& pp) {
    json h = json::array();
    for (const auto& [c, v] : pp.heights) h.push_back({c.i, c.j, v});
    return {{"leg", to_json(pp.leg)}, {"h", h}};
}

json to_json(const QSeries& q) {
    json c = json::array();
    for (const auto& x : q.coeffs) c.push_back(to_json(x));
    return {{"shift", q.shift}, {"coeffs", c}};
}

namespace {

json desc_terms(const DescSeries& d) {
    json a = json::array();
    for (const auto& [k, c] : d.coeffs()) a.push_back({{"k", k}, {"c", to_json(c)}});
    return a;
}

}  // namespace

json to_json(const DescSeries& d) {
    return {{"vars", d.vars()}, {"orders", d.orders()}, {"terms", desc_terms(d)}};
}

json to_json(const VertexSeries& v) {
    json c = json::array();
    const bool scalar = v.coeffs.empty() || v.coeffs[0].vars().empty();
    for (const auto& x : v.coeffs) c.push_back(scalar ? to_json(x.coeff({})) : desc_terms(x));
    json out{{"shift", v.shift}, {"coeffs", c}};
    if (!v.coeffs.empty()) out["vars"] = v.coeffs[0].vars();
    return out;
}

json to_json(const Convention& c) {
    return {{"pt_column_sign", c.pt_column_sign},
            {"dt_dual_denominator", c.dt_dual_denominator == DualDen::T123 ? "t1t2t3" : "t1t2"},
            {"euler_sign", c.euler_sign},
            {"hilb_norm", c.hilb_norm},
            {"substitution_sign", c.substitution_sign}};
}

json to_json(const ParamSample& s) {
    return {{"t1", to_json(s.t1)}, {"t2", to_json(s.t2)}, {"t3", to_json(s.t3)}, {"genericity_bound", s.genericity_bound}};
}

json to_json(const DescendentSpec& d) {
    return {{"mode", to_string(d.mode)}, {"point", d.point}, {"var", d.var}, {"order", d.order}};
}

json to_json(const Dtpt0Report& r) {
    json out{{"mu", to_json(r.mu)}, {"worders", r.worders}, {"qorder", r.qorder}};
    json van = json::array();
    for (const auto& v : r.vanishing)
        van.push_back({{"shape", to_json(v.mu)}, {"k", v.k}, {"dt_valid", v.dt_valid}, {"zero_order", v.zero_order},
                       {"pass", v.pass}});
    json g = json::array();
    for (const auto& x : r.gcheck) g.push_back({{"shape", to_json(x.mu)}, {"k", x.k}, {"side", x.side}, {"pass", x.pass}});
    json recs = json::array();
    for (const auto& x : r.records) {
        auto table = [](const std::vector<DescSeries>& t) {
            json a = json::array();
            for (const auto& c : t) a.push_back(desc_terms(c));
            return a;
        };
        recs.push_back({{"bound", x.bound},
                        {"orientation", x.orientation},
                        {"residue", {{"shift", x.shift}, {"coeffs", table(x.residue)}}},
                        {"dt_target", table(x.dt_target)},
                        {"pt_target", table(x.pt_target)},
                        {"flags", x.flags},
                        {"dt_match", x.dt_match},
                        {"pt_match", x.pt_match}});
    }
    out["vanishing"] = {{"pass", r.vanishing_pass}, {"cases", van}};
    out["g_identity"] = {{"pass", r.gcheck_pass}, {"cases", g}};
    out["records"] = recs;
    return out;
}

// ------------------------------------------------------------ parsing

Rational rational_from_json(const json& j, const std::string& ptr) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw InputError(ptr, "expected a rational \"num/den\"");
}

LaurentPoly laurent_from_json(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw InputError(ptr, "expected a list of terms");
    LaurentPoly p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = ptr + "/" + std::to_string(i);
        const json& t = j[i];
        if (!t.is_object() || !t.contains("e") || !t.contains("c")) throw InputError(at, "expected {\"e\",\"c\"}");
        const json& e = t["e"];
        if (!e.is_array() || e.size() != 3) throw InputError(at + "/e", "expected three exponents");
        Mono m{};
        for (int a = 0; a < 3; ++a) {
            if (!e[a].is_number_integer()) throw InputError(at + "/e/" + std::to_string(a), "expected an integer");
            m[a] = e[a].get<int>();
        }
        p.add_term(m, rational_from_json(t["c"], at + "/c"));
    }
    return p;
}

Partition partition_from_json(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw InputError(ptr, "expected a partition");
    Partition p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw InputError(ptr + "/" + std::to_string(i), "expected an integer");
        p.push_back(j[i].get<int>());
    }
    if (!valid_partition(p)) throw InputError(ptr, "not a partition");
    return p;
}

namespace {

std::vector<std::array<int, 3>> triples(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw InputError(ptr, "expected a list of [i,j,v]");
    std::vector<std::array<int, 3>> out;
    for (std::size_t a = 0; a < j.size(); ++a) {
        const json& t = j[a];
        std::string at = ptr + "/" + std::to_string(a);
        if (!t.is_array() || t.size() != 3) throw InputError(at, "expected [i,j,v]");
        std::array<int, 3> x{};
        for (int b = 0; b < 3; ++b) {
            if (!t[b].is_number_integer()) throw InputError(at + "/" + std::to_string(b), "expected an integer");
            x[b] = t[b].get<int>();
        }
        out.push_back(x);
    }
    return out;
}

}  // namespace

RppConfig rpp_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("k")) throw InputError(ptr, "expected {\"shape\",\"k\"}");
    RppConfig c{partition_from_json(j["shape"], ptr + "/shape"), {}};
    auto cs = cells(c.shape);
    c.k.assign(cs.size(), 0);
    std::vector<bool> seen(cs.size(), false);
    for (const auto& [i, jj, v] : triples(j["k"], ptr + "/k")) {
        auto it = std::find(cs.begin(), cs.end(), Cell{i, jj});
        if (it == cs.end()) throw InputError(ptr + "/k", "cell outside the shape");
        c.k[it - cs.begin()] = v;
        seen[it - cs.begin()] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError(ptr + "/k", "missing cell");
    if (!valid_rpp(c)) throw InputError(ptr, "not a restricted plane partition");
    return c;
}

LeggedPlanePartition lpp_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object() || !j.contains("leg") || !j.contains("h")) throw InputError(ptr, "expected {\"leg\",\"h\"}");
    LeggedPlanePartition pp;
    pp.leg = j["leg"].empty() ? Partition{} : partition_from_json(j["leg"], ptr + "/leg");
    for (const auto& [i, jj, v] : triples(j["h"], ptr + "/h")) pp.heights[{i, jj}] = v;
    if (!valid_lpp(pp)) throw InputError(ptr, "not a legged plane partition");
    return pp;
}

Convention convention_from_json(const json& j, const std::string& ptr, Convention c) {
    if (!j.is_object()) throw InputError(ptr, "expected an object");
    check_keys(j, ptr, {"pt_column_sign", "dt_dual_denominator", "euler_sign", "hilb_norm", "substitution_sign"});
    auto sign = [&](const char* key, int def) {
        int v = get_int(j, key, ptr, def, -1, 1);
        if (v == 0) throw InputError(ptr + "/" + key, "expected +1 or -1");
        return v;
    };
    c.pt_column_sign = sign("pt_column_sign", c.pt_column_sign);
    c.euler_sign = sign("euler_sign", c.euler_sign);
    c.substitution_sign = sign("substitution_sign", c.substitution_sign);
    c.hilb_norm = get_int(j, "hilb_norm", ptr, c.hilb_norm, -4, 4);
    std::string d = get_string(j, "dt_dual_denominator", ptr,
                               c.dt_dual_denominator == DualDen::T123 ? "t1t2t3" : "t1t2", {"t1t2", "t1t2t3"});
    c.dt_dual_denominator = d == "t1t2" ? DualDen::T12 : DualDen::T123;
    return c;
}

ParamSample sample_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw InputError(ptr, "expected a sample object");
    check_keys(j, ptr, {"t1", "t2", "t3", "genericity_bound"});
    for (const char* k : {"t1", "t2", "t3"})
        if (!j.contains(k)) throw InputError(ptr + "/" + k, "missing parameter");
    ParamSample s;
    s.t1 = rational_from_json(j["t1"], ptr + "/t1");
    s.t2 = rational_from_json(j["t2"], ptr + "/t2");
    s.t3 = rational_from_json(j["t3"], ptr + "/t3");
    s.genericity_bound = get_int(j, "genericity_bound", ptr, 12, 1, 200);
    if (!is_generic(s, s.genericity_bound)) throw InputError(ptr, "sample is not generic for its bound");
    return s;
}

DescendentSpec descendent_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw InputError(ptr, "expected a descendent object");
    check_keys(j, ptr, {"mode", "point", "var", "order"});
    DescendentSpec d;
    d.mode = parse_desc_mode(get_string(j, "mode", ptr, "ch", {"ch", "ch_prime", "ch_hat"}));
    d.point = get_int(j, "point", ptr, 0, 0, 1);
    d.var = get_string(j, "var", ptr, "u", {});
    d.order = get_int(j, "order", ptr, 2, 0, 12);
    return d;
}

int get_int(const json& obj, const std::string& key, const std::string& ptr, int def, int lo, int hi) {
    if (!obj.contains(key)) return def;
    const json& v = obj[key];
    if (!v.is_number_integer()) throw InputError(ptr + "/" + key, "expected an integer");
    long x = v.get<long>();
    if (x < lo || x > hi)
        throw InputError(ptr + "/" + key, "out of range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(x);
}

std::vector<int> get_int_list(const json& obj, const std::string& key, const std::string& ptr,
                              const std::vector<int>& def, int lo, int hi) {
    if (!obj.contains(key)) return def;
    const json& v = obj[key];
    if (v.is_number_integer()) return {get_int(obj, key, ptr, 0, lo, hi)};
    if (!v.is_array()) throw InputError(ptr + "/" + key, "expected an integer or a list");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string at = ptr + "/" + key + "/" + std::to_string(i);
        if (!v[i].is_number_integer()) throw InputError(at, "expected an integer");
        long x = v[i].get<long>();
        if (x < lo || x > hi) throw InputError(at, "out of range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

std::string get_string(const json& obj, const std::string& key, const std::string& ptr, const std::string& def,
                       const std::vector<std::string>& allowed) {
    if (!obj.contains(key)) return def;
    const json& v = obj[key];
    if (!v.is_string()) throw InputError(ptr + "/" + key, "expected a string");
    std::string s = v.get<std::string>();
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), s) == allowed.end())
        throw InputError(ptr + "/" + key, "unexpected value \"" + s + "\"");
    return s;
}

void check_keys(const json& obj, const std::string& ptr, const std::vector<std::string>& allowed) {
    if (!obj.is_object()) throw InputError(ptr.empty() ? "/" : ptr, "expected an object");
    for (const auto& [k, v] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) throw InputError(ptr + "/" + k, "unknown field");
}

std::string vertex_csv(const VertexSeries& v) {
    std::ostringstream os;
    os << "q_power,key,value\n";
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        for (const auto& [k, c] : v.coeffs[i].coeffs()) {
            os << static_cast<int>(i) + v.shift << ",";
            for (std::size_t a = 0; a < k.size(); ++a) os << (a ? " " : "") << k[a];
            os << "," << to_json(c).get<std::string>() << "\n";
        }
    return os.str();
}

}  // namespace vf
