#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vf/dtpt0.hpp"
#include "vf/localcurve.hpp"

namespace vf {

using json = nlohmann::json;

// Invalid user input; `pointer` is a JSON pointer to the offending field.
struct InputError : std::runtime_error {
    std::string pointer;
    InputError(std::string ptr, const std::string& msg) : std::runtime_error(msg), pointer(std::move(ptr)) {}
};

json to_json(const Rational& r);
json to_json(const LaurentPoly& p);
json to_json(const Partition& p);
json to_json(const RppConfig& c);
json to_json(const LeggedPlanePartition& pp);
json to_json(const QSeries& q);
json to_json(const DescSeries& d);
json to_json(const VertexSeries& v);
json to_json(const Convention& c);
json to_json(const ParamSample& s);
json to_json(const DescendentSpec& d);
json to_json(const Dtpt0Report& r);

Rational rational_from_json(const json& j, const std::string& ptr);
LaurentPoly laurent_from_json(const json& j, const std::string& ptr);
Partition partition_from_json(const json& j, const std::string& ptr);
RppConfig rpp_from_json(const json& j, const std::string& ptr);
LeggedPlanePartition lpp_from_json(const json& j, const std::string& ptr);
Convention convention_from_json(const json& j, const std::string& ptr, Convention base = calibrated_convention());
ParamSample sample_from_json(const json& j, const std::string& ptr);
DescendentSpec descendent_from_json(const json& j, const std::string& ptr);

// Field readers with schema checks; throw InputError.
int get_int(const json& obj, const std::string& key, const std::string& ptr, int def, int lo, int hi);
std::vector<int> get_int_list(const json& obj, const std::string& key, const std::string& ptr,
                              const std::vector<int>& def, int lo, int hi);
std::string get_string(const json& obj, const std::string& key, const std::string& ptr, const std::string& def,
                       const std::vector<std::string>& allowed);
void check_keys(const json& obj, const std::string& ptr, const std::vector<std::string>& allowed);

// CSV coefficient table: q_power,key,value (key is a descendent exponent vector).
std::string vertex_csv(const VertexSeries& v);

}  // namespace vf
