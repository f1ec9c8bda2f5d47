#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "vf/harness.hpp"

using namespace vf;

namespace {

const Convention kConv = calibrated_convention();

std::string temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("vf-test-" + tag);
    std::filesystem::remove_all(p);
    return p.string();
}

std::string input_pointer(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.pointer.empty() ? "<root>" : e.pointer;
    }
    return "";
}

}  // namespace

TEST_CASE("canonical JSON forms") {
    CHECK(to_json(Rational(-2) / 4) == "-1/2");
    CHECK(to_json(Rational(3)) == "3/1");
    LaurentPoly p = LaurentPoly::mono({1, 0, -1}, Rational(1, 2)) + LaurentPoly(2);
    json j = to_json(p);
    CHECK(j == json::parse(R"([{"e":[0,0,0],"c":"2/1"},{"e":[1,0,-1],"c":"1/2"}])"));
    CHECK(laurent_from_json(j, "") == p);
    CHECK(rational_from_json("6/8", "") == Rational(3, 4));
    CHECK(input_pointer([] { rational_from_json("1/0", "/x"); }) == "/x");
    CHECK(input_pointer([] { rational_from_json(1.5, "/x"); }) == "/x");
    CHECK(input_pointer([] { partition_from_json(json::parse("[1,2]"), "/mu"); }) == "/mu");
}

TEST_CASE("convention round trip") {
    json j = to_json(kConv);
    CHECK(convention_from_json(j, "") == kConv);
    CHECK(j["dt_dual_denominator"] == "t1t2t3");
    CHECK(input_pointer([] { convention_from_json(json::parse(R"({"euler_sign":2})"), "/convention"); })
              .rfind("/convention", 0) == 0);
    CHECK(input_pointer([] { convention_from_json(json::parse(R"({"bogus":1})"), "/convention"); }) != "");
}

TEST_CASE("check parameter validation") {
    CHECK(input_pointer([] { run_check("egl", json::parse(R"({"n":[-1]})"), kConv); }) != "");
    CHECK(input_pointer([] { run_check("egl", json::parse(R"({"nope":1})"), kConv); }) != "");
    CHECK(input_pointer([] { run_check_spec(json::parse(R"({"name":"egl","n":-1})")); }) != "");
    CHECK(input_pointer([] { run_check_spec(json::parse(R"({"name":"egl","params":{"samples":0}})")); })
              .rfind("/params", 0) == 0);
    CHECK(input_pointer([] { run_check("no-such-check", json::object(), kConv); }) != "");
}

TEST_CASE("named checks") {
    auto names = check_names();
    for (const char* n : {"egl", "mainpt", "measure-ratio", "spec-poly", "slices", "simple", "ptint", "dtpt0"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CheckReport r = run_check("slices", json::object(), kConv);
    CHECK(r.verdict == Verdict::pass);
    CHECK_FALSE(r.to_json().contains("seconds"));
    CHECK(r.to_json(true).contains("seconds"));
    CHECK(exit_code(Verdict::pass) == 0);
    CHECK(exit_code(Verdict::fail) == 1);
    CHECK(exit_code(Verdict::informative) == 3);
}

TEST_CASE("deterministic check output") {
    json p = json::parse(R"({"n":[1,2],"samples":2})");
    CHECK(run_check("egl", p, kConv).to_json().dump() == run_check("egl", p, kConv).to_json().dump());
}

TEST_CASE("compute requests") {
    json req = json::parse(R"({"kind":"vertex","theory":"DT","boundary":{"leg":[]},"qorder":2,"seed":1})");
    json out = compute_request(req, kConv);
    CHECK(out["request"] == req);
    CHECK(out["shift"] == 0);
    REQUIRE(out["coeffs"].size() == 3);
    CHECK(out["coeffs"][0] == "1/1");
    CHECK(input_pointer([] { compute_request(json::parse(R"({"kind":"vertex"})"), kConv); }) == "/boundary");
    CHECK(input_pointer([] { compute_request(json::parse(R"({"kind":"nothing"})"), kConv); }) != "");
}

TEST_CASE("result cache") {
    const std::string dir = temp_dir("cache");
    json req = json::parse(R"({"kind":"vertex","theory":"PT","boundary":{"fixed":[1]},"qorder":1,"seed":2})");
    ComputeOutcome a = compute_cached(req, kConv, dir);
    CHECK_FALSE(a.from_cache);
    ComputeOutcome b = compute_cached(req, kConv, dir);
    CHECK(b.from_cache);
    CHECK(a.bytes == b.bytes);
    CHECK(b.warning.empty());
    // a different convention is a different entry
    Convention other = kConv;
    other.euler_sign = 1;
    CHECK_FALSE(compute_cached(req, other, dir).from_cache);
    // corrupted data is detected and recomputed
    const std::string h = ResultCache::hash_hex(cache_key(req, kConv));
    std::ofstream(std::filesystem::path(dir) / (h + ".json"), std::ios::trunc) << "{}";
    ComputeOutcome c = compute_cached(req, kConv, dir);
    CHECK_FALSE(c.from_cache);
    CHECK_FALSE(c.warning.empty());
    CHECK(c.bytes == a.bytes);
    CHECK(compute_cached(req, kConv, dir).from_cache);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache location") {
    ::setenv("VERTEXFORGE_CACHE", "/tmp/vf-env-cache", 1);
    CHECK(ResultCache::default_dir() == "/tmp/vf-env-cache");
    ::unsetenv("VERTEXFORGE_CACHE");
    CHECK(ResultCache::default_dir() == "./.vertexforge-cache");
    CHECK(ResultCache::hash_hex("") == "cbf29ce484222325");
}
