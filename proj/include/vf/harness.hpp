#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vf/json_io.hpp"

namespace vf {

inline constexpr const char* kVersion = "0.1.0";

enum class Verdict { pass, fail, informative };
std::string to_string(Verdict v);
int exit_code(Verdict v);  // 0, 1, 3

struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::fail;
    json params;           // normalized parameters
    json cases = json::array();
    json summary = json::object();
    Convention convention;
    double seconds = 0;    // wall time, not part of the canonical JSON
    json to_json(bool with_timing = false) const;
};

// Names accepted by run_check.
std::vector<std::string> check_names();

// Validates the parameters (InputError on failure) and runs the suite.
CheckReport run_check(const std::string& name, const json& params, const Convention& conv);
// {"name":..., "params":{...}, "convention":{...}} form.
CheckReport run_check_spec(const json& spec);

// Sample for a check case: seed-based, bound chosen from the combinatorial data.
ParamSample check_sample(std::uint64_t seed, int bound, std::optional<int> line_c = std::nullopt);

// ------------------------------------------------------------ compute

// Evaluates a vertex / glue request into a VertexResult JSON object.
json compute_request(const json& request, const Convention& conv);

class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
    static std::string default_dir();  // VERTEXFORGE_CACHE or ./.vertexforge-cache
    // Returns the stored bytes on a verified hit.
    std::optional<std::string> lookup(const std::string& key, std::string* warning = nullptr) const;
    void store(const std::string& key, const std::string& bytes) const;
    static std::string hash_hex(const std::string& s);

private:
    std::string dir_;
};

// Canonical cache key of a request under a convention and tool version.
std::string cache_key(const json& request, const Convention& conv);

struct ComputeOutcome {
    std::string bytes;
    bool from_cache = false;
    std::string warning;
};
ComputeOutcome compute_cached(const json& request, const Convention& conv, const std::optional<std::string>& cache_dir);

// ------------------------------------------------------------ calibration

struct CandidateResult {
    Convention conv;
    bool egl = false, ratio = false, simple = false;
    std::string note;  // first discriminating failure
    bool calibrated() const { return egl && ratio && simple; }
};

struct CalibrationResult {
    std::vector<CandidateResult> candidates;
    std::optional<Convention> unique;
    std::string document;  // convention document
    std::string log;       // derivation log
};

CalibrationResult calibrate();

// ------------------------------------------------------------ report

struct SuiteEntry {
    std::string title;
    std::string name;
    json params;
};
// Default acceptance suite, one entry per criterion group.
std::vector<SuiteEntry> default_suite();

}  // namespace vf
