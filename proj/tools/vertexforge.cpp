// vertexforge: compute vertex series and run identity checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "vf/harness.hpp"

namespace {

using vf::json;

constexpr int kExitInvalid = 2;

std::string read_file_or_stdin(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vf::InputError("", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw vf::InputError("", "malformed JSON in " + what + ": " + e.what());
    }
}

// key = value lines, '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& path) {
    static const std::vector<std::string> known{"cache",     "format",    "out",        "timing",
                                                "pt_column_sign", "dt_dual_denominator", "euler_sign",
                                                "hilb_norm", "substitution_sign"};
    std::map<std::string, std::string> kv;
    std::istringstream in(read_file_or_stdin(path));
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw vf::InputError("", path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw vf::InputError("", path + ":" + std::to_string(lineno) + ": unknown key " + k);
        kv[k] = v;
    }
    return kv;
}

struct Common {
    std::string config;
    std::string format;
    std::string out;
    std::string convention;  // JSON object
    bool timing = false;
};

struct Settings {
    std::string format = "json";
    std::string out;
    bool timing = false;
    std::optional<std::string> cache;
    vf::Convention conv = vf::calibrated_convention();
};

Settings resolve(const Common& c, const std::string& cache_flag, bool no_cache) {
    Settings s;
    s.cache = vf::ResultCache::default_dir();
    std::map<std::string, std::string> kv;
    if (!c.config.empty()) kv = read_config(c.config);
    json conv = json::object();
    for (const auto& [k, v] : kv) {
        if (k == "cache") {
            if (!std::getenv("VERTEXFORGE_CACHE") || !*std::getenv("VERTEXFORGE_CACHE")) s.cache = v;
        } else if (k == "format") {
            s.format = v;
        } else if (k == "out") {
            s.out = v;
        } else if (k == "timing") {
            s.timing = v == "1" || v == "true";
        } else if (k == "dt_dual_denominator") {
            conv[k] = v;
        } else {
            try {
                conv[k] = std::stoi(v);
            } catch (const std::exception&) {
                throw vf::InputError("/" + k, "expected an integer in the config file");
            }
        }
    }
    // flags override the file
    if (!c.format.empty()) s.format = c.format;
    if (!c.out.empty()) s.out = c.out;
    if (c.timing) s.timing = true;
    if (!c.convention.empty()) {
        json j = parse_json(c.convention, "--convention");
        if (!j.is_object()) throw vf::InputError("/convention", "expected an object");
        for (const auto& [k, v] : j.items()) conv[k] = v;
    }
    if (!cache_flag.empty()) s.cache = cache_flag;
    if (no_cache) s.cache.reset();
    if (s.format != "json" && s.format != "csv") throw vf::InputError("/format", "expected json or csv");
    s.conv = vf::convention_from_json(conv, "/convention");
    return s;
}

void emit(const Settings& s, const std::string& text) {
    if (s.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(s.out, std::ios::binary | std::ios::trunc);
    if (!o) throw vf::InputError("/out", "cannot write " + s.out);
    o << text;
}

std::string result_csv(const json& r) {
    std::ostringstream os;
    os << "q_power,key,value\n";
    int shift = r.value("shift", 0);
    const json& c = r["coeffs"];
    for (std::size_t i = 0; i < c.size(); ++i) {
        int q = static_cast<int>(i) + shift;
        if (c[i].is_string()) {
            os << q << ",," << c[i].get<std::string>() << "\n";
            continue;
        }
        for (const auto& t : c[i]) {
            os << q << ",";
            const auto& k = t["k"];
            for (std::size_t a = 0; a < k.size(); ++a) os << (a ? " " : "") << k[a].get<int>();
            os << "," << t["c"].get<std::string>() << "\n";
        }
    }
    return os.str();
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    }
    return s;
}

std::string report_csv(const json& rep) {
    // one row per case, scalar fields only
    std::vector<std::string> cols;
    for (const auto& c : rep["cases"])
        for (const auto& [k, v] : c.items())
            if (!v.is_object() && !v.is_array() && std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::ostringstream os;
    os << "check,case";
    for (const auto& k : cols) os << "," << k;
    os << "\n";
    std::size_t i = 0;
    for (const auto& c : rep["cases"]) {
        os << rep["name"].get<std::string>() << "," << i++;
        for (const auto& k : cols) os << "," << (c.contains(k) ? csv_cell(c[k]) : "");
        os << "\n";
    }
    return os.str();
}

int fail_invalid(const vf::InputError& e) {
    std::cerr << "invalid input";
    if (!e.pointer.empty()) std::cerr << " at " << e.pointer;
    std::cerr << ": " << e.what() << "\n";
    return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertexforge: exact one-leg vertex computations and identity checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vf::kVersion));

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "key = value configuration file");
        sub->add_option("--format", common.format, "json (default) or csv");
        sub->add_option("--out", common.out, "write output to a file");
        sub->add_option("--convention", common.convention, "convention override as a JSON object");
        sub->add_flag("--timing", common.timing, "include wall time in reports");
    };

    std::string request_path = "-", cache_dir;
    bool no_cache = false;
    auto* compute = app.add_subcommand("compute", "evaluate a vertex or local-curve request");
    compute->add_option("request", request_path, "request JSON file, - for stdin");
    compute->add_option("--cache", cache_dir, "cache directory (default ./.vertexforge-cache or $VERTEXFORGE_CACHE)");
    compute->add_flag("--no-cache", no_cache, "bypass the cache");
    add_common(compute);

    std::string check_name, params_text, spec_path;
    auto* check = app.add_subcommand("check", "run a named identity suite");
    check->add_option("name", check_name, "check name")->check(CLI::IsMember(vf::check_names()));
    check->add_option("--params", params_text, "parameters as a JSON object or @file");
    check->add_option("--spec", spec_path, "check spec file {\"name\",\"params\",\"convention\"}");
    add_common(check);

    std::string out_dir = ".";
    auto* calibrate = app.add_subcommand("calibrate", "scan convention candidates and write the convention document");
    calibrate->add_option("--out-dir", out_dir, "directory for convention.md and calibration_log.txt");

    std::vector<std::string> only;
    auto* report = app.add_subcommand("report", "run the acceptance suite and summarize");
    report->add_option("--checks", only, "restrict to these checks")->delimiter(',');
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*compute) {
            Settings s = resolve(common, cache_dir, no_cache);
            json req = parse_json(read_file_or_stdin(request_path), "request");
            vf::ComputeOutcome o;
            try {
                o = vf::compute_cached(req, s.conv, s.cache);
            } catch (const vf::MathError& e) {
                std::cerr << "cannot evaluate request: " << e.what() << "\n";
                return kExitInvalid;
            }
            if (!o.warning.empty()) std::cerr << "warning: " << o.warning << "\n";
            emit(s, s.format == "csv" ? result_csv(json::parse(o.bytes)) : o.bytes);
            return 0;
        }
        if (*check) {
            Settings s = resolve(common, "", true);
            json spec;
            if (!spec_path.empty()) {
                spec = parse_json(read_file_or_stdin(spec_path), "spec");
                if (spec.is_object() && !check_name.empty()) spec["name"] = check_name;
            } else {
                if (check_name.empty()) throw vf::InputError("/name", "missing check name");
                json params = json::object();
                if (!params_text.empty())
                    params = params_text[0] == '@' ? parse_json(read_file_or_stdin(params_text.substr(1)), "params")
                                                   : parse_json(params_text, "--params");
                spec = {{"name", check_name}, {"params", params}, {"convention", vf::to_json(s.conv)}};
            }
            vf::CheckReport r;
            try {
                r = vf::run_check_spec(spec);
            } catch (const vf::MathError& e) {
                std::cerr << "check aborted: " << e.what() << "\n";
                return 1;
            }
            json j = r.to_json(s.timing);
            emit(s, s.format == "csv" ? report_csv(j) : j.dump(2) + "\n");
            std::cerr << r.name << ": " << vf::to_string(r.verdict) << "\n";
            return vf::exit_code(r.verdict);
        }
        if (*calibrate) {
            vf::CalibrationResult c = vf::calibrate();
            std::filesystem::create_directories(out_dir);
            std::ofstream(std::filesystem::path(out_dir) / "convention.md") << c.document;
            std::ofstream(std::filesystem::path(out_dir) / "calibration_log.txt") << c.log;
            std::cout << c.log;
            if (!c.unique) return 1;
            return *c.unique == vf::calibrated_convention() ? 0 : 1;
        }
        if (*report) {
            Settings s = resolve(common, "", true);
            json out{{"version", vf::kVersion}, {"convention", vf::to_json(s.conv)}, {"checks", json::array()}};
            bool failed = false;
            for (const auto& e : vf::default_suite()) {
                if (!only.empty() && std::find(only.begin(), only.end(), e.name) == only.end()) continue;
                json row{{"title", e.title}, {"name", e.name}};
                try {
                    vf::CheckReport r = vf::run_check(e.name, e.params, s.conv);
                    row["verdict"] = vf::to_string(r.verdict);
                    row["summary"] = r.summary;
                    if (s.timing) row["seconds"] = r.seconds;
                    failed = failed || r.verdict == vf::Verdict::fail;
                } catch (const vf::MathError& ex) {
                    row["verdict"] = "fail";
                    row["error"] = ex.what();
                    failed = true;
                }
                std::cerr << e.name << ": " << row["verdict"].get<std::string>() << "\n";
                out["checks"].push_back(row);
            }
            if (s.format == "csv") {
                std::ostringstream os;
                os << "check,title,verdict\n";
                for (const auto& r : out["checks"])
                    os << r["name"].get<std::string>() << "," << r["title"].get<std::string>() << ","
                       << r["verdict"].get<std::string>() << "\n";
                emit(s, os.str());
            } else {
                emit(s, out.dump(2) + "\n");
            }
            return failed ? 1 : 0;
        }
    } catch (const vf::InputError& e) {
        return fail_invalid(e);
    }
    return 0;
}
