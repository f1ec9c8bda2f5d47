// Acceptance run: one line per criterion.

#include <chrono>
#include <iostream>

#include "vf/harness.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* check;  // empty for calibration
    bool informative_ok = false;
};

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const vf::Convention conv = vf::calibrated_convention();
    const Criterion all[] = {{1, "EGL identity", "egl"},
                             {2, "residue vertex equals bare PT vertex", "mainpt"},
                             {3, "measure ratio closed form", "measure-ratio"},
                             {4, "specialization polynomiality", "spec-poly"},
                             {5, "enumeration oracles", "slices"},
                             {6, "DT/PT factorization and conifold independence", "simple"},
                             {7, "residue assembly equals gluing", "ptint"},
                             {8, "degree-zero DT/PT report", "dtpt0", true},
                             {9, "unique calibrated convention", ""}};
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = clock::now();
        bool ok = false;
        std::string note;
        try {
            if (*c.check) {
                vf::CheckReport r = vf::run_check(c.check, vf::json::object(), conv);
                ok = r.verdict == vf::Verdict::pass || (c.informative_ok && r.verdict == vf::Verdict::informative);
                if (ok && r.verdict == vf::Verdict::informative) note = " (informative)";
            } else {
                vf::CalibrationResult cal = vf::calibrate();
                ok = cal.unique && *cal.unique == conv;
                if (!ok) note = cal.unique ? " (differs from default)" : " (not unique)";
            }
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        double sec = std::chrono::duration<double>(clock::now() - t0).count();
        std::cout << "criterion " << c.id << " " << c.title << ": " << (ok ? "pass" : "fail") << note << " ["
                  << sec << " s]\n";
        failed += !ok;
    }
    return failed ? 1 : 0;
}
