#ifndef ZSF_VERIFY_HPP
#define ZSF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zsf {

// Named verification suites shared by the CLI `verify` subcommand and the
// acceptance runner. Every tolerance is pinned here, not configurable at the
// call site (tol_scale exists for exploratory reruns only and is reported in
// the output when != 1).
struct VerifyOptions {
    std::uint64_t seed = 12345;
    double tol_scale = 1.0;
};

struct CheckResult {
    std::string name;
    double defect = 0.0;
    double tol = 0.0;
    bool pass = false;
    double seconds = 0.0;
    std::string note;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double seconds() const {
        double s = 0.0;
        for (const auto& c : checks) s += c.seconds;
        return s;
    }
};

const std::vector<std::string>& verify_suite_names();

SuiteResult run_verify_suite(const std::string& suite,
                             const VerifyOptions& opt = {});

} // namespace zsf

#endif
