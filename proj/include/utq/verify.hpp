#pragma once

// Reproducible verification suites; each returns a RunReport with one line
// per check.  The CLI `verify` subcommand and the acceptance tests share
// these.

#include "utq/orbit.hpp"

#include <map>
#include <string>
#include <vector>

namespace utq {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;   // offending instance (Lambda, q, e) on failure
};

struct RunReport {
    std::string suite;
    std::map<std::string, std::string> parameters;
    double wall_seconds = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> artifacts;

    bool ok() const;
    void add(const std::string& label, bool pass, const std::string& detail = "");
    std::string summary() const;
};

struct VerifyOptions {
    uint64_t cap = kDefaultOrbitCap;
    int threads = 1;
};

RunReport verify_table1(int max_n, const VerifyOptions& opt = {});
RunReport verify_appendix(const VerifyOptions& opt = {});
RunReport verify_congruence(const VerifyOptions& opt = {});
RunReport verify_oracle_un(const VerifyOptions& opt = {});
RunReport verify_ex13(const VerifyOptions& opt = {});
RunReport verify_lambda13(const VerifyOptions& opt = {});
RunReport verify_factorization(const VerifyOptions& opt = {});
RunReport verify_fact_identities(const VerifyOptions& opt = {});
RunReport verify_maxcross(const VerifyOptions& opt = {});
RunReport verify_prop_eval(const VerifyOptions& opt = {});
RunReport verify_algebra(const VerifyOptions& opt = {});

// dispatch by CLI suite name; throws on unknown names
RunReport run_suite(const std::string& name, const VerifyOptions& opt = {});
const std::vector<std::string>& suite_names();

}  // namespace utq
