#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homog/json_io.hpp"

namespace homog {

struct CheckResult {
    std::string id;      // stable check identifier, e.g. "lemma-7.1/no-embedding"
    std::string claim;   // the verified statement, in plain words
    std::string status;  // "pass" | "fail" | "truncated"
    int criterion = 0;   // acceptance criterion this check belongs to (0 = supplementary)
    json details = json::object();
};

struct SuiteReport {
    static constexpr int schema_version = 1;

    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    std::string status() const;  // fail > truncated > pass
    int exit_code() const;       // 0 pass, 1 fail, 2 truncated
    json to_json() const;
    std::string to_text() const;
};

CheckResult make_check(std::string id, std::string claim, bool pass, int criterion,
                       json details = json::object());

}  // namespace homog
