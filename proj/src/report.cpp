#include "homog/report.hpp"

#include <sstream>

namespace homog {

std::string SuiteReport::status() const {
    bool truncated = false;
    for (const auto& c : checks) {
        if (c.status == "fail") return "fail";
        if (c.status == "truncated") truncated = true;
    }
    return truncated ? "truncated" : "pass";
}

int SuiteReport::exit_code() const {
    const std::string s = status();
    if (s == "pass") return 0;
    if (s == "fail") return 1;
    return 2;
}

json SuiteReport::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["suite"] = suite;
    j["seed"] = seed;
    j["status"] = status();
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["id"] = c.id;
        e["claim"] = c.claim;
        e["status"] = c.status;
        e["criterion"] = c.criterion;
        e["details"] = c.details;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << " (seed " << seed << ")\n";
    for (const auto& c : checks) {
        out << "  [" << c.status << "] " << c.id << ": " << c.claim;
        if (c.status != "pass" && !c.details.empty()) out << "\n      " << c.details.dump();
        out << "\n";
    }
    out << "overall: " << status() << "\n";
    return out.str();
}

CheckResult make_check(std::string id, std::string claim, bool pass, int criterion, json details) {
    CheckResult c;
    c.id = std::move(id);
    c.claim = std::move(claim);
    c.status = pass ? "pass" : "fail";
    c.criterion = criterion;
    c.details = std::move(details);
    return c;
}

}  // namespace homog
