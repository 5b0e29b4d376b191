#pragma once

#include <cstdint>
#include <vector>

#include "homog/budget.hpp"
#include "homog/report.hpp"

namespace homog {

// Named verification suites; each check carries the acceptance criterion it
// implements.  Reports are byte-identical across reruns with the same seed
// and budget.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, Budget* budget = nullptr);

}  // namespace homog
