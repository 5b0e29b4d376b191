#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace homog {

// Thrown when a search exhausts its node or wall-clock budget.  Callers that
// can return partial results catch this and mark the result truncated.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Node/time budget shared by the heavier searches.  A default-constructed
// budget is effectively unlimited.
class Budget {
public:
    static constexpr std::uint64_t default_node_limit = 100'000'000;  // 1e8 explored nodes

    Budget() = default;
    explicit Budget(std::uint64_t node_limit, double seconds_limit = 0.0)
        : node_limit_(node_limit), seconds_limit_(seconds_limit),
          start_(std::chrono::steady_clock::now()) {}

    // Counts one explored search node; throws once the budget is gone.
    void tick(std::uint64_t n = 1) {
        nodes_ += n;
        if (node_limit_ > 0 && nodes_ > node_limit_)
            throw budget_exceeded("node budget exhausted after " + std::to_string(nodes_) + " nodes");
        if (seconds_limit_ > 0.0 && (nodes_ & 0x3ff) == 0) {
            const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (elapsed > seconds_limit_)
                throw budget_exceeded("time budget exhausted");
        }
    }

    std::uint64_t nodes_used() const { return nodes_; }
    std::uint64_t node_limit() const { return node_limit_; }

private:
    std::uint64_t node_limit_ = 0;  // 0 = unlimited
    double seconds_limit_ = 0.0;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace homog
