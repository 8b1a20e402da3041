#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tdl {

// Thrown when a request exceeds a configured search/enumeration budget.
// Solvers refuse explicitly instead of silently degrading to a heuristic.
class budget_error : public std::runtime_error {
public:
    budget_error(std::string what, std::uint64_t required, std::uint64_t allowed)
        : std::runtime_error(std::move(what)), required_(required), allowed_(allowed) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t allowed() const { return allowed_; }

private:
    std::uint64_t required_;
    std::uint64_t allowed_;
};

}  // namespace tdl
