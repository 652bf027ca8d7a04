#pragma once

#include <stdexcept>
#include <string>

namespace vetocomm {

/// Error thrown by solvers. `code` is a stable machine-readable tag
/// ("empty-interval", "fixed-point-bracket", "dp-no-convergence", ...);
/// what() carries the human-readable detail.
class SolverError : public std::runtime_error {
public:
    SolverError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace vetocomm
