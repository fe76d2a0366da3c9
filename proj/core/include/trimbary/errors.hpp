#pragma once

#include <stdexcept>
#include <string>

namespace trimbary {

/// Thrown when an iterative numerical routine exhausts its iteration cap
/// without meeting its tolerance. Carries the last residual where the
/// routine has one.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace trimbary
