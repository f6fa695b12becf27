#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dfnls {

// Newton failed to reach the residual tolerance; history holds the residual
// max-norm of the seed and of each subsequent iterate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> history)
        : std::runtime_error(what), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

// Newton collapsed onto the zero fixed point (the only solution for omega <= 1).
class TrivialSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Continuation could not reach a target frequency even after step halving.
class ContinuationError : public std::runtime_error {
public:
    ContinuationError(const std::string& what, double omega)
        : std::runtime_error(what), omega_failed(omega) {}
    double omega_failed;
};

// A sector matrix expected to be safely invertible was numerically singular,
// usually a sign that a kernel direction was misclassified.
class SingularSectorError : public std::runtime_error {
public:
    SingularSectorError(const std::string& what, double rcond)
        : std::runtime_error(what), rcond(rcond) {}
    double rcond;
};

}  // namespace dfnls
