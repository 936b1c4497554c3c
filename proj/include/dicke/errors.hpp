#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters, inconsistent bases, unsupported requests.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An iterative procedure (eigensolver, cutoff loop, RWA block search)
/// did not reach its tolerance. `best` carries the best residual or
/// overlap reached before giving up.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best)
        : Error(what), best_(best) {}

    double best() const noexcept { return best_; }

private:
    double best_;
};

} // namespace dicke
