#pragma once

#include <stdexcept>
#include <string>

namespace toeplab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation of a Laurent polynomial with negative powers at w = 0.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A computed result violated a postcondition that holds in exact arithmetic.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// Input outside a documented precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Iterative linear solver (CG, inverse iteration, Jacobi, root finder) did not converge.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Grid too coarse for the requested domain.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Truncation sequence did not settle before the dimension cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double previous, double last, int last_dim)
        : Error(what), previous_(previous), last_(last), last_dim_(last_dim) {}

    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }
    int last_dim() const noexcept { return last_dim_; }

private:
    double previous_;
    double last_;
    int last_dim_;
};

}  // namespace toeplab
