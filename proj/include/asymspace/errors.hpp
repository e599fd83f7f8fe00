#pragma once

#include <stdexcept>
#include <string>

namespace asymspace {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input: dimension mismatches, invalid documents,
/// violated operation preconditions on the data itself.
struct InputError : Error {
    using Error::Error;
};

/// Two balls with zero total radius around distinct centers.
struct DegenerateRadiusError : Error {
    using Error::Error;
};

/// metric_convexity_witness called with q(y - x) > r + s.
struct NoWitnessError : Error {
    using Error::Error;
};

/// A family-shaped argument does not have the required shape (e.g. r_i != s_i).
struct ShapeError : Error {
    using Error::Error;
};

/// The alternating minimal-pair iteration did not reach a fixed point
/// within the pass cap.
struct ConvergenceFailureError : Error {
    using Error::Error;
};

/// Operation requires a target norm of a specific form (tilde-q or (R,u)).
struct UnsupportedTargetError : Error {
    using Error::Error;
};

/// Operation requires a property of the norm that does not hold (e.g. T1).
struct UnsupportedNormError : Error {
    using Error::Error;
};

/// fiber_distances: the affine system T z = u has no solution in the domain.
struct EmptyFiberError : Error {
    using Error::Error;
};

/// extend_functional_one_step: phi is not dominated by p on its domain.
struct NotDominatedError : Error {
    using Error::Error;
};

/// extend_functional_one_step: the new direction already lies in the domain.
struct DegenerateDirectionError : Error {
    using Error::Error;
};

/// build_mu_norm: the pair failed its sampled (a)-(d) verification.
struct InvalidPairError : Error {
    using Error::Error;
};

/// dump_geometry and friends: only dimension 2 is supported.
struct UnsupportedDimensionError : Error {
    using Error::Error;
};

}  // namespace asymspace
