#pragma once

#include <stdexcept>
#include <string>

namespace metric_repair {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (edge lists, matrices, delta and support files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An algorithm was called on an input it does not accept: a non-chordal
/// graph for the FPT solvers, a non-complete graph for the matrix
/// algorithms, an incompatible repair class, or an inconsistent delta.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration refused because the instance exceeds the guard.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

} // namespace metric_repair
