#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid Cartan data, type names or node indices.
class CartanError : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Violations of series invariants: incomparable anchors, non-unit inversion,
/// offsets outside the root lattice.
class SeriesError : public Error {
public:
    using Error::Error;
};

/// The q-difference solver could not produce a solution.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace qweyl
