#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simpend {

// Anything that rejects a structurally well-formed but semantically invalid
// value (bad index, mismatched sizes, broken frieze, ...). The CLI maps this
// to exit code 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Composition of maps whose intermediate sizes disagree.
struct SizeMismatchError : ValidationError {
    int expected;
    int got;
    SizeMismatchError(int expected_, int got_)
        : ValidationError("size mismatch: intermediate object is " + std::to_string(expected_) +
                          " on one side and " + std::to_string(got_) + " on the other"),
          expected(expected_),
          got(got_) {}
};

// Generator or block index outside the legal range for the ambient rank.
struct IndexError : ValidationError {
    using ValidationError::ValidationError;
};

// Two frieze segments claim the same point of Z \ {0}.
struct OverlapError : ValidationError {
    int point;
    OverlapError(const std::string& what_, int point_)
        : ValidationError(what_ + " at point " + std::to_string(point_)), point(point_) {}
};

// A segment endpoint breaks the parity form required of cups, caps, or tails.
struct ParityError : ValidationError {
    int point;
    ParityError(const std::string& what_, int point_)
        : ValidationError(what_ + " at point " + std::to_string(point_)), point(point_) {}
};

// A point of Z \ {0} is left uncovered by the segment set.
struct ExhaustionError : ValidationError {
    int point;
    ExhaustionError(const std::string& what_, int point_)
        : ValidationError(what_ + " at point " + std::to_string(point_)), point(point_) {}
};

// Text input that does not parse. The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what_, std::size_t position_)
        : std::runtime_error(what_ + " (at offset " + std::to_string(position_) + ")"),
          position(position_) {}
};

}  // namespace simpend
