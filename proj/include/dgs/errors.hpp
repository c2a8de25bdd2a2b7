#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgs {

// Malformed textual input (graph6, adjacency text, Q files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A question the library cannot answer honestly, e.g. square-freeness of a
// number whose factorization has a composite residual.
class IndeterminateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dgs
