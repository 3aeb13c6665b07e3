#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gt {

// Bad textual input. `position` is the 0-based byte offset of the offending
// token when known, std::string::npos otherwise.
struct ParseError : std::runtime_error {
    std::size_t position;
    explicit ParseError(const std::string& msg, std::size_t pos = std::string::npos)
        : std::runtime_error(pos == std::string::npos
                                 ? msg
                                 : msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Structurally invalid values (wrong puncture index, zero-length edge, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A curve configuration violated a transversality requirement (touching
// segments, triple point, crossing through a vertex or a puncture).
// Synthesized curves are supposed to be generic, so seeing this from a
// library-built curve is a bug, not a user error.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (two routes to the same value disagree,
// a skein word-part that must vanish does not, ...).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gt
