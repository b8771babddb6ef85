#ifndef ALTINV_ERRORS_HPP
#define ALTINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace altinv {

// Malformed textual input (permutations, patterns, Motzkin words, CLI args).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A value fails the precondition of the requested map (e.g. phi on a
// non-involution). The message names the violated precondition.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency guarantee failed (e.g. the rook-placement
// uniqueness search found zero or several candidates). Never caught and
// repaired silently; surfaces as exit code 3 in the CLI.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace altinv

#endif
