#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seshadri {

/// Two classes live on blow-ups at different numbers of points.
struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two irrational scalars over different radicands met in one computation.
struct RadicandMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured class-count or iteration limit was hit. Results are never truncated silently.
struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed divisor text. `position` is 0 for the degree, i for the i-th multiplicity.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position(position) {}
    std::size_t position;
};

}  // namespace seshadri
