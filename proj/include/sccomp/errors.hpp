#pragma once

#include <stdexcept>
#include <string>

namespace sccomp {

// Malformed input: bad vertex indices, loops, duplicate arcs, broken files.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A theorem hypothesis does not hold for the given instance.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact-search refusal: the instance exceeds the configured exhaustive bound.
struct ScaleError : std::runtime_error {
    explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed construction failed where the theorem guarantees success.
// Firing one of these means either a bug or a genuine theorem violation.
struct VerificationAlarm : std::logic_error {
    explicit VerificationAlarm(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sccomp
