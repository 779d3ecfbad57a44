#ifndef GALMANN_ERRORS_HPP
#define GALMANN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galmann {

/// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: expression syntax, curve files, flag combinations.
/// The CLI maps this family to exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// Expression text rejected by the parser; `offset` is the byte position
/// at which the problem was detected.
struct ParseError : InputError {
    std::size_t offset;

    ParseError(const std::string& what, std::size_t offset_)
        : InputError(what + " at offset " + std::to_string(offset_)),
          offset(offset_) {}
};

/// Evaluation left the mathematical domain (log of a non-positive value,
/// abs at a sign change, vanishing curvature, ...).  The CLI maps this
/// family to exit code 3.
struct DomainError : Error {
    using Error::Error;
};

/// Domain error raised while evaluating an expression; carries the
/// offending subexpression and the evaluation point.
struct EvalDomainError : DomainError {
    std::string node;
    double s;

    EvalDomainError(const std::string& what, std::string node_, double s_)
        : DomainError(what + " in '" + node_ + "' at s=" + std::to_string(s_)),
          node(std::move(node_)),
          s(s_) {}
};

/// A geometric quantity degenerated below tolerance: vanishing curvature,
/// lightlike acceleration, zero hyperbolic-angle sine.
struct DegenerateError : DomainError {
    double s;

    DegenerateError(const std::string& what, double s_)
        : DomainError(what + " at s=" + std::to_string(s_)), s(s_) {}
};

} // namespace galmann

#endif
