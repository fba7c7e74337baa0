#ifndef CRITLINE_ERRORS_HPP
#define CRITLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace critline {

/* Bad user input (CLI exit code 2). */
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Structurally valid input outside an operation's domain (exit code 3). */
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct RejectScale : DomainError {
    RejectScale() : DomainError("RejectScale: scale must be nonzero") {}
};
struct RejectC : DomainError {
    explicit RejectC(std::string const& which)
        : DomainError("RejectC: c = " + which + " is below 1/4") {}
};
struct DegreeMismatch : DomainError {
    explicit DegreeMismatch(std::string const& what) : DomainError("DegreeMismatch: " + what) {}
};
struct NotCLError : DomainError {
    explicit NotCLError(std::string const& what) : DomainError("NotCL: " + what) {}
};
struct OutOfRange : DomainError {
    explicit OutOfRange(std::string const& what) : DomainError("OutOfRange: " + what) {}
};
struct MissingReference : DomainError {
    explicit MissingReference(std::string const& what)
        : DomainError("MissingReference: " + what) {}
};

/* A computation contradicted a verified claim; should never fire (exit
 * code 4).
 */
struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace critline

#endif
