#pragma once

#include <stdexcept>
#include <string>

namespace holosg {

// Root of every error the library throws. The CLI maps subclasses onto exit
// codes, so each subclass corresponds to one failure class.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point was required to lie inside a domain and does not.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A denominator fell below the pole threshold during evaluation.
class PoleError : public Error {
public:
    using Error::Error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

/// An iterative procedure failed to reach its tolerance.
class ToleranceError : public Error {
public:
    using Error::Error;
};

/// The step size underflowed while the trajectory was far from the boundary.
class StiffnessError : public Error {
public:
    using Error::Error;
};

/// A flow that had to stay inside its domain left it.
class EscapeError : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// A function expected to have nonnegative real part does not on the sample grid.
class HerglotzError : public Error {
public:
    using Error::Error;
};

/// Malformed text input: symbol grammar, domain or space descriptors.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace holosg
