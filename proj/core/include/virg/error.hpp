#pragma once

#include <stdexcept>
#include <string>

namespace virg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by zero or inversion of zero.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// A substitution made a denominator vanish.
class SpecializationError : public Error {
public:
    using Error::Error;
};

// Malformed text input (polynomials, algebra elements, configs).
class ParseError : public Error {
public:
    using Error::Error;
};

// Group-theoretic precondition failed (e.g. non-primitive splitting vector).
class GroupError : public Error {
public:
    using Error::Error;
};

// Invalid input to a module construction or decision procedure.
class DomainError : public Error {
public:
    using Error::Error;
};

// A generated index left the configured computation window.
class WindowEscape : public Error {
public:
    using Error::Error;
};

} // namespace virg
