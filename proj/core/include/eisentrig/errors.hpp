#ifndef EISENTRIG_ERRORS_HPP
#define EISENTRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eisentrig
{

// Base of every error the library raises deliberately.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Contradictory or out-of-range configuration (precision, tolerance, order).
class ConfigError : public Error
{
public:
    using Error::Error;
};

// An argument outside an operation's documented domain.
class DomainError : public Error
{
public:
    using Error::Error;
};

// The evaluation point lies within the pole guard of an integer.
class PoleProximityError : public Error
{
public:
    using Error::Error;
};

// The requested absolute tolerance cannot be met: the term cap was hit, or
// rounding at the working precision swamps the target.
class ToleranceUnreachableError : public Error
{
public:
    using Error::Error;
};

// |f(z)| does not exceed its own error radius, so 1/f cannot be bounded.
class InconclusiveNonvanishingError : public Error
{
public:
    using Error::Error;
};

} // namespace eisentrig

#endif
