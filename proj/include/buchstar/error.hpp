/**
 * Exception hierarchy shared by every buchstar module.
 */
#ifndef BUCHSTAR_ERROR_HPP
#define BUCHSTAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace buchstar {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A facet listed a vertex twice.
class MalformedFaceError : public Error { using Error::Error; };

/// A face was requested that does not belong to the complex.
class FaceNotPresentError : public Error { using Error::Error; };

/// An operation was called outside of its domain (e.g. cost of the empty face).
class DomainError : public Error { using Error::Error; };

class UnknownVertexError : public Error { using Error::Error; };

class LabelCollisionError : public Error { using Error::Error; };

/// Matrix or vector dimensions do not agree.
class ShapeError : public Error { using Error::Error; };

class ConstructionError : public Error { using Error::Error; };

/// Coloring or file content failed validation.
class ValidationError : public Error { using Error::Error; };

class ParseError : public Error { using Error::Error; };

class LookupError : public Error { using Error::Error; };

/// Raised when an internal invariant check fails (BUCHSTAR_CHECK_INVARIANTS builds).
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

}   // namespace buchstar

#ifdef BUCHSTAR_CHECK_INVARIANTS
#define BUCHSTAR_INVARIANT(cond, msg)                                          \
    do {                                                                       \
        if (!(cond))                                                           \
            throw ::buchstar::InvariantViolation(std::string("invariant: ") + (msg)); \
    } while (0)
#else
#define BUCHSTAR_INVARIANT(cond, msg) do { } while (0)
#endif

#endif
