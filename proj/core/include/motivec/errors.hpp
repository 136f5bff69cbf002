#pragma once

#include <stdexcept>
#include <string>

namespace motivec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

/// A computation needed terms beyond the retained truncation bound.
class TruncationExceeded : public Error {
public:
    using Error::Error;
};

class InvalidElement : public Error {
public:
    using Error::Error;
};

class ConstantTermError : public Error {
public:
    using Error::Error;
};

class NonUnitLinearTerm : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NegativeTwist : public Error {
public:
    using Error::Error;
};

class NotIdempotent : public Error {
public:
    using Error::Error;
};

class NonSplittable : public Error {
public:
    using Error::Error;
};

class EquidimensionalityViolation : public Error {
public:
    using Error::Error;
};

class InvalidSpace : public Error {
public:
    using Error::Error;
};

} // namespace motivec
