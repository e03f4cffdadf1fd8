#pragma once

#include <stdexcept>
#include <string>

namespace simpdelta {

// Base of every error the library throws. Each subclass names one contract
// violation; callers that only care about "it failed" catch Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A generator index exceeds the degree it is applied to.
class OutOfRange : public Error {
public:
    using Error::Error;
};

// Two EM transforms with different index functions were added or compared.
class IndexMismatch : public Error {
public:
    using Error::Error;
};

// A result would leave the truncated range of a finite model.
class TruncationOverflow : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class BadRange : public Error {
public:
    using Error::Error;
};

class NotNormalizedCycle : public Error {
public:
    using Error::Error;
};

class NotACycle : public Error {
public:
    using Error::Error;
};

class UnknownRelation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace simpdelta
