#pragma once

#include <stdexcept>
#include <string>

namespace covnum {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file or stream.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An exact search or enumeration was refused because the instance is
/// larger than the configured limit.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

} // namespace covnum
