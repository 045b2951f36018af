#pragma once

#include <stdexcept>
#include <string>

namespace tge {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations on caller-supplied values (negative weight, bad config).
struct ValidationError : Error {
    using Error::Error;
};

// Unknown node / edge / address lookups.
struct LookupError : Error {
    using Error::Error;
};

// Malformed input files or payloads.
struct FormatError : Error {
    using Error::Error;
};

// Remote fetch failed after retries.
struct FetchError : Error {
    using Error::Error;
};

}  // namespace tge
