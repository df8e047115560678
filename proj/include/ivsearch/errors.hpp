#pragma once

#include <stdexcept>
#include <string>

namespace ivsearch {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed queries, unknown ids, missing slots. CLI exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

struct WrongDesignError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownTemplateError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownFixtureError : ValidationError {
    using ValidationError::ValidationError;
};

struct MissingSlotError : ValidationError {
    using ValidationError::ValidationError;
};

struct MixedQueryError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownFormatError : ValidationError {
    using ValidationError::ValidationError;
};

/// Backend-side failures: transport, rate limits, replay misses, unusable
/// model output. CLI exit code 2.
struct BackendError : Error {
    using Error::Error;
};

struct TransportError : BackendError {
    using BackendError::BackendError;
};

struct RateLimitError : BackendError {
    RateLimitError(const std::string& what, double retry_after_s)
        : BackendError(what), retry_after_seconds(retry_after_s) {}
    double retry_after_seconds = 0.0;
};

struct ReplayMissError : BackendError {
    explicit ReplayMissError(const std::string& hash)
        : BackendError("replay miss: no recorded response for request hash " + hash),
          request_hash(hash) {}
    std::string request_hash;
};

/// The reply contained nothing recognizable as a candidate list.
struct EmptyParseError : BackendError {
    using BackendError::BackendError;
};

}  // namespace ivsearch
