#pragma once

#include <stdexcept>
#include <string>

namespace hifi {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid pipeline configuration (violated flag dependency, bad count).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Unknown template id or missing placeholder binding.
class TemplateError : public Error {
public:
    using Error::Error;
};

// extract_json_array failures.
class JsonArrayError : public Error {
public:
    enum class Kind { no_array_found, malformed_array };

    JsonArrayError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Replay-mode request had no matching fixture.
class ReplayMissError : public Error {
public:
    using Error::Error;
};

// Transport-level failure (connect, TLS, non-2xx status). Retryable.
class NetworkError : public Error {
public:
    using Error::Error;
};

// Model-call failure that survives retries (empty response, bad payload).
class ModelError : public Error {
public:
    using Error::Error;
};

// Search-quota exhaustion. Not retryable.
class QuotaError : public Error {
public:
    using Error::Error;
};

// Page fetch failed (HTTP error status, timeout, corrupt cache entry).
class FetchError : public Error {
public:
    using Error::Error;
};

// Reddit thread no longer exists.
class ThreadDeletedError : public FetchError {
public:
    using FetchError::FetchError;
};

// Document yielded no extractable text or structure.
class ParseError : public Error {
public:
    using Error::Error;
};

// Dataset / prediction / report file problems (malformed line, duplicate id).
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace hifi
