#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace listrank {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (bad field count, bad numbers, invalid UTF-8).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a data invariant (duplicate ids, conflicting grades).
class DataError : public Error {
public:
    using Error::Error;
};

// Invalid configuration or parameter values.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Prompt cannot fit the token budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Transport failure or retry exhaustion talking to a completion backend.
class BackendError : public Error {
public:
    using Error::Error;
};

// Backend reachable but its response does not match the expected wire format.
class ProtocolError : public Error {
public:
    using Error::Error;
};

} // namespace listrank
