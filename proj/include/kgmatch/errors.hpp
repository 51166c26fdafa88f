#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgmatch {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input line in a parsed file (N-Triples, alignment TSV, ...).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A value outside its permitted domain (confidence range, bad config, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

// Entity or source lookups that cannot be resolved.
class LookupError : public Error {
public:
    using Error::Error;
};

// Strategy planning failures.
class PlanError : public Error {
public:
    using Error::Error;
};

// Merge failures (e.g. an alignment mapping one entity to two targets).
class MergeError : public Error {
public:
    using Error::Error;
};

// Failures of a binary matcher invocation.
class MatcherError : public Error {
public:
    enum class Kind {
        Timeout,
        NonZeroExit,
        InvalidOutput,
        ForeignEntity,
        WarmStartUnsupported,
    };

    MatcherError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace kgmatch
