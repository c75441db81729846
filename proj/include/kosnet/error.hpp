#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kosnet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed snapshot line. `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string reason) : ParseError({}, line, std::move(reason)) {}
    ParseError(std::string source, std::size_t line, std::string reason)
        : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + reason),
          source_(std::move(source)),
          line_(line),
          reason_(std::move(reason)) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string source_;
    std::size_t line_;
    std::string reason_;
};

/// Dangling reference, missing required field or conflicting values.
class IntegrityError : public Error {
public:
    IntegrityError(std::string iri, std::string reason)
        : Error(iri + ": " + reason), iri_(std::move(iri)), reason_(std::move(reason)) {}

    const std::string& iri() const noexcept { return iri_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string iri_;
    std::string reason_;
};

/// Lookup of an IRI that is not present in the relevant index.
class LookupError : public Error {
public:
    LookupError(const char* what, std::string iri)
        : Error(std::string(what) + ": " + iri), iri_(std::move(iri)) {}

    const std::string& iri() const noexcept { return iri_; }

private:
    std::string iri_;
};

class UnknownConcept : public LookupError {
public:
    explicit UnknownConcept(std::string iri) : LookupError("unknown concept", std::move(iri)) {}
};

class UnknownAuthor : public LookupError {
public:
    explicit UnknownAuthor(std::string iri) : LookupError("unknown author", std::move(iri)) {}
};

class UnknownPaper : public LookupError {
public:
    explicit UnknownPaper(std::string iri) : LookupError("unknown paper", std::move(iri)) {}
};

/// A keyword that normalizes to the empty string.
class EmptyKey : public Error {
public:
    explicit EmptyKey(std::string keyword)
        : Error("keyword has an empty normalized key: \"" + keyword + "\""), keyword_(std::move(keyword)) {}

    const std::string& keyword() const noexcept { return keyword_; }

private:
    std::string keyword_;
};

/// Invalid configuration value (weights, thresholds, paths).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace kosnet
