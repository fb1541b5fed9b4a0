// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace authorid {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document (XML or plain). Carries a 1-based line and,
// for XML, a column; column is 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A plain-format line that does not follow `author<TAB>text`.
class FormatError : public ParseError {
public:
    FormatError(const std::string& what, std::size_t line) : ParseError(what, line) {}
};

// Ingestion produced zero records.
class EmptyCorpusError : public Error {
public:
    using Error::Error;
};

// An author (or the corpus) does not have enough records for the requested
// operation. The message names the author and the stage that failed.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// An author's merged training profile contains no tokens.
class EmptyProfileError : public Error {
public:
    using Error::Error;
};

// Query profile with zero tokens passed to attribution.
class EmptyQueryError : public Error {
public:
    using Error::Error;
};

// Attribution against a model with no authors.
class EmptyModelError : public Error {
public:
    using Error::Error;
};

// Cosine similarity of a zero vector is undefined.
class UndefinedSimilarityError : public Error {
public:
    using Error::Error;
};

// Invalid experiment or ingestion configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace authorid
