#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ethsee {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (signatures, confusables files, bundles).
class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t line = 0) : Error(what), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

/// Input is not valid UTF-8; carries the byte offset of the bad sequence.
class Utf8Error : public Error {
public:
    Utf8Error(const std::string& what, size_t byte_offset)
        : Error(what), byte_offset_(byte_offset) {}
    size_t byte_offset() const { return byte_offset_; }

private:
    size_t byte_offset_;
};

/// Raised by preprocess when an input holds no Solidity content.
class SkippedUnit : public Error {
public:
    using Error::Error;
};

/// HTTP transport failure after retries were exhausted.
class TransportError : public Error {
public:
    using Error::Error;
};

}  // namespace ethsee
