#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termalg {

// Base class of every error raised by the library. Verdicts such as "not
// equivalent" or "not independent" are returned as values, never thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    enum class Kind { not_a_term, unknown_symbol };

    ParseError(Kind kind, std::size_t offset, const std::string& what)
        : Error(what), kind_(kind), offset_(offset) {}

    Kind kind() const noexcept { return kind_; }
    // Byte offset into the input of the first violation.
    std::size_t offset() const noexcept { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

class InvalidPosition : public Error {
public:
    using Error::Error;
};

class RedexMismatch : public Error {
public:
    using Error::Error;
};

class MissingArgument : public Error {
public:
    using Error::Error;
};

class FlavorMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class WidthMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotDisjoint : public Error {
public:
    NotDisjoint(std::size_t i, std::size_t j)
        : Error("events " + std::to_string(i) + " and " + std::to_string(j) + " are not disjoint"),
          first(i), second(j) {}

    std::size_t first;
    std::size_t second;
};

class VerticesOverlap : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class UnknownEdge : public Error {
public:
    using Error::Error;
};

} // namespace termalg
