#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ncq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

// Raised by inversion. When the failing matrix is a factor of a shifted
// factorial, block/pair carry its position (block = shift index m, pair = i).
class Singular : public Error {
public:
    explicit Singular(const std::string& what,
                      std::optional<long long> block = std::nullopt,
                      std::optional<std::size_t> pair = std::nullopt)
        : Error(what), block_(block), pair_(pair) {}

    std::optional<long long> block() const { return block_; }
    std::optional<std::size_t> pair() const { return pair_; }

private:
    std::optional<long long> block_;
    std::optional<std::size_t> pair_;
};

class NonConvergent : public Error {
public:
    using Error::Error;
};

class TermCapExceeded : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

class ConstraintViolated : public Error {
public:
    using Error::Error;
};

class ExhaustedRetries : public Error {
public:
    using Error::Error;
};

class BadConfig : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ncq
