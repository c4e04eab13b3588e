#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedlie {

enum class ErrorKind {
    IndexOutOfRange,
    DimensionMismatch,
    PartitionMismatch,
    NotHomogeneous,
    InvalidParameter,
    Unsupported,
    NotEigenvector,
    SpanEscape,
    NoRealization,
    Overflow,
    DivisionByZero,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gradedlie
