#include "gradedlie/error.hpp"

namespace gradedlie {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::IndexOutOfRange: return "index_out_of_range";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::PartitionMismatch: return "partition_mismatch";
    case ErrorKind::NotHomogeneous: return "not_homogeneous";
    case ErrorKind::InvalidParameter: return "invalid_parameter";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NotEigenvector: return "not_eigenvector";
    case ErrorKind::SpanEscape: return "span_escape";
    case ErrorKind::NoRealization: return "no_realization";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

} // namespace gradedlie
