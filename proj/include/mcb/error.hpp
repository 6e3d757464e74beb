#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcb {

enum class ErrorKind {
    InterfaceMismatch,
    SupportOverlap,
    NameClash,
    EmptyBigraph,
    EmptyInput,
    InvalidMapping,
    ReconstructionMismatch,
    SaturationBroke,
    CapExceeded,
    SyntaxError,
    ValidationError,
    NonSolid,
    InfeasibleParams,
};

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorKind::SupportOverlap: return "SupportOverlap";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::EmptyBigraph: return "EmptyBigraph";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidMapping: return "InvalidMapping";
    case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorKind::SaturationBroke: return "SaturationBroke";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NonSolid: return "NonSolid";
    case ErrorKind::InfeasibleParams: return "InfeasibleParams";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    auto kind() const -> ErrorKind { return kind_; }

private:
    ErrorKind kind_;
};

}
