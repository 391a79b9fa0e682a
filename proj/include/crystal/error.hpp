#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crystal {

enum class ErrorKind {
    BadColorCount,
    OddVertexCount,
    VertexOutOfRange,
    FixedPoint,
    NotInvolution,
    Disconnected,
    ColorOutOfRange,
    DimMismatch,
    NotAPermutation,
    NotContracted,
    RankInconsistent,
    NotAManifoldCrystallization,
    BettiEulerMismatch,
    BettiNotSymmetric,
    RankTooSmall,
    UnsupportedDimension,
    NotCertified,
    ConfigInvalid,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::BadColorCount: return "BadColorCount";
    case ErrorKind::OddVertexCount: return "OddVertexCount";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::FixedPoint: return "FixedPoint";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotContracted: return "NotContracted";
    case ErrorKind::RankInconsistent: return "RankInconsistent";
    case ErrorKind::NotAManifoldCrystallization: return "NotAManifoldCrystallization";
    case ErrorKind::BettiEulerMismatch: return "BettiEulerMismatch";
    case ErrorKind::BettiNotSymmetric: return "BettiNotSymmetric";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Raised for every contract violation in the library. The kind names the
/// violated condition; what() carries a one-line human diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace crystal
