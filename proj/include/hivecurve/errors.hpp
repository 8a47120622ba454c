#pragma once

#include <stdexcept>
#include <string>

namespace hivecurve {

enum class ErrorKind {
    DimensionMismatch,
    NotDecreasing,
    NotAHive,
    NotHermitian,
    NotPositiveDefinite,
    NoConvergence,
    NotInvertible,
    ProductNotIdentity,
    ZeroPolynomial,
    NonRealEdgeRoots,
    DegenerateRestriction,
    NonpositiveCoefficient,
    NotHiveDual,
    NotATriangulation,
    DanglingSegment,
    NotAPath,
    CornerCoefficientZero,
    InvalidArgument,
    SchemaError,
    Internal,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::NotAHive: return "NotAHive";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ProductNotIdentity: return "ProductNotIdentity";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonRealEdgeRoots: return "NonRealEdgeRoots";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::NonpositiveCoefficient: return "NonpositiveCoefficient";
    case ErrorKind::NotHiveDual: return "NotHiveDual";
    case ErrorKind::NotATriangulation: return "NotATriangulation";
    case ErrorKind::DanglingSegment: return "DanglingSegment";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::CornerCoefficientZero: return "CornerCoefficientZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace hivecurve
