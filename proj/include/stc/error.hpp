#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stc {

enum class ErrorCode {
    InvalidGraph,
    WrongEdgeCount,
    ContainsCycle,
    NotSpanning,
    SameVertex,
    Disconnected,
    TreeGraphMismatch,
    EmptyVector,
    RemoveNotOnCycle,
    InsertAlreadyInTree,
    EdgesCross,
    MissingCoordinates,
    NotSpanningDual,
    NotCactus,
    NoBoundaryEdges,
    EmptyCandidates,
    ExactModeOnWeighted,
    TooLarge,
    InvalidParams,
    DisconnectedSample,
    ZeroWeight,
    KindFamilyMismatch,
    NoFormula,
    CapExceeded,
    NotPlanar,
    Parse,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type; `code()`
/// names the violated precondition so callers (the CLI in particular) can map
/// failures to exit statuses without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown by the enumeration oracle; carries the matrix-tree estimate.
class CapExceededError : public Error {
public:
    CapExceededError(double expected, double cap)
        : Error(ErrorCode::CapExceeded,
                "graph has about " + shortest(expected) + " spanning trees (cap " + shortest(cap) + ")"),
          expected_(expected)
    {
    }

    double expected_count() const noexcept { return expected_; }

private:
    static std::string shortest(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    double expected_;
};

}  // namespace stc
