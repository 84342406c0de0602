#pragma once

#include <stdexcept>
#include <string>

namespace onecut {

/// Structural defect in an instance; `kind` names the first violated rule.
class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        SelfLoop,
        ParallelEdge,
        DensityExceeded,
        EdgeNotFound,
        DuplicateCrossingEdge,
        SharedEndpointCrossing,
    };

    ValidationError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
            case Kind::SelfLoop: return "SelfLoop";
            case Kind::ParallelEdge: return "ParallelEdge";
            case Kind::DensityExceeded: return "DensityExceeded";
            case Kind::EdgeNotFound: return "EdgeNotFound";
            case Kind::DuplicateCrossingEdge: return "DuplicateCrossingEdge";
            case Kind::SharedEndpointCrossing: return "SharedEndpointCrossing";
        }
        return "ValidationError";
    }

private:
    Kind kind_;
};

/// Malformed instance text; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Misuse of an operation (unknown node, missing edge, a == b, ...).
class GraphError : public std::runtime_error {
public:
    enum class Kind { UnknownNode, EdgeNotFound, SameNode, NegativeWeight, TooLarge, Unsatisfiable, NotPlanar };

    GraphError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace onecut
