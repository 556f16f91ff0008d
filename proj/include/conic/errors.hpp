#pragma once

#include <stdexcept>
#include <string>

namespace conic {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeGuard : std::runtime_error {
    explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

struct Singular : std::runtime_error {
    explicit Singular(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

struct NotInCone : std::runtime_error {
    explicit NotInCone(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousProjection : std::runtime_error {
    explicit AmbiguousProjection(const std::string& what) : std::runtime_error(what) {}
};

struct DecompositionSingular : std::runtime_error {
    explicit DecompositionSingular(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedKind : std::runtime_error {
    explicit UnsupportedKind(const std::string& what) : std::runtime_error(what) {}
};

struct NotReadOnce : std::invalid_argument {
    explicit NotReadOnce(const std::string& what) : std::invalid_argument(what) {}
};

struct NonOrthogonalTransform : std::invalid_argument {
    explicit NonOrthogonalTransform(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line = -1, int col = -1)
        : std::runtime_error(what), line(line), col(col) {}
    int line;
    int col;
};

} // namespace conic
