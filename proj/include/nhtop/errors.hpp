#pragma once

#include <stdexcept>
#include <string>

namespace nhtop {

// Named error conditions. Everything derives from std::runtime_error or
// std::invalid_argument so callers can catch broadly or by condition.

struct NonFiniteInput : std::invalid_argument {
    explicit NonFiniteInput(const std::string& what) : std::invalid_argument(what) {}
};

struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NotAntisymmetric : std::invalid_argument {
    explicit NotAntisymmetric(const std::string& what) : std::invalid_argument(what) {}
};

struct OddDimension : std::invalid_argument {
    explicit OddDimension(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct AsymmetricGrid : std::invalid_argument {
    explicit AsymmetricGrid(const std::string& what) : std::invalid_argument(what) {}
};

struct ConflictingCandidates : std::runtime_error {
    explicit ConflictingCandidates(const std::string& what) : std::runtime_error(what) {}
};

struct WrongSquareSign : std::invalid_argument {
    explicit WrongSquareSign(const std::string& what) : std::invalid_argument(what) {}
};

struct NonPositiveHopping : std::invalid_argument {
    explicit NonPositiveHopping(const std::string& what) : std::invalid_argument(what) {}
};

struct TooFewSites : std::invalid_argument {
    explicit TooFewSites(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownModelKind : std::invalid_argument {
    explicit UnknownModelKind(const std::string& what) : std::invalid_argument(what) {}
};

struct GapClosedAtTrim : std::runtime_error {
    explicit GapClosedAtTrim(const std::string& what) : std::runtime_error(what) {}
};

struct PfaffianMismatch : std::runtime_error {
    explicit PfaffianMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantPathMismatch : std::runtime_error {
    explicit InvariantPathMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParityNotQuantized : std::runtime_error {
    explicit ParityNotQuantized(const std::string& what) : std::runtime_error(what) {}
};

struct GaplessRegion : std::invalid_argument {
    explicit GaplessRegion(const std::string& what) : std::invalid_argument(what) {}
};

struct WrongGeometry : std::invalid_argument {
    explicit WrongGeometry(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigParseError : std::runtime_error {
    explicit ConfigParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nhtop
