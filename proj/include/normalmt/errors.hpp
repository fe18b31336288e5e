#pragma once

#include <stdexcept>
#include <string>

namespace nmt {

// Scheme algebra failures.
struct NonCenterable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotExactlyLinear : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoDerivedScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PeriodTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry failures.
struct QuadratureNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotMonotone : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoIntersection : std::runtime_error {
    NoIntersection(const std::string& msg, int lvl = -1, long long idx = -1)
        : std::runtime_error(msg), level(lvl), index(idx) {}
    int level;
    long long index;
};

// Transform-level well-posedness failures; carry the offending location.
struct MonotonicityViolation : std::runtime_error {
    MonotonicityViolation(const std::string& msg, int lvl, long long idx)
        : std::runtime_error(msg), level(lvl), index(idx) {}
    int level;
    long long index;
};
struct DegenerateDifference : std::runtime_error {
    DegenerateDifference(const std::string& msg, int lvl, long long idx)
        : std::runtime_error(msg), level(lvl), index(idx) {}
    int level;
    long long index;
};

// Invalid run configuration (bad degree, shift mismatch, too few points, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace nmt
