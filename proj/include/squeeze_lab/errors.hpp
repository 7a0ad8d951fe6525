#pragma once

#include <stdexcept>
#include <string>

#include "squeeze_lab/types.hpp"

namespace squeeze_lab {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The bisection bracket did not contain the gauge crossing.
struct BracketingFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Certificate search exhausted its iteration budget without a verdict.
struct CertificateSearchFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyCompactSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sublevel-set sample violated the origin-certificate claim; carries the point.
struct CertificationFailed : std::runtime_error {
    Point2C point;
    CertificationFailed(const std::string& what, const Point2C& p)
        : std::runtime_error(what), point(p) {}
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace squeeze_lab
