#pragma once

#include <stdexcept>
#include <string>

namespace qmoment {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Inverting a series whose constant term vanishes.
struct NonUnitSeries : std::domain_error {
    explicit NonUnitSeries(const std::string& what) : std::domain_error(what) {}
};

// A matrix violates an assumed shape (e.g. nonzero entry where parity forces zero).
struct StructureError : std::logic_error {
    explicit StructureError(const std::string& what) : std::logic_error(what) {}
};

struct InsufficientMoments : std::invalid_argument {
    explicit InsufficientMoments(const std::string& what) : std::invalid_argument(what) {}
};

// Eigenvalue-series extraction failed (degenerate cofactor or inconsistent traces).
struct ExtractionError : std::runtime_error {
    explicit ExtractionError(const std::string& what) : std::runtime_error(what) {}
};

// A square-root bookkeeping tag survived where a rational value was required.
struct SurvivingRootTag : std::logic_error {
    explicit SurvivingRootTag(const std::string& what) : std::logic_error(what) {}
};

} // namespace qmoment
