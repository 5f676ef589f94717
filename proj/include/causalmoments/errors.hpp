#ifndef CAUSALMOMENTS_ERRORS_HPP
#define CAUSALMOMENTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace causalmoments {

// Malformed cell content while reading an input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Required column missing or header malformed.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a data invariant (non-finite outcome, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A referenced treatment arm or covariate stratum has no observations.
struct NoDataError : std::runtime_error {
    explicit NoDataError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent or unusable estimation settings.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The estimate is numerically unusable (e.g. severely inverted interval).
struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

// Resampling could not produce any usable replicate.
struct BootstrapError : std::runtime_error {
    explicit BootstrapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace causalmoments

#endif
