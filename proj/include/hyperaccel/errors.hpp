#pragma once
#include <stdexcept>
#include <string>

namespace hyperaccel {

// Thrown when a rational function is evaluated at a zero of its denominator.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an evaluation is missing a value for some variable.
struct assignment_error : std::runtime_error {
    explicit assignment_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the expression parser on malformed input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a term sequence hits a ratio pole at a live index, or a
// series spec cannot produce well-defined terms.
struct malformed_series_error : std::runtime_error {
    explicit malformed_series_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a target precision is unreachable within the configured term cap.
struct too_slow_error : std::runtime_error {
    explicit too_slow_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when recurrence coefficients are evaluated at a pole, or a
// verification draw cannot be completed.
struct inadmissible_parameters_error : std::runtime_error {
    explicit inadmissible_parameters_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two recurrences over different term families are composed.
struct composition_error : std::runtime_error {
    explicit composition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by estimate_rate when the probe term vanishes.
struct degenerate_index_error : std::runtime_error {
    explicit degenerate_index_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a WZ pair fails shift-compatibility or has unusable support.
struct malformed_pair_error : std::runtime_error {
    explicit malformed_pair_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by check_sum_constant when the support is not finite.
struct unsupported_case_error : std::runtime_error {
    explicit unsupported_case_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on catalog/data-file problems (missing entry, bad format).
struct catalog_error : std::runtime_error {
    explicit catalog_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperaccel
