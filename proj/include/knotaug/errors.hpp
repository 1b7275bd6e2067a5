#ifndef KNOTAUG_ERRORS_HPP
#define KNOTAUG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotaug {

/// Caller broke an interface contract (mismatched rings, bad flag, ...).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but outside the mathematical domain of the operation.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// An element violated a structural hypothesis (e.g. the left-linear star shape).
struct structure_error : std::runtime_error {
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that was expected to hold exactly did not.
struct verification_failure : std::runtime_error {
    explicit verification_failure(const std::string& what) : std::runtime_error(what) {}
};

/// A configured work budget was exhausted.
struct resource_error : std::runtime_error {
    resource_error(const std::string& what, unsigned long long needed)
        : std::runtime_error(what), required(needed) {}
    unsigned long long required;
};

} // namespace knotaug

#endif
