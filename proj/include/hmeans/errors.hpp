#pragma once

#include <stdexcept>
#include <string>

namespace hmeans {

/// Raised when f^(n+1) vanishes (or changes sign) on the interval, so the
/// defining equation has no guaranteed unique root.
class undefined_mean_error : public std::domain_error {
public:
    explicit undefined_mean_error(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an internal invariant that the theory guarantees fails to
/// hold numerically (bad bracket, zero denominator in a closed form, ...).
/// Indicates a bug in a divided-difference or closed-form path, not bad input.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace hmeans
