#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hmeans {

/// Exact arbitrary-precision rational, always reduced with positive
/// denominator (the backend canonicalises on every operation).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Generalised binomial coefficient q(q-1)...(q-k+1)/k! for rational q.
/// k < 0 yields 0 (the empty lower-index convention the identities rely on).
Rational binom_general(const Rational& q, int k);

/// b^e for any integer e; negative e inverts (b must be nonzero then).
Rational rational_pow(const Rational& b, int e);

/// Parses "num", "num/den", with optional leading '-'. Locale independent.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

} // namespace hmeans
