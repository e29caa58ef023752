#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace hmeans {

/// Variable-precision real; the working precision is whatever
/// default_precision was when a value got constructed.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Sets the thread's default BigFloat precision (in decimal digits) for the
/// lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(static_cast<unsigned>(digits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

} // namespace hmeans
