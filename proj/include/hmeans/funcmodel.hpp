#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmeans/errors.hpp"

namespace hmeans {

enum class FuncKind { power, log_power, exponential, shifted };

/// A function f on (0, inf) with closed-form derivatives of every order.
///
/// Derivatives are always evaluated analytically per kind; finite differences
/// appear only in tests, because divided-difference tables amplify any
/// derivative error. A positive `scale` multiplies every derivative uniformly
/// and leaves the induced mean unchanged, which makes it usable as an
/// overflow normalisation for large exponents.
class FunctionModel {
public:
    static FunctionModel power(double p) {
        FunctionModel m;
        m.kind_ = FuncKind::power;
        m.exponent_ = p;
        return m;
    }

    static FunctionModel log_power(int k) {
        if (k < 0) throw std::invalid_argument("log_power: degree must be >= 0");
        FunctionModel m;
        m.kind_ = FuncKind::log_power;
        m.log_degree_ = k;
        return m;
    }

    static FunctionModel exponential() {
        FunctionModel m;
        m.kind_ = FuncKind::exponential;
        return m;
    }

    /// base plus a polynomial offset given by monomial coefficients
    /// (offset[i] multiplies x^i). Exists to exercise the invariance of the
    /// mean under adding polynomials of degree <= n.
    static FunctionModel shifted(FunctionModel base, std::vector<double> offset) {
        FunctionModel m;
        m.kind_ = FuncKind::shifted;
        m.base_ = std::make_shared<FunctionModel>(std::move(base));
        m.offset_ = std::move(offset);
        return m;
    }

    /// Same model with every derivative multiplied by c > 0.
    FunctionModel scaled(double c) const {
        if (!(c > 0)) throw std::invalid_argument("scale must be positive");
        FunctionModel m = *this;
        m.scale_ *= c;
        return m;
    }

    FuncKind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    int log_degree() const { return log_degree_; }
    double scale() const { return scale_; }
    const FunctionModel& base() const { return *base_; }
    const std::vector<double>& offset() const { return offset_; }

    std::string describe() const;

    template <class Real>
    Real derivative(const Real& x, int j) const;

private:
    FunctionModel() = default;

    FuncKind kind_ = FuncKind::power;
    double exponent_ = 0.0;
    int log_degree_ = 0;
    double scale_ = 1.0;
    std::shared_ptr<const FunctionModel> base_;
    std::vector<double> offset_;
};

namespace detail {

template <class Real>
bool finite_value(const Real& x) {
    using std::isfinite;
    return isfinite(x);
}

/// p(p-1)...(p-j+1) as a Real.
template <class Real>
Real falling_factorial(const Real& p, int j) {
    Real r(1);
    for (int i = 0; i < j; ++i) r *= (p - i);
    return r;
}

template <class Real>
Real power_deriv(double p, const Real& x, int j) {
    using std::pow;
    Real pe(p);
    return falling_factorial(pe, j) * pow(x, pe - j);
}

// d^j/dx^j [x^k log x].  For j > k the log term is gone and the closed form
// (-1)^(j-k-1) k! (j-k-1)! x^(k-j) applies; for j <= k the pair (P, Q) with
// f^(j) = P x^(k-j) log x + Q x^(k-j) obeys P' = (k-i)P, Q' = P + (k-i)Q.
template <class Real>
Real log_power_deriv(int k, const Real& x, int j) {
    using std::log;
    using std::pow;
    if (j > k) {
        Real coef(1);
        for (int i = 2; i <= k; ++i) coef *= i;
        for (int i = 2; i <= j - k - 1; ++i) coef *= i;
        if ((j - k - 1) % 2 != 0) coef = -coef;
        return coef * pow(x, k - j);
    }
    Real lead(1), tail(0);
    for (int i = 0; i < j; ++i) {
        Real next_tail = lead + (k - i) * tail;
        lead *= (k - i);
        tail = next_tail;
    }
    return (lead * log(x) + tail) * pow(x, k - j);
}

template <class Real>
Real poly_deriv(const std::vector<double>& coeffs, const Real& x, int j) {
    using std::pow;
    Real sum(0);
    for (int i = j; i < static_cast<int>(coeffs.size()); ++i) {
        Real term(coeffs[static_cast<std::size_t>(i)]);
        for (int t = 0; t < j; ++t) term *= (i - t);
        sum += term * pow(x, i - j);
    }
    return sum;
}

} // namespace detail

template <class Real>
Real FunctionModel::derivative(const Real& x, int j) const {
    using std::exp;
    Real raw(0);
    switch (kind_) {
        case FuncKind::power: raw = detail::power_deriv<Real>(exponent_, x, j); break;
        case FuncKind::log_power: raw = detail::log_power_deriv<Real>(log_degree_, x, j); break;
        case FuncKind::exponential: raw = exp(x); break;
        case FuncKind::shifted:
            raw = base_->derivative(x, j) + detail::poly_deriv(offset_, x, j);
            break;
    }
    return scale_ * raw;
}

/// f^(j)(x). Throws std::domain_error for x <= 0 and std::range_error if the
/// value overflows to a non-finite number (never returned silently).
template <class Real>
Real eval_deriv(const FunctionModel& model, const Real& x, int j) {
    if (j < 0) throw std::invalid_argument("eval_deriv: negative order");
    if (!(x > 0)) throw std::domain_error("eval_deriv: requires x > 0");
    Real v = model.derivative(x, j);
    if (!detail::finite_value(v)) throw std::range_error("eval_deriv: non-finite value");
    return v;
}

/// Constant sign of f^(n+1) on (a, b): +1 or -1 when provable analytically,
/// std::nullopt when a 64-point sample detects a zero or a sign change.
std::optional<int> nonvanishing_sign(const FunctionModel& model, int n, double a, double b);

/// Like nonvanishing_sign but a failure throws undefined_mean_error naming
/// the offending exponent.
int check_nonvanishing(const FunctionModel& model, int n, double a, double b);

/// Parses the CLI literal syntax: power:<p>, logpower:<k>, exp.
/// Locale independent; rejects trailing garbage.
FunctionModel parse_model(std::string_view text);

} // namespace hmeans
