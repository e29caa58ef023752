#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hmeans {

/// Dense monomial-basis polynomial utilities (coeffs[i] multiplies x^i).
/// Degrees stay small (<= ~12) in every caller, so plain convolution is fine.
namespace poly {

inline std::vector<double> add(const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> r(std::max(p.size(), q.size()), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    return r;
}

inline std::vector<double> scale(std::vector<double> p, double c) {
    for (double& v : p) v *= c;
    return p;
}

inline std::vector<double> mul(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<double> r(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

/// (x + c)^k
inline std::vector<double> linear_power(double c, int k) {
    std::vector<double> r{1.0};
    for (int i = 0; i < k; ++i) r = mul(r, {c, 1.0});
    return r;
}

inline double eval(const std::vector<double>& p, double x) {
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

/// Quotient and remainder of p by the monic-normalised divisor d.
inline std::pair<std::vector<double>, std::vector<double>> divmod(std::vector<double> p,
                                                                  const std::vector<double>& d) {
    if (d.empty() || d.back() == 0.0) throw std::invalid_argument("poly::divmod: bad divisor");
    if (p.size() < d.size()) return {{}, std::move(p)};
    std::vector<double> q(p.size() - d.size() + 1, 0.0);
    for (std::size_t i = q.size(); i-- > 0;) {
        double f = p[i + d.size() - 1] / d.back();
        q[i] = f;
        for (std::size_t j = 0; j < d.size(); ++j) p[i + j] -= f * d[j];
    }
    p.resize(d.size() - 1);
    return {std::move(q), std::move(p)};
}

} // namespace poly

} // namespace hmeans
