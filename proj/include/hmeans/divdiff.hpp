#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hmeans/funcmodel.hpp"

namespace hmeans {

/// Ordered multiset of interpolation nodes. Adding a value that is already
/// present merges into that entry's multiplicity, so two entries never carry
/// equal node values.
class ConfluentNodes {
public:
    ConfluentNodes() = default;

    ConfluentNodes(std::initializer_list<std::pair<double, int>> entries) {
        for (const auto& [x, m] : entries) add(x, m);
    }

    void add(double x, int multiplicity) {
        if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
        for (auto& e : entries_) {
            if (e.first == x) {
                e.second += multiplicity;
                return;
            }
        }
        entries_.emplace_back(x, multiplicity);
    }

    const std::vector<std::pair<double, int>>& entries() const { return entries_; }

    int total_multiplicity() const {
        int t = 0;
        for (const auto& e : entries_) t += e.second;
        return t;
    }

    /// Total multiplicity minus one: the order of the divided difference.
    int order() const { return total_multiplicity() - 1; }

    /// Each node repeated by its multiplicity, sorted ascending.
    std::vector<double> flattened_sorted() const {
        auto sorted = entries_;
        std::sort(sorted.begin(), sorted.end());
        std::vector<double> z;
        z.reserve(static_cast<std::size_t>(total_multiplicity()));
        for (const auto& [x, m] : sorted)
            for (int i = 0; i < m; ++i) z.push_back(x);
        return z;
    }

private:
    std::vector<std::pair<double, int>> entries_;
};

/// Triangular table of confluent divided differences f[z_i, ..., z_{i+j}]
/// over the flattened, ascending node list. Repeated-node entries are filled
/// with f^(j)(z)/j! before any subtraction happens, so the confluent blocks
/// are exact up to the derivative evaluation itself.
template <class Real>
class DividedDifferenceTable {
public:
    DividedDifferenceTable(const FunctionModel& model, const std::vector<Real>& nodes)
        : z_(nodes), n_(nodes.size()) {
        if (n_ == 0) throw std::invalid_argument("divided difference needs at least one node");
        data_.resize(n_ * n_, Real(0));
        std::vector<Real> factorial(n_, Real(1));
        for (std::size_t j = 2; j < n_; ++j) factorial[j] = factorial[j - 1] * static_cast<int>(j);
        for (std::size_t i = 0; i < n_; ++i) at(i, 0) = eval_deriv(model, z_[i], 0);
        for (std::size_t j = 1; j < n_; ++j) {
            for (std::size_t i = 0; i + j < n_; ++i) {
                if (z_[i + j] == z_[i]) {
                    at(i, j) = eval_deriv(model, z_[i], static_cast<int>(j)) / factorial[j];
                } else {
                    at(i, j) = (at(i + 1, j - 1) - at(i, j - 1)) / (z_[i + j] - z_[i]);
                }
            }
        }
    }

    DividedDifferenceTable(const FunctionModel& model, const ConfluentNodes& nodes)
        : DividedDifferenceTable(model, to_real(nodes.flattened_sorted())) {}

    /// f[z_i, ..., z_{i+j}]
    const Real& entry(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// The full-order divided difference f[z_0, ..., z_{N-1}].
    const Real& top() const { return entry(0, n_ - 1); }

    /// Newton coefficients for the interpolant over z_0, z_1, ...:
    /// f[z_0], f[z_0,z_1], ...
    std::vector<Real> newton_coefficients() const {
        std::vector<Real> c(n_);
        for (std::size_t j = 0; j < n_; ++j) c[j] = entry(0, j);
        return c;
    }

    const std::vector<Real>& nodes() const { return z_; }

private:
    static std::vector<Real> to_real(const std::vector<double>& v) {
        return std::vector<Real>(v.begin(), v.end());
    }

    Real& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    std::vector<Real> z_;
    std::size_t n_;
    std::vector<Real> data_;
};

/// Top entry of the confluent Newton table for the given nodes.
template <class Real>
Real divided_difference_as(const FunctionModel& model, const ConfluentNodes& nodes) {
    auto flat = nodes.flattened_sorted();
    std::vector<Real> z(flat.begin(), flat.end());
    return DividedDifferenceTable<Real>(model, z).top();
}

double divided_difference(const FunctionModel& model, const ConfluentNodes& nodes);

/// Closed form for f(x) = 1/x: the order-n divided difference equals
/// (-1)^n / (product of the nodes, each raised to its multiplicity).
double divdiff_reciprocal_closed(const ConfluentNodes& nodes);

namespace detail {

/// binomial(p, k) for real p as the falling-factorial product; exact for
/// half-integer p and valid for negative p, unlike a gamma-function route.
template <class Real>
Real binomial_real(const Real& p, int k) {
    Real r = falling_factorial(p, k);
    for (int i = 2; i <= k; ++i) r /= i;
    return r;
}

/// Spitzbart expansion of f[x, a^(m1+1), b^(m2+1)] for f(t) = t^p as
/// A + B + C: double sums of derivative data at a and b plus the single
/// x-term. Valid only for pairwise distinct x, a, b; the removable
/// singularities at coincidence are not implemented.
template <class Real>
Real spitzbart_power_impl(const Real& x, const Real& a, const Real& b, int m1, int m2,
                          const Real& p) {
    using std::pow;
    std::vector<std::vector<Real>> binom(static_cast<std::size_t>(std::max(m1, m2) + 2));
    // integer binomials binom[r][c] = C(r, c) via Pascal rows, exact
    for (std::size_t r = 0; r < binom.size(); ++r) {
        binom[r].assign(r + 1, Real(1));
        for (std::size_t c = 1; c < r; ++c) binom[r][c] = binom[r - 1][c - 1] + binom[r - 1][c];
    }
    auto choose = [&](int top, int bottom) -> Real {
        if (bottom < 0 || bottom > top) return Real(0);
        if (static_cast<std::size_t>(top) < binom.size())
            return binom[static_cast<std::size_t>(top)][static_cast<std::size_t>(bottom)];
        Real r(1);
        for (int i = 0; i < bottom; ++i) r = r * (top - i) / (i + 1);
        return r;
    };

    Real A(0);
    for (int k = 0; k <= m1; ++k) {
        Real bk = binomial_real(p, k);
        for (int l = 0; l <= m1 - k; ++l) {
            Real term = choose(m2 + l, m2) * bk * pow(a - b, -m2 - 1 - l) *
                        pow(a - x, -m1 - 1 + k + l) * pow(a, Real(-k));
            if ((m1 + k) % 2 != 0) term = -term;
            A += term;
        }
    }
    A *= pow(a, p);

    Real B(0);
    for (int k = 0; k <= m2; ++k) {
        Real bk = binomial_real(p, k);
        for (int l = 0; l <= m2 - k; ++l) {
            Real term = choose(m1 + l, m1) * bk * pow(b - a, -m1 - 1 - l) *
                        pow(b - x, -m2 - 1 + k + l) * pow(b, Real(-k));
            if ((m2 + k) % 2 != 0) term = -term;
            B += term;
        }
    }
    B *= pow(b, p);

    Real C = pow(x - a, -m1 - 1) * pow(x - b, -m2 - 1) * pow(x, p);
    return A + B + C;
}

} // namespace detail

/// f[x, a^(m1+1), b^(m2+1)] for f(t) = t^p by the Spitzbart closed form.
/// Swapping m1 and m2 yields f[x, a^(m2+1), b^(m1+1)].
template <class Real>
Real spitzbart_power_as(const Real& x, const Real& a, const Real& b, int m1, int m2,
                        const Real& p) {
    if (x == a || x == b || a == b)
        throw std::domain_error("spitzbart_power: x, a, b must be pairwise distinct");
    if (!(x > 0 && a > 0 && b > 0))
        throw std::domain_error("spitzbart_power: nodes must be positive");
    return detail::spitzbart_power_impl(x, a, b, m1, m2, p);
}

double spitzbart_power(double x, double a, double b, int m1, int m2, double p);

} // namespace hmeans
