#include "hmeans/hermite.hpp"

#include <cmath>

#include "hmeans/polynomial.hpp"

namespace hmeans {

namespace {

double binom_int(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

double PolynomialRep::derivative_at(double t, int order) const {
    // One synthetic division of the Newton form by (x - t) leaves the
    // remainder value(t) and a quotient whose Newton nodes are the prefix
    // z_0..z_{m-2} with coefficients given by the Horner tail values.
    std::vector<double> c = coeffs_;
    double result = 0.0;
    for (int round = 0; round <= order; ++round) {
        if (c.empty()) return 0.0;
        std::size_t m = c.size() - 1;
        for (std::size_t i = m; i-- > 0;) c[i] += (t - nodes_[i]) * c[i + 1];
        result = c[0];
        c.erase(c.begin());
    }
    return result * factorial(order);
}

std::vector<double> PolynomialRep::monomial() const {
    std::vector<double> result{0.0};
    std::vector<double> basis{1.0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        result = poly::add(result, poly::scale(basis, coeffs_[i]));
        if (i + 1 < coeffs_.size()) basis = poly::mul(basis, {-nodes_[i], 1.0});
    }
    return result;
}

namespace {

std::vector<double> hermite_node_list(const InterpolantSpec& spec) {
    int at_a = spec.side == Side::P ? spec.m1 + 1 : spec.m2 + 1;
    int at_b = spec.side == Side::P ? spec.m2 + 1 : spec.m1 + 1;
    std::vector<double> z;
    z.reserve(static_cast<std::size_t>(at_a + at_b));
    z.insert(z.end(), static_cast<std::size_t>(at_a), spec.a);
    z.insert(z.end(), static_cast<std::size_t>(at_b), spec.b);
    return z;
}

} // namespace

PolynomialRep build_interpolant(const FunctionModel& model, const InterpolantSpec& spec) {
    spec.validate();
    std::vector<double> z = hermite_node_list(spec);
    DividedDifferenceTable<double> table(model, z);
    return PolynomialRep(std::move(z), table.newton_coefficients());
}

namespace {

// One half of the explicit double-sum formula: the block anchored at u that
// matches derivatives f^(0..mu)(u), with v the opposite endpoint carrying
// multiplicity mv+1. P = block(a,b,m1,m2) + block(b,a,m2,m1); Q swaps the
// m-arguments.
std::vector<double> explicit_block(const FunctionModel& model, double u, double v, int mu,
                                   int mv) {
    std::vector<double> w(static_cast<std::size_t>(mu) + 1, 0.0);
    for (int j = 0; j <= mu; ++j) {
        double fj = eval_deriv(model, u, j) / factorial(j);
        for (int k = 0; k <= mu - j; ++k) {
            w[static_cast<std::size_t>(j + k)] +=
                fj * binom_int(mv + k, k) / std::pow(v - u, k);
        }
    }
    // sum_s w[s] (x-u)^s, expanded by Horner
    std::vector<double> inner{0.0};
    for (std::size_t s = w.size(); s-- > 0;) {
        inner = poly::mul(inner, {-u, 1.0});
        inner = poly::add(inner, {w[s]});
    }
    std::vector<double> prefix = poly::scale(poly::linear_power(-v, mv + 1),
                                             std::pow(u - v, -(mv + 1)));
    return poly::mul(prefix, inner);
}

} // namespace

PolynomialRep explicit_interpolant(const FunctionModel& model, const InterpolantSpec& spec) {
    spec.validate();
    int ma = spec.side == Side::P ? spec.m1 : spec.m2;
    int mb = spec.side == Side::P ? spec.m2 : spec.m1;
    std::vector<double> c = poly::add(explicit_block(model, spec.a, spec.b, ma, mb),
                                      explicit_block(model, spec.b, spec.a, mb, ma));
    c.resize(static_cast<std::size_t>(spec.degree_bound()) + 1, 0.0);
    return PolynomialRep::from_monomial(std::move(c));
}

double error_at(const FunctionModel& model, const InterpolantSpec& spec, double x) {
    spec.validate();
    if (!(spec.a < x && x < spec.b)) throw std::domain_error("error_at: x must lie in (a, b)");
    int at_a = spec.side == Side::P ? spec.m1 + 1 : spec.m2 + 1;
    int at_b = spec.side == Side::P ? spec.m2 + 1 : spec.m1 + 1;
    ConfluentNodes nodes{{x, 1}, {spec.a, at_a}, {spec.b, at_b}};
    return std::pow(x - spec.a, at_a) * std::pow(x - spec.b, at_b) *
           divided_difference(model, nodes);
}

double leading_coeff(const FunctionModel& model, const InterpolantSpec& spec) {
    spec.validate();
    const auto [m1, m2, a, b] = std::tuple(spec.m1, spec.m2, spec.a, spec.b);
    int n = spec.degree_bound();
    // closed forms for the x^n coefficient; side Q is side P with the roles
    // of the derivative blocks exchanged
    int ma = spec.side == Side::P ? m1 : m2;  // block depth at a
    int mb = spec.side == Side::P ? m2 : m1;  // block depth at b
    double s_b = 0.0;
    for (int j = 0; j <= mb; ++j) {
        double t = binom_int(m1 + m2 - j, n - 1 - mb) * std::pow(b - a, j) *
                   eval_deriv(model, b, j) / factorial(j);
        s_b += (j % 2 == 0) ? t : -t;
    }
    double s_a = 0.0;
    for (int j = 0; j <= ma; ++j) {
        s_a += binom_int(m1 + m2 - j, n - 1 - ma) * std::pow(b - a, j) *
               eval_deriv(model, a, j) / factorial(j);
    }
    double sign = (mb % 2 == 0) ? 1.0 : -1.0;
    return sign / std::pow(b - a, n) * (s_b - s_a);
}

} // namespace hmeans
