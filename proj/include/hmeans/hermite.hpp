#pragma once

#include <stdexcept>
#include <vector>

#include "hmeans/divdiff.hpp"
#include "hmeans/funcmodel.hpp"

namespace hmeans {

enum class Side { P, Q };

/// Which Hermite interpolant to build: side P matches derivatives 0..m1 at a
/// and 0..m2 at b; side Q swaps the two blocks. m2 = m1 is allowed here for
/// auxiliary uses (then P = Q); the mean layer is the one that rejects it.
struct InterpolantSpec {
    int m1 = 1;
    int m2 = 0;
    double a = 1.0;
    double b = 2.0;
    Side side = Side::P;

    int degree_bound() const { return m1 + m2 + 1; }

    void validate() const {
        if (m2 < 0 || m1 < m2) throw std::invalid_argument("interpolant needs 0 <= m2 <= m1");
        if (!(0 < a && a < b)) throw std::invalid_argument("interpolant needs 0 < a < b");
    }
};

/// Polynomial in Newton form: value = c_0 + c_1 (x - z_0) + c_2 (x - z_0)(x - z_1) + ...
/// An empty node list (or all-zero nodes) makes this a plain monomial polynomial.
class PolynomialRep {
public:
    PolynomialRep(std::vector<double> newton_nodes, std::vector<double> newton_coeffs)
        : nodes_(std::move(newton_nodes)), coeffs_(std::move(newton_coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("polynomial needs >= 1 coefficient");
        if (nodes_.size() + 1 < coeffs_.size())
            throw std::invalid_argument("newton form needs >= coeffs-1 nodes");
    }

    static PolynomialRep from_monomial(std::vector<double> coeffs) {
        std::vector<double> zeros(coeffs.empty() ? 0 : coeffs.size() - 1, 0.0);
        return PolynomialRep(std::move(zeros), std::move(coeffs));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& newton_nodes() const { return nodes_; }
    const std::vector<double>& newton_coeffs() const { return coeffs_; }

    /// Nested multiplication over the Newton nodes.
    double operator()(double x) const {
        std::size_t m = coeffs_.size() - 1;
        double v = coeffs_[m];
        for (std::size_t i = m; i-- > 0;) v = v * (x - nodes_[i]) + coeffs_[i];
        return v;
    }

    /// order-th derivative at t by repeated synthetic division of the Newton
    /// form; never expands to the monomial basis, so no coefficient blow-up.
    double derivative_at(double t, int order) const;

    /// Monomial coefficients; used only for factor-structure checks and
    /// leading-coefficient cross-checks on small degrees.
    std::vector<double> monomial() const;

private:
    std::vector<double> nodes_;
    std::vector<double> coeffs_;
};

/// Newton-form interpolant over the nodes a^(m1+1) b^(m2+1) (side P) or
/// a^(m2+1) b^(m1+1) (side Q), built from the confluent table.
PolynomialRep build_interpolant(const FunctionModel& model, const InterpolantSpec& spec);

/// The same interpolant assembled literally from the explicit double-sum
/// formulas, as a monomial polynomial. Serves as an independent construction
/// to test build_interpolant against.
PolynomialRep explicit_interpolant(const FunctionModel& model, const InterpolantSpec& spec);

/// Interpolation error f(x) - P(x) in product form:
/// (x-a)^(m1+1) (x-b)^(m2+1) f[x, a^(m1+1), b^(m2+1)] for side P, and with
/// the exponent blocks swapped for side Q.
double error_at(const FunctionModel& model, const InterpolantSpec& spec, double x);

/// Coefficient of x^(m1+m2+1) in the interpolant, from the closed form.
double leading_coeff(const FunctionModel& model, const InterpolantSpec& spec);

} // namespace hmeans
