#pragma once

#include <stdexcept>

#include "hmeans/funcmodel.hpp"

namespace hmeans {

/// The mean M_{f,m1,m2} of a and b is the unique x in (a, b) with
///   (x-a)^(m1-m2) f[x, a^(m1+1), b^(m2+1)] = (b-x)^(m1-m2) f[x, a^(m2+1), b^(m1+1)].
/// Requires 0 <= m2 < m1 and f^(n+1) nonvanishing on (a, b), n = m1+m2+1.
struct MeanSpec {
    FunctionModel model;
    int m1 = 1;
    int m2 = 0;

    int n() const { return m1 + m2 + 1; }
    int parity() const { return (m1 - m2) % 2; }

    void validate() const {
        if (m2 < 0 || m1 <= m2)
            throw std::invalid_argument("mean requires 0 <= m2 < m1");
    }
};

enum class MeanMethod { root_solve, closed_gap2, closed_10, theorem_shortcut };

struct MeanResult {
    double value = 0.0;
    double residual = 0.0;  ///< defining equation imbalance, relative to its larger side
    int iterations = 0;
    MeanMethod method = MeanMethod::root_solve;
};

const char* to_string(MeanMethod m);

/// Both sides of the defining equation at x, evaluated as written (with b-x,
/// not x-b, on the right so both sides carry the sign of f^(n+1)).
struct DefiningSides {
    double lhs;
    double rhs;
};
DefiningSides defining_sides(const MeanSpec& spec, double a, double b, double x);

/// Root of the defining equation by bisection, bracketed strictly inside
/// (a, b), then one secant polish. Arguments are swapped first if a > b;
/// a == b short-circuits to a.
MeanResult mean_of(const MeanSpec& spec, double a, double b);

/// M_{p,m1,m2}: dispatches to f(x) = x^p, or to f(x) = x^k log x when p is
/// (within 1e-12 of) an integer k in {0..n}; normalises by b^(-p) when
/// |p| > 30 so huge exponents stay inside binary64.
MeanResult mean_power(double p, int m1, int m2, double a, double b);

/// True when mean_power would snap p to the log-power model at k = round(p)
/// without p being exactly integral (callers may want to warn).
bool power_snaps_to_log(double p, int m1, int m2);

/// Closed form for the gap-2 family m1 = m2 + 2: the defining equation is
/// linear, M = -d/c. For m2 in {0,1,2} the fully expanded numerator and
/// denominator are evaluated as well and must agree to 1e-9.
MeanResult mean_closed_gap2(const FunctionModel& model, int m2, double a, double b);

/// The m1 = 1, m2 = 0 family for f(x) = x^p via its cleared polynomial-like
/// equation; for p = 4 and p = 5 the algebraic solutions are asserted.
MeanResult mean_10_family(double p, double a, double b);

} // namespace hmeans
