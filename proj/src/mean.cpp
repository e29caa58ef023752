#include "hmeans/mean.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hmeans/bigfloat.hpp"
#include "hmeans/divdiff.hpp"
#include "hmeans/errors.hpp"

namespace hmeans {

const char* to_string(MeanMethod m) {
    switch (m) {
        case MeanMethod::root_solve: return "root_solve";
        case MeanMethod::closed_gap2: return "closed_gap2";
        case MeanMethod::closed_10: return "closed_10";
        case MeanMethod::theorem_shortcut: return "theorem_shortcut";
    }
    return "?";
}

DefiningSides defining_sides(const MeanSpec& spec, double a, double b, double x) {
    int gap = spec.m1 - spec.m2;
    ConfluentNodes p_nodes{{x, 1}, {a, spec.m1 + 1}, {b, spec.m2 + 1}};
    ConfluentNodes q_nodes{{x, 1}, {a, spec.m2 + 1}, {b, spec.m1 + 1}};
    return {std::pow(x - a, gap) * divided_difference(spec.model, p_nodes),
            std::pow(b - x, gap) * divided_difference(spec.model, q_nodes)};
}

namespace {

double relative_imbalance(double lhs, double rhs) {
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : (lhs - rhs) / scale;
}

struct RootOutcome {
    double value;
    int iterations;
};

// Bisection steered by the strict monotonicity of direction * g. The true
// endpoints are never evaluated: both sides of the defining equation vanish
// there by construction, and next to a node block the confluent table loses
// accuracy like machine-eps / distance^multiplicity, so a clipped-endpoint
// sign test is noise in binary64 once m2 grows. Midpoints stay interior.
RootOutcome monotone_root(const std::function<double(double)>& g, double a, double b,
                          int direction) {
    double lo = a, hi = b;
    const double width = b - a;
    int iters = 0;
    bool have_pair = false;
    double last_lo = 0, last_lo_g = 0, last_hi = 0, last_hi_g = 0;
    while (hi - lo > 1e-13 * width && iters < 200) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid) * direction;
        ++iters;
        // an exact computed zero is not trusted as the root: on starved
        // tables whole stretches of g round to 0.0
        if (gm < 0) {
            lo = mid;
            last_lo = mid;
            last_lo_g = gm;
        } else {
            hi = mid;
            last_hi = mid;
            last_hi_g = gm;
        }
        have_pair = last_lo != 0 && last_hi != 0;
    }
    double x = 0.5 * (lo + hi);
    if (have_pair && last_hi_g != last_lo_g) {
        double secant =
            last_hi - last_hi_g * (last_hi - last_lo) / (last_hi_g - last_lo_g);
        if (secant > lo && secant < hi) x = secant;
    }
    return {x, iters};
}

// True when g, adjusted for direction, changes sign across a small window
// around x: the cheap certificate that x resolves the crossing rather than a
// noise plateau.
bool straddles(const std::function<double(double)>& g, double a, double b, double x,
               int direction) {
    double w = 1e-7 * (b - a);
    double xl = x - w, xr = x + w;
    if (!(xl > a && xr < b)) return true;  // hugging an endpoint: leave it to the residual
    // strict signs: a plateau of exact zeros is starvation, not a crossing
    return direction * g(xl) < 0 && direction * g(xr) > 0;
}

// Bisection on g over a bracket clipped strictly inside (a, b), for equations
// whose clipped-endpoint values are trustworthy (no confluent table under
// them). delta shrinks if the clipped endpoints fail to bracket, since the
// root can sit close to an endpoint for extreme exponents.
RootOutcome bracketed_root(const std::function<double(double)>& g, double a, double b,
                           const char* what) {
    const double width = b - a;
    double delta = 1e-9 * width;
    double lo = 0, hi = 0, glo = 0, ghi = 0;
    for (;;) {
        lo = a + delta;
        hi = b - delta;
        glo = g(lo);
        ghi = g(hi);
        if (glo == 0.0) return {lo, 0};
        if (ghi == 0.0) return {hi, 0};
        if ((glo < 0) != (ghi < 0)) break;
        delta /= 100.0;
        if (delta < 1e-13 * width)
            throw contract_error(std::string(what) +
                                 ": no sign change inside (a, b); divided-difference bug?");
    }
    int iters = 0;
    while (hi - lo > 1e-13 * width && iters < 200) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        ++iters;
        if (gm == 0.0) return {mid, iters};
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    double x = 0.5 * (lo + hi);
    if (ghi != glo) {
        double secant = hi - ghi * (hi - lo) / (ghi - glo);
        if (secant > lo && secant < hi) x = secant;
    }
    return {x, iters};
}

void require_strict(double a, double b, double value, const char* what) {
    if (!(a < value && value < b))
        throw contract_error(std::string(what) + ": value escaped the open interval");
}

// Narrow intervals at high order starve the binary64 table of digits (each
// subtractive level costs a factor ~(a+b)/(b-a)). When the double pass cannot
// balance the defining equation, the solve is repeated on extended-precision
// tables; the root is still wanted only to binary64.
struct ExtendedSolve {
    double value;
    double residual;
    int iterations;
};

ExtendedSolve mean_of_extended(const MeanSpec& spec, double a, double b, int direction) {
    PrecisionScope scope(45);
    BigFloat ba(a), bb(b);
    int gap = spec.m1 - spec.m2;
    auto sides = [&](const BigFloat& x) {
        std::vector<BigFloat> p_nodes, q_nodes;
        p_nodes.push_back(x);
        q_nodes.push_back(x);
        for (int i = 0; i <= spec.m1; ++i) p_nodes.push_back(ba);
        for (int i = 0; i <= spec.m2; ++i) p_nodes.push_back(bb);
        for (int i = 0; i <= spec.m2; ++i) q_nodes.push_back(ba);
        for (int i = 0; i <= spec.m1; ++i) q_nodes.push_back(bb);
        std::sort(p_nodes.begin(), p_nodes.end());
        std::sort(q_nodes.begin(), q_nodes.end());
        using std::pow;
        BigFloat lhs = pow(x - ba, gap) * DividedDifferenceTable<BigFloat>(spec.model, p_nodes).top();
        BigFloat rhs = pow(bb - x, gap) * DividedDifferenceTable<BigFloat>(spec.model, q_nodes).top();
        return std::pair{lhs, rhs};
    };
    BigFloat lo = ba, hi = bb;
    BigFloat tol = (bb - ba) * 1e-18;
    int iters = 0;
    while (hi - lo > tol && iters < 80) {
        BigFloat mid = (lo + hi) / 2;
        auto [lhs, rhs] = sides(mid);
        ++iters;
        if (direction * (lhs - rhs) >= 0)
            hi = mid;
        else
            lo = mid;
    }
    BigFloat x = (lo + hi) / 2;
    auto [lhs, rhs] = sides(x);
    using std::abs;
    BigFloat scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
    double residual = scale == 0 ? 0.0 : static_cast<double>((lhs - rhs) / scale);
    return {static_cast<double>(x), residual, iters};
}

} // namespace

MeanResult mean_of(const MeanSpec& spec, double a, double b) {
    spec.validate();
    if (!(a > 0) || !(b > 0)) throw std::domain_error("mean_of: requires a, b > 0");
    if (a > b) std::swap(a, b);
    if (a == b) return {a, 0.0, 0, MeanMethod::theorem_shortcut};
    // the left side of the defining equation climbs from 0 and the right side
    // falls to 0 when f^(n+1) > 0 (reversed when negative), so their
    // difference crosses zero once, monotonically, in the sign's direction
    int direction = check_nonvanishing(spec.model, spec.n(), a, b);

    auto g = [&](double x) {
        auto [lhs, rhs] = defining_sides(spec, a, b, x);
        return lhs - rhs;
    };
    RootOutcome root = monotone_root(g, a, b, direction);
    auto [lhs, rhs] = defining_sides(spec, a, b, root.value);
    double residual = relative_imbalance(lhs, rhs);
    int iterations = root.iterations;
    double value = root.value;
    // the root error scales like residual * width, so anything past ~1e-10
    // cannot promise nine digits on the value; a missing sign straddle means
    // the table had too few digits left for this interval
    if (std::abs(residual) > 2e-10 || !straddles(g, a, b, value, direction)) {
        ExtendedSolve retry = mean_of_extended(spec, a, b, direction);
        value = retry.value;
        residual = retry.residual;
        iterations += retry.iterations;
        // a gross imbalance surviving extended precision signals a
        // divided-difference bug, which the monotonicity argument rules out
        if (std::abs(residual) > 1e-6)
            throw contract_error("mean_of: defining equation stays out of balance at the root");
    }
    require_strict(a, b, value, "mean_of");
    return {value, residual, iterations, MeanMethod::root_solve};
}

bool power_snaps_to_log(double p, int m1, int m2) {
    double r = std::round(p);
    int n = m1 + m2 + 1;
    return p != r && std::abs(p - r) <= 1e-12 && r >= 0 && r <= n;
}

MeanResult mean_power(double p, int m1, int m2, double a, double b) {
    MeanSpec probe{FunctionModel::power(p), m1, m2};
    probe.validate();
    double r = std::round(p);
    if (std::abs(p - r) <= 1e-12 && r >= 0 && r <= probe.n())
        return mean_of({FunctionModel::log_power(static_cast<int>(r)), m1, m2}, a, b);
    FunctionModel model = FunctionModel::power(p);
    if (std::abs(p) > 30) model = model.scaled(std::pow(std::max(a, b), -p));
    return mean_of({std::move(model), m1, m2}, a, b);
}

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binom_int(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Numerator -d and denominator c of the linear defining equation for
// m1 = m2 + 2, assembled from derivative data at a and b only (the f(0)
// terms of the underlying expansion cancel).
double gap2_d(const FunctionModel& f, int m2, double a, double b) {
    double s = 0.0;
    for (int k = 0; k <= m2; ++k) {
        double fk_a = eval_deriv(f, a, k), fk_b = eval_deriv(f, b, k);
        for (int l = 0; l <= m2 - k; ++l) {
            double sign = ((m2 + k) % 2 == 0) ? 1.0 : -1.0;
            double inner_sign = ((m2 + l) % 2 == 0) ? 1.0 : -1.0;
            s += sign / factorial(k) * binom_int(m2 + l + 2, m2 + 2) *
                 std::pow(a - b, -m2 - 3 - l) *
                 (b * b * std::pow(a, -m2 - 1 + k + l) * fk_a +
                  inner_sign * a * a * std::pow(b, -m2 - 1 + k + l) * fk_b);
        }
    }
    for (int k = 0; k <= m2 + 2; ++k) {
        double fk_a = eval_deriv(f, a, k), fk_b = eval_deriv(f, b, k);
        for (int l = 0; l <= m2 + 2 - k; ++l) {
            double sign = ((m2 + k) % 2 == 0) ? 1.0 : -1.0;
            double inner_sign = ((m2 + l) % 2 == 0) ? 1.0 : -1.0;
            s += sign / factorial(k) * binom_int(m2 + l, m2) * std::pow(b - a, -m2 - 1 - l) *
                 (std::pow(b, -m2 - 1 + k + l) * fk_b +
                  inner_sign * std::pow(a, -m2 - 1 + k + l) * fk_a);
        }
    }
    return s;
}

double gap2_c(const FunctionModel& f, int m2, double a, double b) {
    double s1 = 0.0;
    for (int j = 0; j <= m2 + 2; ++j) {
        double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^(j+1)
        s1 += binom_int(2 * m2 + 2 - j, m2) * std::pow(b - a, j) *
              (sign * eval_deriv(f, b, j) - eval_deriv(f, a, j)) / factorial(j);
    }
    double s2 = 0.0;
    for (int j = 0; j <= m2; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s2 += binom_int(2 * m2 + 2 - j, m2 + 2) * std::pow(b - a, j) *
              (sign * eval_deriv(f, b, j) + eval_deriv(f, a, j)) / factorial(j);
    }
    double front = (m2 % 2 == 0) ? 1.0 : -1.0;
    return front / std::pow(b - a, 2 * m2 + 3) * (s1 + s2);
}

// Fully expanded quotients for the three smallest gap-2 cases.
double gap2_expanded(const FunctionModel& f, int m2, double a, double b) {
    auto d = [&](double x, int j) { return eval_deriv(f, x, j); };
    switch (m2) {
        case 0: {
            double num = (b - a) * (b * d(b, 2) + a * d(a, 2)) + 2 * (a - 2 * b) * d(b, 1) +
                         2 * (2 * a - b) * d(a, 1) + 6 * (d(b, 0) - d(a, 0));
            double den = (b - a) * (d(b, 2) + d(a, 2)) - 2 * (d(b, 1) - d(a, 1));
            return num / den;
        }
        case 1: {
            double num = -60 * (d(b, 0) - d(a, 0)) + 12 * (3 * b - 2 * a) * d(b, 1) -
                         12 * (3 * a - 2 * b) * d(a, 1) +
                         3 * (b - a) * ((a - 3 * b) * d(b, 2) + (b - 3 * a) * d(a, 2)) +
                         (b - a) * (b - a) * (b * d(b, 3) - a * d(a, 3));
            double den = 12 * (d(b, 1) - d(a, 1)) - 6 * (b - a) * (d(b, 2) + d(a, 2)) +
                         (b - a) * (b - a) * (d(b, 3) - d(a, 3));
            return num / den;
        }
        case 2: {
            double w = b - a;
            double num = 840 * (d(b, 0) - d(a, 0)) + 120 * (3 * a - 4 * b) * d(b, 1) +
                         120 * (4 * a - 3 * b) * d(a, 1) +
                         60 * w * ((2 * b - a) * d(b, 2) - (b - 2 * a) * d(a, 2)) -
                         4 * w * w * ((b - 4 * a) * d(a, 3) + (4 * b - a) * d(b, 3)) +
                         w * w * w * (a * d(a, 4) + b * d(b, 4));
            double den = -120 * (d(b, 1) - d(a, 1)) + 60 * w * (d(b, 2) + d(a, 2)) -
                         12 * w * w * (d(b, 3) - d(a, 3)) + w * w * w * (d(b, 4) + d(a, 4));
            return num / den;
        }
        default:
            throw std::logic_error("gap2_expanded: only m2 <= 2 is printed in closed form");
    }
}

} // namespace

MeanResult mean_closed_gap2(const FunctionModel& model, int m2, double a, double b) {
    if (m2 < 0) throw std::invalid_argument("mean_closed_gap2: m2 must be >= 0");
    if (!(a > 0) || !(b > 0)) throw std::domain_error("mean_closed_gap2: requires a, b > 0");
    if (a > b) std::swap(a, b);
    if (a == b) return {a, 0.0, 0, MeanMethod::theorem_shortcut};
    int m1 = m2 + 2;
    MeanSpec spec{model, m1, m2};
    check_nonvanishing(model, spec.n(), a, b);

    double d = gap2_d(model, m2, a, b);
    double c = gap2_c(model, m2, a, b);
    if (c == 0.0)
        throw contract_error("mean_closed_gap2: zero denominator despite sign hypothesis");
    double value = -d / c;
    if (m2 <= 2) {
        double expanded = gap2_expanded(model, m2, a, b);
        if (std::abs(expanded - value) > 1e-9 * std::max(1.0, std::abs(value)))
            throw contract_error("mean_closed_gap2: expanded form disagrees with -d/c");
    }
    require_strict(a, b, value, "mean_closed_gap2");
    auto [lhs, rhs] = defining_sides(spec, a, b, value);
    return {value, relative_imbalance(lhs, rhs), 0, MeanMethod::closed_gap2};
}

namespace {

// Cleared form of the defining equation for m1 = 1, m2 = 0 and f(x) = x^p.
double family10_equation(double p, double a, double b, double x) {
    return 2 * (std::pow(x, p) - std::pow(a, p)) * (b - a) -
           2 * (std::pow(b, p) - std::pow(a, p)) * (x - a) -
           p * (std::pow(b, p - 1) - std::pow(a, p - 1)) * (x - b) * (x - a);
}

double family10_scale(double p, double a, double b, double x) {
    return std::abs(2 * (std::pow(x, p) - std::pow(a, p)) * (b - a)) +
           std::abs(2 * (std::pow(b, p) - std::pow(a, p)) * (x - a)) +
           std::abs(p * (std::pow(b, p - 1) - std::pow(a, p - 1)) * (x - b) * (x - a));
}

} // namespace

MeanResult mean_10_family(double p, double a, double b) {
    if (!(a > 0) || !(b > 0)) throw std::domain_error("mean_10_family: requires a, b > 0");
    if (a > b) std::swap(a, b);
    if (a == b) return {a, 0.0, 0, MeanMethod::theorem_shortcut};
    double r = std::round(p);
    if (std::abs(p - r) <= 1e-12 && r >= 0 && r <= 2) return mean_power(p, 1, 0, a, b);
    check_nonvanishing(FunctionModel::power(p), 2, a, b);

    auto g = [&](double x) { return family10_equation(p, a, b, x); };
    RootOutcome root = bracketed_root(g, a, b, "mean_10_family");
    double x = root.value;
    require_strict(a, b, x, "mean_10_family");

    if (p == 4.0) {
        double closed = 0.5 * std::sqrt(5 * b * b + 6 * a * b + 5 * a * a) - 0.5 * (a + b);
        if (std::abs(closed - x) > 1e-11 * std::abs(closed))
            throw contract_error("mean_10_family: p=4 algebraic solution disagrees");
        x = closed;
    } else if (p == 5.0) {
        double s = 10 * (a + b) * (19 * a * a + 2 * a * b + 19 * b * b);
        double t = 1017 * std::pow(b, 6) + 2238 * std::pow(b, 5) * a +
                   3495 * std::pow(b, 4) * a * a + 4500 * std::pow(b, 3) * std::pow(a, 3) +
                   3495 * b * b * std::pow(a, 4) + 2238 * std::pow(a, 5) * b +
                   1017 * std::pow(a, 6);
        double root3 = std::cbrt(s + 6 * std::sqrt(t));
        double closed = root3 / 6 - (2.0 / 3.0) * (2 * b * b + a * b + 2 * a * a) / root3 -
                        (a + b) / 3;
        if (std::abs(closed - x) > 1e-10 * std::abs(closed))
            throw contract_error("mean_10_family: p=5 algebraic solution disagrees");
        x = closed;
    }
    double residual = family10_equation(p, a, b, x) / family10_scale(p, a, b, x);
    return {x, residual, root.iterations, MeanMethod::closed_10};
}

} // namespace hmeans
