#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmeans/funcmodel.hpp"
#include "hmeans/gridmap.hpp"
#include "hmeans/mean.hpp"
#include "hmeans/rational.hpp"

namespace hmeans {

/// Working precision for the conjecture scans. Confluent data of order ~30
/// cancels catastrophically in binary64, hence the guard rail below.
struct PrecisionConfig {
    int digits = 60;

    void validate_for_order(int n_max) const {
        if (digits < 15) throw std::domain_error("precision: needs at least 15 digits");
        if (n_max > 12 && digits < 30)
            throw std::domain_error("precision: scans past order 12 need >= 30 digits");
    }
};

struct SweepResult {
    std::string axis;  ///< "p" or "n"
    std::vector<double> params;
    std::vector<double> values;
    std::string monotonicity;  ///< "strictly-increasing", "strictly-decreasing", or "none"
    std::optional<double> limit_target;
    std::vector<double> gaps;  ///< |value - limit_target| when a target exists
    bool gap_decreased_monotonically = false;
};

/// M_{p,m1,m2}(a, b) across a p grid, with a strict-monotonicity verdict.
SweepResult p_sweep(int m1, int m2, double a, double b, std::span<const double> p_grid);

/// Property suites, named for the mean identity or behaviour they verify.
enum class TheoremSuite {
    arithmetic,     ///< p = m1+m2+2 gives (a+b)/2
    harmonic,       ///< p = -1 gives 2ab/(a+b) for every (m1, m2)
    geometric,      ///< p = (m1+m2+1)/2, m1+m2 even, gives sqrt(ab)
    comparability,  ///< means from power-ratio-monotone pairs never tie
    equivalence,    ///< cf + poly leaves the mean unchanged; log vs power differs
    p_monotone,     ///< M is strictly increasing in p
    p_limits        ///< M approaches max/min as p -> +-inf
};

const char* to_string(TheoremSuite suite);
std::optional<TheoremSuite> suite_from_string(std::string_view text);
std::vector<TheoremSuite> all_suites();

struct SuiteCase {
    std::string label;
    bool pass = false;
    double residual = 0.0;  ///< worst relative deviation observed in the case
};

struct SuiteReport {
    std::string name;
    std::vector<SuiteCase> cases;
    std::size_t failures = 0;
    double worst_residual = 0.0;
};

SuiteReport run_theorem_suite(TheoremSuite suite, Execution exec = Execution::parallel);

/// M_{log x, 2, 0}(1, b). Near b = 1 the closed form loses every digit to
/// (b-1)^3 cancellation, so |b-1| < 1e-3 switches to the series expansion.
double log_mean_gap2_h(double b);

/// Numerical derivatives of h at 1 against their exact limits, plus the
/// exact-rational elimination showing no Taylor-intersection mean matches
/// them: the matching order works out to r = -1/2, not a positive integer.
struct TaylorMatchReport {
    double estimate[4];  ///< h', h'', h''', h'''' at b = 1
    double target[4];    ///< 1/2, -2/5, 3/5, -48/35
    bool within[4];      ///< at tolerances 1e-4, 1e-3, 1e-2, 1e-2
    bool relation_derived = false;    ///< both curvature constraints reduce to r = 5p + 3
    bool quartic_reduces = false;     ///< 4th-derivative expression reduces to the printed quotient
    Rational p_solution;              ///< -7/10
    Rational r_solution;              ///< -1/2
    bool representable = true;        ///< false when r_solution is not a positive integer
};

TaylorMatchReport section4_nonrepresentability();

/// Cauchy mean-value abscissae for the pair f = x^p1, g = x^p2 over the two
/// node multisets of the defining equation. The ratio of divided differences
/// is inverted through phi(t) = f^(n+1)(t)/g^(n+1)(t) = c t^(p1-p2).
struct CauchyPair {
    double zeta_p;
    double zeta_q;
};

CauchyPair lemma_L3_probe(double p1, double p2, int m1, int m2, double a, double b, double x);

/// Gap |M_{p,m1,m2}(a,b) - 2ab/(a+b)| along n = m1+m2+1 for the two ladders
/// m2 = m1-1 (even n) and m2 = m1-2 (odd n), at extended precision.
/// Trend report only; the decreasing verdict is informative, not asserted.
SweepResult conjecture1_scan(double p, double a, double b, int n_max,
                             PrecisionConfig precision = {});

struct SpreadRow {
    std::string model;
    std::vector<double> values;  ///< M per (m1, m2) pair, at (a, b) = (1, 2)
    double spread = 0.0;         ///< max - min
};

struct Conjecture2Report {
    std::vector<std::pair<int, int>> pairs;
    std::vector<SpreadRow> rows;
};

/// Spread of M across (m1, m2) pairs per model; a reciprocal model must show
/// spread 0 (to rounding), everything else is expected to move.
Conjecture2Report conjecture2_probe(std::span<const FunctionModel> models,
                                    std::span<const std::pair<int, int>> pairs);

/// Default bundle: reciprocal (plain and rescaled), a power, exp, and log.
Conjecture2Report conjecture2_probe();

} // namespace hmeans
