#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmeans/gridmap.hpp"
#include "hmeans/rational.hpp"

namespace hmeans {

/// The combinatorial identities behind the geometric-mean theorem, each
/// verified exactly over rationals with p = (m1+m2+1)/2 where it appears.
enum class IdentityName {
    L0,      ///< single sum with half-integer binomials, parameter (m1, b)
    L1,      ///< single sum weighted by C(m2+m1-k, m2), parameter (m1, m2, y)
    L2,      ///< double-sum identity L_{m1,m2}(b) = R_{m1,m2}(b)
    lid,     ///< recursion raising m1, lowering m2, on L
    rid,     ///< same recursion on R
    lid2,    ///< recursion lowering m1, raising m2, on L
    rid2,    ///< same recursion on R
    lrid,    ///< reflection b^m1 L(1/b) = R(b)
    claim6,  ///< the L2 double sum in its C(m2+l, m2) spelling
    claim7,  ///< claim6 with the roles of m1 and m2 exchanged
};

const char* to_string(IdentityName name);
std::optional<IdentityName> identity_from_string(std::string_view text);

struct IdentityReport {
    std::string name;
    int m1 = 0;
    int m2 = 0;
    Rational param;  ///< b (or y for L1)
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// `name m1 m2 param lhs rhs equal`, space separated.
std::string format_report_line(const IdentityReport& report);

/// The double sums L_{m1,m2}(b) and R_{m1,m2}(b); m2 = -1 is accepted (the
/// inner weight then kills every l > 0 term, which is the recursion's base
/// case), m1 < 0 makes both sums empty and thus 0.
Rational identity_L(int m1, int m2, const Rational& b);
Rational identity_R(int m1, int m2, const Rational& b);

/// One recursion step applied to an already-known L (or R) value. Used both
/// by check_identity and by the round-trip consistency tests.
Rational lid_step(const Rational& L_value, int m1, int m2, const Rational& b);
Rational rid_step(const Rational& R_value, int m1, int m2, const Rational& b);
Rational lid2_step(const Rational& L_value, int m1, int m2, const Rational& b);
Rational rid2_step(const Rational& R_value, int m1, int m2, const Rational& b);

/// Evaluates both sides of the named identity exactly. Parameters outside an
/// identity's stated domain raise std::domain_error naming the constraint.
IdentityReport check_identity(IdentityName name, int m1, int m2, const Rational& param);

/// The three scaling equalities tying the two divided-difference expansions
/// together at x = 1, a = 1/b. Both sides are multiplied by b^p so that every
/// compared quantity is rational (b^(2p) = b^(m1+m2+1) when m1+m2 is even).
/// Requires b > 0, b != 1, m1 + m2 even.
std::vector<IdentityReport> verify_claim5(int m1, int m2, const Rational& b);

struct IdentityGrid {
    int max_m = 8;
    std::vector<Rational> bs{Rational(1, 3), Rational(2, 5), Rational(3, 2), Rational(7, 2)};
    std::vector<Rational> ys{Rational(1, 4), Rational(9, 4)};
};

struct IdentitySuiteResult {
    std::vector<IdentityReport> instances;
    std::size_t failures = 0;
};

/// Every identity instance over the grid: all 0 <= m2 < m1 <= max_m (claim5
/// restricted to even m1+m2), every b (y for L1). Instances are independent;
/// results are merged by enumeration order regardless of execution mode.
IdentitySuiteResult run_identity_grid(const IdentityGrid& grid,
                                      Execution exec = Execution::parallel);

} // namespace hmeans
