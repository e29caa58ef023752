#pragma once

#include "hmeans/funcmodel.hpp"

namespace hmeans {

/// Intersection abscissa of the two order-r Taylor polynomials of f at a and
/// b: the unique u in (a, b) with P_a(u) = P_b(u), for odd r and f^(r+1)
/// nonvanishing on [a, b]. Found by bisection on P_a - P_b (which, unlike the
/// interpolant error forms, does not vanish at the endpoints).
double taylor_mean(const FunctionModel& model, int r, double a, double b);

} // namespace hmeans
