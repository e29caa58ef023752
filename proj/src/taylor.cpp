#include "hmeans/taylor.hpp"

#include <cmath>
#include <stdexcept>

#include "hmeans/errors.hpp"

namespace hmeans {

namespace {

double taylor_eval(const FunctionModel& f, double center, int r, double x) {
    // Horner over the Taylor coefficients f^(j)(center)/j!
    double v = 0.0;
    double fact = 1.0;
    for (int j = 2; j <= r; ++j) fact *= j;
    for (int j = r; j >= 0; --j) {
        v = v * (x - center) + eval_deriv(f, center, j) / fact;
        if (j > 0) fact /= j;
    }
    return v;
}

} // namespace

double taylor_mean(const FunctionModel& model, int r, double a, double b) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("taylor_mean: r must be odd and >= 1");
    if (!(a > 0) || !(b > 0)) throw std::domain_error("taylor_mean: requires a, b > 0");
    if (a > b) std::swap(a, b);
    if (a == b) return a;
    check_nonvanishing(model, r, a, b);

    auto g = [&](double x) { return taylor_eval(model, a, r, x) - taylor_eval(model, b, r, x); };
    double lo = a, hi = b;
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0) == (ghi < 0))
        throw contract_error("taylor_mean: Taylor differences do not change sign over [a, b]");
    int iters = 0;
    while (hi - lo > 1e-13 * (b - a) && iters < 200) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        ++iters;
        if (gm == 0.0) return mid;
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
    return x;
}

} // namespace hmeans
