#include "hmeans/divdiff.hpp"

#include <cmath>

namespace hmeans {

double divided_difference(const FunctionModel& model, const ConfluentNodes& nodes) {
    return divided_difference_as<double>(model, nodes);
}

double divdiff_reciprocal_closed(const ConfluentNodes& nodes) {
    double prod = 1.0;
    for (const auto& [x, m] : nodes.entries()) {
        if (!(x > 0)) throw std::domain_error("divdiff_reciprocal_closed: nodes must be > 0");
        prod *= std::pow(x, m);
    }
    double value = 1.0 / prod;
    return nodes.order() % 2 == 0 ? value : -value;
}

double spitzbart_power(double x, double a, double b, int m1, int m2, double p) {
    return spitzbart_power_as<double>(x, a, b, m1, m2, p);
}

} // namespace hmeans
