#include "hmeans/funcmodel.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace hmeans {

std::string FunctionModel::describe() const {
    char buf[64];
    std::string s;
    switch (kind_) {
        case FuncKind::power:
            std::snprintf(buf, sizeof buf, "power:%.17g", exponent_);
            s = buf;
            break;
        case FuncKind::log_power:
            std::snprintf(buf, sizeof buf, "logpower:%d", log_degree_);
            s = buf;
            break;
        case FuncKind::exponential:
            s = "exp";
            break;
        case FuncKind::shifted:
            s = "shifted(" + base_->describe() + ")";
            break;
    }
    if (scale_ != 1.0) {
        std::snprintf(buf, sizeof buf, "*%.17g", scale_);
        s += buf;
    }
    return s;
}

namespace {

bool is_integer_in_range(double p, int lo, int hi) {
    double r = std::round(p);
    return p == r && r >= lo && r <= hi;
}

std::optional<int> sampled_sign(const FunctionModel& model, int n, double a, double b) {
    int sign = 0;
    for (int i = 0; i < 64; ++i) {
        double x = a + (b - a) * (i + 0.5) / 64.0;
        double v = eval_deriv(model, x, n + 1);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) return std::nullopt;
        if (sign == 0) sign = s;
        if (s != sign) return std::nullopt;
    }
    return sign;
}

} // namespace

std::optional<int> nonvanishing_sign(const FunctionModel& model, int n, double a, double b) {
    if (!(0 < a && a < b)) throw std::domain_error("nonvanishing_sign: requires 0 < a < b");
    switch (model.kind()) {
        case FuncKind::power: {
            double p = model.exponent();
            if (is_integer_in_range(p, 0, n)) return std::nullopt;  // f^(n+1) == 0
            int sign = 1;
            for (int i = 0; i <= n; ++i)
                if (p - i < 0) sign = -sign;
            return sign;
        }
        case FuncKind::log_power: {
            int k = model.log_degree();
            if (k <= n) return ((n - k) % 2 == 0) ? 1 : -1;
            return sampled_sign(model, n, a, b);
        }
        case FuncKind::exponential:
            return 1;
        case FuncKind::shifted: {
            // a polynomial offset of degree <= n vanishes under d^(n+1)
            if (static_cast<int>(model.offset().size()) - 1 <= n)
                return nonvanishing_sign(model.base(), n, a, b);
            return sampled_sign(model, n, a, b);
        }
    }
    return std::nullopt;
}

int check_nonvanishing(const FunctionModel& model, int n, double a, double b) {
    if (auto s = nonvanishing_sign(model, n, a, b)) return *s;
    throw undefined_mean_error("mean undefined for this (f, m1, m2): derivative of order " +
                               std::to_string(n + 1) + " of " + model.describe() +
                               " vanishes on the interval");
}

namespace {

double parse_number(std::string_view text) {
    double value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("invalid numeric literal: '" + std::string(text) + "'");
    return value;
}

} // namespace

FunctionModel parse_model(std::string_view text) {
    if (text == "exp") return FunctionModel::exponential();
    if (text.starts_with("power:"))
        return FunctionModel::power(parse_number(text.substr(6)));
    if (text.starts_with("logpower:")) {
        double k = parse_number(text.substr(9));
        if (k != std::round(k) || k < 0)
            throw std::invalid_argument("logpower degree must be a nonnegative integer");
        return FunctionModel::log_power(static_cast<int>(k));
    }
    throw std::invalid_argument("unknown model literal: '" + std::string(text) +
                                "' (expected power:<p>, logpower:<k>, or exp)");
}

} // namespace hmeans
