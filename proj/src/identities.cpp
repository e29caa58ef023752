#include "hmeans/identities.hpp"

#include <charconv>
#include <functional>
#include <stdexcept>

namespace hmeans {

Rational binom_general(const Rational& q, int k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= (q - i);
    for (int i = 2; i <= k; ++i) r /= i;
    return r;
}

Rational rational_pow(const Rational& b, int e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("rational_pow: 0 cannot be inverted");
        return Rational(1) / rational_pow(b, -e);
    }
    Rational r(1), base(b);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign without digits");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("invalid rational literal: '" + std::string(s) + "'");
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

const char* to_string(IdentityName name) {
    switch (name) {
        case IdentityName::L0: return "L0";
        case IdentityName::L1: return "L1";
        case IdentityName::L2: return "L2";
        case IdentityName::lid: return "lid";
        case IdentityName::rid: return "rid";
        case IdentityName::lid2: return "lid2";
        case IdentityName::rid2: return "rid2";
        case IdentityName::lrid: return "lrid";
        case IdentityName::claim6: return "claim6";
        case IdentityName::claim7: return "claim7";
    }
    return "?";
}

std::optional<IdentityName> identity_from_string(std::string_view text) {
    using I = IdentityName;
    for (I name : {I::L0, I::L1, I::L2, I::lid, I::rid, I::lid2, I::rid2, I::lrid, I::claim6,
                   I::claim7})
        if (text == to_string(name)) return name;
    return std::nullopt;
}

std::string format_report_line(const IdentityReport& r) {
    return r.name + " " + std::to_string(r.m1) + " " + std::to_string(r.m2) + " " +
           to_string(r.param) + " " + to_string(r.lhs) + " " + to_string(r.rhs) + " " +
           (r.equal ? "true" : "false");
}

namespace {

Rational half(int num) { return Rational(num, 2); }

void require(bool ok, const char* constraint) {
    if (!ok) throw std::domain_error(std::string("identity parameter violates: ") + constraint);
}

IdentityReport make_report(IdentityName name, int m1, int m2, const Rational& param,
                           Rational lhs, Rational rhs) {
    bool equal = lhs == rhs;
    return IdentityReport{to_string(name), m1, m2, param, std::move(lhs), std::move(rhs), equal};
}

} // namespace

Rational identity_L(int m1, int m2, const Rational& b) {
    require(b != 0 && b != -1, "b != 0 and b != -1");
    Rational p = half(m1 + m2 + 1);
    Rational sum(0);
    for (int k = 0; k <= m1; ++k) {
        Rational pk = binom_general(p, k) * rational_pow(1 - b, k);
        if (k % 2 != 0) pk = -pk;
        for (int l = 0; l <= m1 - k; ++l)
            sum += binom_general(Rational(m2 + l), l) * pk * rational_pow(1 + b, -l);
    }
    return sum;
}

Rational identity_R(int m1, int m2, const Rational& b) {
    require(b != 0 && b != -1, "b != 0 and b != -1");
    Rational p = half(m1 + m2 + 1);
    Rational sum(0);
    for (int k = 0; k <= m1; ++k) {
        Rational pk = binom_general(p, k) * rational_pow(1 - b, k);
        for (int l = 0; l <= m1 - k; ++l)
            sum += binom_general(Rational(m2 + l), l) * pk * rational_pow(1 + b, -l) *
                   rational_pow(b, l - k);
    }
    return m1 < 0 ? Rational(0) : rational_pow(b, m1) * sum;
}

Rational lid_step(const Rational& L_value, int m1, int m2, const Rational& b) {
    Rational p = half(m1 + m2 + 1);
    Rational extra(0);
    for (int k = 0; k <= m1 + 1; ++k) {
        Rational t = binom_general(Rational(m2 + m1 + 1 - k), m2) * binom_general(p, k) *
                     rational_pow(1 - b, k) * rational_pow(1 + b, -m1 - 1 + k);
        extra += (k % 2 == 0) ? t : -t;
    }
    return b / (b + 1) * L_value + extra;
}

Rational rid_step(const Rational& R_value, int m1, int m2, const Rational& b) {
    Rational p = half(m1 + m2 + 1);
    Rational extra(0);
    for (int k = 0; k <= m1 + 1; ++k)
        extra += binom_general(Rational(m2 + m1 + 1 - k), m2) * binom_general(p, k) *
                 rational_pow(1 - b, k) * rational_pow(1 + b, -m1 - 1 + k) *
                 rational_pow(b, 2 * m1 + 2 - 2 * k);
    return b / (b + 1) * R_value + extra;
}

Rational lid2_step(const Rational& L_value, int m1, int m2, const Rational& b) {
    Rational p = half(m1 + m2 + 1);
    Rational front = (b + 1) / b;
    Rational lead = binom_general(p, m1) * rational_pow(1 - b, m1);
    if (m1 % 2 != 0) lead = -lead;
    Rational tail(0);
    for (int k = 0; k <= m1 - 1; ++k) {
        Rational t = binom_general(Rational(m1 + m2 - k + 1), m2 + 1) * binom_general(p, k) *
                     rational_pow(1 - b, k) * rational_pow(1 + b, -(m1 - k));
        tail += (k % 2 == 0) ? t : -t;
    }
    return front * (L_value - lead - tail);
}

Rational rid2_step(const Rational& R_value, int m1, int m2, const Rational& b) {
    Rational p = half(m1 + m2 + 1);
    Rational front = (b + 1) / b;
    Rational lead = binom_general(p, m1) * rational_pow(b - 1, m1);
    if (m1 % 2 != 0) lead = -lead;
    Rational tail(0);
    for (int k = 0; k <= m1 - 1; ++k) {
        Rational t = binom_general(Rational(m1 + m2 - k + 1), m2 + 1) * binom_general(p, k) *
                     rational_pow(b - 1, k) * rational_pow(1 + b, -m1 + k) *
                     rational_pow(b, 2 * m1 - 2 * k);
        tail += (k % 2 == 0) ? t : -t;
    }
    return front * (R_value - lead - tail);
}

namespace {

IdentityReport check_L0(int m1, const Rational& b) {
    require(m1 >= 0, "m1 >= 0");
    require(b != 0, "b != 0");
    Rational lhs(0), rhs(0);
    for (int k = 0; k <= m1; ++k) {
        Rational t = binom_general(half(m1), k) * rational_pow(1 - b, k);
        lhs += (k % 2 == 0) ? t : -t;
        rhs += t * rational_pow(b, -k);
    }
    rhs *= rational_pow(b, m1);
    return make_report(IdentityName::L0, m1, 0, b, lhs, rhs);
}

IdentityReport check_L1(int m1, int m2, const Rational& y) {
    require(m1 >= 0, "m1 >= 0");
    require(y > 0, "y > 0");
    Rational lhs(0), rhs(0);
    for (int k = 0; k <= m1; ++k) {
        Rational t = binom_general(Rational(m2 + m1 - k), m2) * binom_general(half(m2 + m1), k) *
                     rational_pow(1 - y, k);
        lhs += (k % 2 == 0) ? t : -t;
        rhs += t * rational_pow(y, -k);
    }
    rhs *= rational_pow(y, m1);
    return make_report(IdentityName::L1, m1, m2, y, lhs, rhs);
}

// claim6 spells the weight C(m2+l, m2); claim7 exchanges the m-roles.
IdentityReport check_claim(IdentityName name, int m1, int m2, const Rational& b) {
    require(b != 0 && b != -1, "b != 0 and b != -1");
    int outer = name == IdentityName::claim6 ? m1 : m2;
    int inner = name == IdentityName::claim6 ? m2 : m1;
    require(inner >= 0, "weight index >= 0");
    Rational p = half(m1 + m2 + 1);
    Rational lhs(0), rhs(0);
    for (int k = 0; k <= outer; ++k) {
        Rational pk = binom_general(p, k) * rational_pow(1 - b, k);
        for (int l = 0; l <= outer - k; ++l) {
            Rational w = binom_general(Rational(inner + l), inner) * rational_pow(1 + b, -l);
            lhs += (k % 2 == 0 ? pk : -pk) * w;
            rhs += pk * w * rational_pow(b, l - k);
        }
    }
    rhs *= rational_pow(b, outer);
    return make_report(name, m1, m2, b, lhs, rhs);
}

} // namespace

IdentityReport check_identity(IdentityName name, int m1, int m2, const Rational& param) {
    switch (name) {
        case IdentityName::L0:
            return check_L0(m1, param);
        case IdentityName::L1:
            return check_L1(m1, m2, param);
        case IdentityName::L2:
            require(m1 >= 0, "m1 >= 0");
            return make_report(name, m1, m2, param, identity_L(m1, m2, param),
                               identity_R(m1, m2, param));
        case IdentityName::lid:
            require(m1 >= 0, "m1 >= 0");
            return make_report(name, m1, m2, param, identity_L(m1 + 1, m2 - 1, param),
                               lid_step(identity_L(m1, m2, param), m1, m2, param));
        case IdentityName::rid:
            require(m1 >= 0, "m1 >= 0");
            return make_report(name, m1, m2, param, identity_R(m1 + 1, m2 - 1, param),
                               rid_step(identity_R(m1, m2, param), m1, m2, param));
        case IdentityName::lid2:
            require(m1 >= 1, "m1 >= 1 (left side lowers m1)");
            return make_report(name, m1, m2, param, identity_L(m1 - 1, m2 + 1, param),
                               lid2_step(identity_L(m1, m2, param), m1, m2, param));
        case IdentityName::rid2:
            require(m1 >= 1, "m1 >= 1 (left side lowers m1)");
            return make_report(name, m1, m2, param, identity_R(m1 - 1, m2 + 1, param),
                               rid2_step(identity_R(m1, m2, param), m1, m2, param));
        case IdentityName::lrid:
            require(m1 >= 0, "m1 >= 0");
            require(param != 0 && param != -1 && param != 1, "b outside {-1, 0, 1}");
            return make_report(name, m1, m2, param,
                               rational_pow(param, m1) * identity_L(m1, m2, 1 / param),
                               identity_R(m1, m2, param));
        case IdentityName::claim6:
        case IdentityName::claim7:
            return check_claim(name, m1, m2, param);
    }
    throw std::logic_error("unreachable identity name");
}

std::vector<IdentityReport> verify_claim5(int m1, int m2, const Rational& b) {
    require(m1 >= 0 && m2 >= 0, "m1, m2 >= 0");
    require((m1 + m2) % 2 == 0, "m1 + m2 even");
    require(b > 0, "b > 0");
    require(b != 1, "b != 1 (the (1-b) prefactors are singular as printed)");
    Rational p = half(m1 + m2 + 1);
    Rational pref = rational_pow(1 - b, -m1 - m2 - 2);

    Rational S_A1(0), S_B2(0);
    for (int k = 0; k <= m1; ++k) {
        Rational pk = binom_general(p, k) * rational_pow(1 - b, k);
        for (int l = 0; l <= m1 - k; ++l) {
            Rational w = binom_general(Rational(m2 + l), m2) * rational_pow(1 + b, -l);
            S_A1 += (k % 2 == 0 ? pk : -pk) * w;
            S_B2 += pk * w * rational_pow(b, l - k);
        }
    }
    Rational S_A2(0), S_B1(0);
    for (int k = 0; k <= m2; ++k) {
        Rational pk = binom_general(p, k) * rational_pow(1 - b, k);
        for (int l = 0; l <= m2 - k; ++l) {
            Rational w = binom_general(Rational(m1 + l), m1) * rational_pow(1 + b, -l);
            S_A2 += (k % 2 == 0 ? pk : -pk) * w;
            S_B1 += pk * w * rational_pow(b, l - k);
        }
    }

    auto sign = [](int m) { return m % 2 == 0 ? 1 : -1; };
    int two_p = m1 + m2 + 1;
    // every quantity below is (the printed expression) * b^p, which turns the
    // lone b^(-p) and b^(+p) factors into b^0 and b^(2p) respectively
    Rational lhs_ab = sign(m1) * rational_pow(b, m1 + 2 * m2 + 2) * pref *
                      rational_pow(1 + b, -m2 - 1) * S_A1;
    Rational rhs_ab = sign(m2) * rational_pow(b, 2 * two_p) * pref *
                      rational_pow(1 + b, -m2 - 1) * S_B2;
    Rational lhs_ba = sign(m2) * rational_pow(b, m2 + 2 * m1 + 2) * pref *
                      rational_pow(1 + b, -m1 - 1) * S_A2;
    Rational rhs_ba = sign(m1) * rational_pow(b, 2 * two_p) * pref *
                      rational_pow(1 + b, -m1 - 1) * S_B1;
    Rational lhs_c = -sign(m1) * pref * rational_pow(b, two_p);
    Rational rhs_c = -sign(m2) * pref * rational_pow(b, two_p);

    std::vector<IdentityReport> out;
    IdentityReport r1 = make_report(IdentityName::claim6, m1, m2, b, lhs_ab, rhs_ab);
    r1.name = "claim5-A1B2";
    IdentityReport r2 = make_report(IdentityName::claim6, m1, m2, b, lhs_ba, rhs_ba);
    r2.name = "claim5-A2B1";
    IdentityReport r3 = make_report(IdentityName::claim6, m1, m2, b, lhs_c, rhs_c);
    r3.name = "claim5-C1C2";
    out.push_back(std::move(r1));
    out.push_back(std::move(r2));
    out.push_back(std::move(r3));
    return out;
}

IdentitySuiteResult run_identity_grid(const IdentityGrid& grid, Execution exec) {
    std::vector<std::function<std::vector<IdentityReport>()>> jobs;
    for (int m1 = 0; m1 <= grid.max_m; ++m1)
        for (const Rational& b : grid.bs)
            jobs.emplace_back([m1, b] {
                return std::vector{check_identity(IdentityName::L0, m1, 0, b)};
            });
    for (int m1 = 1; m1 <= grid.max_m; ++m1) {
        for (int m2 = 0; m2 < m1; ++m2) {
            for (const Rational& y : grid.ys)
                jobs.emplace_back([m1, m2, y] {
                    return std::vector{check_identity(IdentityName::L1, m1, m2, y)};
                });
            for (const Rational& b : grid.bs) {
                using I = IdentityName;
                for (I name : {I::L2, I::lid, I::rid, I::lid2, I::rid2, I::lrid, I::claim6,
                               I::claim7})
                    jobs.emplace_back([name, m1, m2, b] {
                        return std::vector{check_identity(name, m1, m2, b)};
                    });
                if ((m1 + m2) % 2 == 0)
                    jobs.emplace_back([m1, m2, b] { return verify_claim5(m1, m2, b); });
            }
        }
    }

    std::vector<std::vector<IdentityReport>> results(jobs.size());
    for_each_index(jobs.size(), exec, [&](std::size_t i) { results[i] = jobs[i](); });

    IdentitySuiteResult out;
    for (auto& batch : results)
        for (auto& r : batch) {
            if (!r.equal) ++out.failures;
            out.instances.push_back(std::move(r));
        }
    return out;
}

} // namespace hmeans
