#include "quasimap/period.hpp"

#include <sstream>

#include "quasimap/errors.hpp"

namespace qm {

namespace {

void add_term(ParamPoly& p, int e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

ParamPoly mul(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(out, ea + eb, ca * cb);
    return out;
}

ParamPoly scale(const ParamPoly& a, const Rational& c) {
    ParamPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : a) out.emplace(e, v * c);
    return out;
}

// (x - 3)^n as a ParamPoly.
ParamPoly x_minus_3_pow(long long n) {
    ParamPoly out{{0, Rational(1)}};
    ParamPoly base{{0, Rational(-3)}, {1, Rational(1)}};
    for (long long i = 0; i < n; ++i) out = mul(out, base);
    return out;
}

}  // namespace

std::string param_poly_to_string(const ParamPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first reads like the worked examples.
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (it->first == 0) {
            os << rat_to_string(c);
        } else {
            if (c != 1) os << rat_to_string(c) << "*";
            os << var;
            if (it->first != 1) os << "^" << it->first;
        }
        first = false;
    }
    return os.str();
}

ABetaTerm a_beta(long long b1, long long b2, long long b3) {
    if (b1 < 0 || b2 < 0 || b3 < 0)
        throw Error("a_beta: components must be nonnegative");
    ABetaTerm t;
    Rational num = factorial(2 * b1 + 2 * b2 + b3);
    num = num * num;
    num = num * num;  // (...)^4
    Rational den = factorial(b3);
    Rational f1 = factorial(b1);
    Rational f2 = factorial(b2);
    den *= f1 * f1 * f1;
    den *= f2 * f2 * f2;
    Rational g1 = factorial(2 * b1 + b2 + b3);
    Rational g2 = factorial(b1 + 2 * b2 + b3);
    den *= g1 * g1;
    den *= g2 * g2;
    t.coefficient = num / den;
    if ((b1 - b2) % 2 != 0) t.coefficient = -t.coefficient;
    t.q1_exp = b1 + b2;
    t.q2_exp = b3;
    t.z_exp = -(b1 + b2 + b3);
    return t;
}

PeriodSeries quantum_period(int order) {
    if (order < 0) throw Error("quantum_period: order must be nonnegative");
    PeriodSeries s;
    s.order = order;
    s.parameter = "x";

    // Harmonic-corrected A_beta sum with q1 = t, q2 = t(x-3), z = 1. Every
    // summand carries t^{b1+b2+b3}, so the sum below t^order is finite.
    std::map<int, ParamPoly> inner;
    for (long long total = 0; total <= order; ++total) {
        for (long long b1 = 0; b1 <= total; ++b1) {
            for (long long b2 = 0; b1 + b2 <= total; ++b2) {
                long long b3 = total - b1 - b2;
                ABetaTerm a = a_beta(b1, b2, b3);
                Rational corr = 1;
                Rational diff(static_cast<long>(b1 - b2));
                if (diff != 0) {
                    Rational bsum = -3 * harmonic(b1) + 3 * harmonic(b2) -
                                    2 * harmonic(2 * b1 + b2 + b3) +
                                    2 * harmonic(b1 + 2 * b2 + b3);
                    corr += diff / 2 * bsum;
                }
                ParamPoly contrib =
                    scale(x_minus_3_pow(b3), a.coefficient * corr);
                for (const auto& [e, c] : contrib)
                    add_term(inner[static_cast<int>(total)], e, c);
            }
        }
    }

    // e^{-t(x+5)} truncated at t^order.
    std::map<int, ParamPoly> expf;
    ParamPoly pow{{0, Rational(1)}};
    ParamPoly minus_x5{{0, Rational(-5)}, {1, Rational(-1)}};
    for (int k = 0; k <= order; ++k) {
        expf[k] = scale(pow, 1 / factorial(k));
        pow = mul(pow, minus_x5);
    }

    for (int n = 0; n <= order; ++n) {
        ParamPoly acc;
        for (int k = 0; k <= n; ++k) {
            auto it = inner.find(n - k);
            if (it == inner.end()) continue;
            for (const auto& [e, c] : mul(expf[k], it->second))
                add_term(acc, e, c);
        }
        if (!acc.empty()) s.coeffs.emplace(n, std::move(acc));
    }
    return s;
}

PeriodSeries regularize(const PeriodSeries& s) {
    PeriodSeries out;
    out.order = s.order;
    out.parameter = s.parameter;
    for (const auto& [n, p] : s.coeffs)
        out.coeffs.emplace(n, scale(p, factorial(n)));
    return out;
}

std::map<int, Rational> specialize(const PeriodSeries& s, const Rational& x) {
    std::map<int, Rational> out;
    for (const auto& [n, p] : s.coeffs) {
        Rational acc = 0;
        Rational xp = 1;
        int prev = 0;
        for (const auto& [e, c] : p) {
            for (; prev < e; ++prev) xp *= x;
            acc += c * xp;
        }
        if (acc != 0) out.emplace(n, acc);
    }
    return out;
}

PeriodSeries classical_period(const LaurentPoly2& f, int order,
                              const std::string& parameter) {
    PeriodSeries s;
    s.order = order;
    s.parameter = parameter;
    LaurentPoly2 power{{{0, 0}, ParamPoly{{0, Rational(1)}}}};
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            LaurentPoly2 next;
            for (const auto& [ea, pa] : power) {
                for (const auto& [eb, pb] : f) {
                    auto key = std::make_pair(ea.first + eb.first,
                                              ea.second + eb.second);
                    ParamPoly prod = mul(pa, pb);
                    ParamPoly& slot = next[key];
                    for (const auto& [e, c] : prod) add_term(slot, e, c);
                }
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second.empty() ? next.erase(it) : std::next(it);
            power = std::move(next);
        }
        auto it = power.find({0, 0});
        if (it != power.end() && !it->second.empty())
            s.coeffs.emplace(n, it->second);
    }
    return s;
}

LaurentPoly2 delpezzo_mirror() {
    // a y + (x/y^2)(1+y)^3 + (1/(x y^2))(1+y)^4 + 7/y + 2/y^2, with exponents
    // stored as (x-exponent, y-exponent) and the parameter a kept symbolic.
    LaurentPoly2 f;
    auto add = [&](int ex, int ey, int ea, const Rational& c) {
        add_term(f[{ex, ey}], ea, c);
    };
    add(0, 1, 1, 1);  // a*y
    // (x/y^2)(1+y)^3
    add(1, -2, 0, 1);
    add(1, -1, 0, 3);
    add(1, 0, 0, 3);
    add(1, 1, 0, 1);
    // (1/(x y^2))(1+y)^4
    add(-1, -2, 0, 1);
    add(-1, -1, 0, 4);
    add(-1, 0, 0, 6);
    add(-1, 1, 0, 4);
    add(-1, 2, 0, 1);
    add(0, -1, 0, 7);  // 7/y
    add(0, -2, 0, 2);  // 2/y^2
    return f;
}

}  // namespace qm
