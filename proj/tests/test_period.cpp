#include <doctest.h>

#include "quasimap/config.hpp"
#include "quasimap/iseries.hpp"
#include "quasimap/period.hpp"

using namespace qm;

namespace {

ParamPoly pp(std::initializer_list<std::pair<int, Rational>> xs) {
    ParamPoly out;
    for (const auto& [e, c] : xs)
        if (c != 0) out.emplace(e, c);
    return out;
}

void acc_term(ParamPoly& p, int e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

ParamPoly pp_mul(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) acc_term(out, ea + eb, ca * cb);
    return out;
}

}  // namespace

TEST_CASE("a_beta summands") {
    ABetaTerm zero = a_beta(0, 0, 0);
    CHECK(zero.coefficient == 1);
    CHECK(zero.q1_exp == 0);
    CHECK(zero.q2_exp == 0);
    CHECK(zero.z_exp == 0);

    ABetaTerm e3 = a_beta(0, 0, 1);
    CHECK(e3.coefficient == 1);  // q2 * 1!^4 / (1! 1!^2 1!^2)
    CHECK(e3.q1_exp == 0);
    CHECK(e3.q2_exp == 1);
    CHECK(e3.z_exp == -1);

    ABetaTerm e1 = a_beta(1, 0, 0);
    CHECK(e1.coefficient == Rational(-4));  // -2!^4 / (2!^2 1!^2)
    CHECK(e1.q1_exp == 1);
    CHECK(e1.z_exp == -1);
}

TEST_CASE("quantum period low-order structure") {
    PeriodSeries g = quantum_period(6);
    REQUIRE(g.coeffs.count(0));
    CHECK(g.coeffs.at(0) == pp({{0, Rational(1)}}));
    // The t^1 coefficient cancels between the exponential prefactor and the
    // |beta| = 1 summands.
    CHECK(!g.coeffs.count(1));
    // Observed structural bound on the computed range: x-degree <= 2n/3.
    // (The published t^3 value 6x^2 + 210x + 966 already has degree 2.)
    for (const auto& [n, poly] : g.coeffs) {
        if (n == 0) continue;
        CHECK(poly.rbegin()->first <= 2 * n / 3);
    }
}

TEST_CASE("regularized quantum period matches the published values") {
    PeriodSeries reg = regularize(quantum_period(4));
    CHECK(reg.coeffs.at(0) == pp({{0, Rational(1)}}));
    CHECK(!reg.coeffs.count(1));
    CHECK(reg.coeffs.at(2) == pp({{1, Rational(14)}, {0, Rational(70)}}));
    CHECK(reg.coeffs.at(3) ==
          pp({{2, Rational(6)}, {1, Rational(210)}, {0, Rational(966)}}));
    CHECK(reg.coeffs.at(4) ==
          pp({{2, Rational(546)}, {1, Rational(6888)}, {0, Rational(22470)}}));
}

TEST_CASE("regularize multiplies t^n by n factorial") {
    PeriodSeries s;
    s.order = 2;
    s.coeffs[0] = pp({{0, Rational(1)}});
    s.coeffs[2] = pp({{1, Rational(5)}});
    PeriodSeries r = regularize(s);
    CHECK(r.coeffs.at(0) == pp({{0, Rational(1)}}));
    CHECK(r.coeffs.at(2) == pp({{1, Rational(10)}}));
}

TEST_CASE("classical period of y + 1/y") {
    LaurentPoly2 f;
    f[{0, 1}] = pp({{0, Rational(1)}});
    f[{0, -1}] = pp({{0, Rational(1)}});
    PeriodSeries s = classical_period(f, 4);
    CHECK(s.coeffs.at(0) == pp({{0, Rational(1)}}));
    CHECK(!s.coeffs.count(1));
    CHECK(s.coeffs.at(2) == pp({{0, Rational(2)}}));
    CHECK(!s.coeffs.count(3));
    CHECK(s.coeffs.at(4) == pp({{0, Rational(6)}}));
}

TEST_CASE("mirror agreement through t^6") {
    PeriodSeries reg = regularize(quantum_period(6));
    PeriodSeries cls = classical_period(delpezzo_mirror(), 6);
    // The mirror's t^2 coefficient reads 14a + 70.
    CHECK(cls.coeffs.at(2) == pp({{1, Rational(14)}, {0, Rational(70)}}));
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        bool in_reg = reg.coeffs.count(n), in_cls = cls.coeffs.count(n);
        CHECK(in_reg == in_cls);
        if (in_reg && in_cls) CHECK(reg.coeffs.at(n) == cls.coeffs.at(n));
    }
}

TEST_CASE("x = 3 specializes consistently with the full coefficients") {
    auto table = specialize(quantum_period(4), Rational(3));
    CHECK(table.at(0) == 1);
    CHECK(!table.count(1));
    PeriodSeries g = quantum_period(4);
    for (const auto& [n, poly] : g.coeffs) {
        Rational acc = 0;
        for (const auto& [e, c] : poly) {
            Rational x = 1;
            for (int i = 0; i < e; ++i) x *= 3;
            acc += c * x;
        }
        if (acc != 0) CHECK(table.at(n) == acc);
    }
}

TEST_CASE("quantum period agrees with the I-series pipeline at H->0") {
    // Second, independent route to G(x,t): assemble the del Pezzo I-series,
    // take untwisted H-degree-0 coefficients at z = 1, q1 = t, q2 = t(x-3),
    // and multiply by the exponential prefactor.
    Presentation dp =
        load_presentation(std::string(QM_FIXTURES) + "/delpezzo.json");
    const int order = 2;
    TruncationSpec t;
    t.degree_max = order;
    t.box.assign(3, std::pair<Rational, Rational>{Rational(-2), Rational(6)});
    t.z_min = -order;
    t.h_degree_max = 1;
    ISeries s = i_series(dp, t);

    // [I]_1 as a series in t with ParamPoly coefficients.
    std::map<int, ParamPoly> i_coeffs;
    SectorLabel untwisted(3, 0);
    for (const auto& [key, entry] : s.entries) {
        if (entry.sector != untwisted) continue;
        auto table = substitute_h_zero(entry.value);
        if (table.empty()) continue;
        // q1^{b1} q2^{b2} -> t^{b1+b2} (x-3)^{b2}; z = 1.
        const RatVec& image = entry.image;
        REQUIRE(is_integer(image[0]));
        REQUIRE(is_integer(image[1]));
        long b1 = to_long(image[0].get_num()), b2 = to_long(image[1].get_num());
        if (b1 + b2 > order) continue;
        Rational total = 0;
        for (const auto& [e, c] : table) total += c;
        ParamPoly xm3 = pp({{0, Rational(-3)}, {1, Rational(1)}});
        ParamPoly term = pp({{0, total}});
        for (long i = 0; i < b2; ++i) term = pp_mul(term, xm3);
        ParamPoly& slot = i_coeffs[static_cast<int>(b1 + b2)];
        for (const auto& [e, c] : term) acc_term(slot, e, c);
    }

    // e^{-t(x+5)} * [I]_1, coefficient by coefficient.
    PeriodSeries expected = quantum_period(order);
    ParamPoly minus_x5 = pp({{0, Rational(-5)}, {1, Rational(-1)}});
    for (int n = 0; n <= order; ++n) {
        ParamPoly acc;
        ParamPoly pow = pp({{0, Rational(1)}});
        for (int k = 0; k <= n; ++k) {
            ParamPoly scaled;
            for (const auto& [e, c] : pow) scaled.emplace(e, c / factorial(k));
            auto it = i_coeffs.find(n - k);
            if (it != i_coeffs.end())
                for (const auto& [e, c] : pp_mul(scaled, it->second))
                    acc_term(acc, e, c);
            pow = pp_mul(pow, minus_x5);
        }
        ParamPoly want =
            expected.coeffs.count(n) ? expected.coeffs.at(n) : ParamPoly{};
        CAPTURE(n);
        CHECK(acc == want);
    }
}
