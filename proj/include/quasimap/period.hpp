#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quasimap/rational.hpp"

namespace qm {

// Polynomial in one formal parameter with exact rational coefficients.
using ParamPoly = std::map<int, Rational>;

// Truncated power series in t whose coefficients are ParamPoly values.
struct PeriodSeries {
    std::map<int, ParamPoly> coeffs;  // t-exponent -> polynomial
    int order = 0;                    // truncation order (inclusive)
    std::string parameter = "x";

    bool operator==(const PeriodSeries&) const = default;
};

std::string param_poly_to_string(const ParamPoly& p, const std::string& var);

// One A_beta summand of the del Pezzo quantum period: an exact rational
// multiple of q1^a q2^b z^c.
struct ABetaTerm {
    Rational coefficient;
    long long q1_exp = 0;
    long long q2_exp = 0;
    long long z_exp = 0;
};

// The factorial-ratio summand for beta = (b1, b2, b3), all >= 0.
ABetaTerm a_beta(long long b1, long long b2, long long b3);

// Quantum period G(x,t) of the del Pezzo surface: the exponential prefactor
// e^{-t(x+5)} against the harmonic-corrected A_beta sum at q1 = t,
// q2 = t(x-3), z = 1, truncated at t^order.
PeriodSeries quantum_period(int order);

// Multiplies the t^n coefficient by n!.
PeriodSeries regularize(const PeriodSeries& s);

// Specializes the parameter to a rational value.
std::map<int, Rational> specialize(const PeriodSeries& s, const Rational& x);

// Laurent polynomial in two variables with ParamPoly coefficients.
using LaurentPoly2 = std::map<std::pair<int, int>, ParamPoly>;

// Classical period: the t^n coefficient is the constant term of f^n.
PeriodSeries classical_period(const LaurentPoly2& f, int order,
                              const std::string& parameter = "a");

// The conjectural mirror of the del Pezzo surface:
//   a y + (x/y^2)(1+y)^3 + (1/(x y^2))(1+y)^4 + 7/y + 2/y^2.
LaurentPoly2 delpezzo_mirror();

}  // namespace qm
