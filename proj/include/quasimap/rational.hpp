#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qm {

// Every scalar in the engine is an exact rational. GMP keeps values in
// canonical form: lowest terms, positive denominator.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;

// The two-argument mpq constructor does not reduce; this one does. Use it
// whenever numerator and denominator arrive separately.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (decimal, optional sign). Throws ParseError on garbage
// or zero denominator.
Rational rat_from_string(const std::string& s);
std::optional<Rational> rat_try_parse(const std::string& s);

// Renders "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rational& r);

bool is_integer(const Rational& r);
mpz_class rat_floor(const Rational& r);
mpz_class rat_ceil(const Rational& r);

// r - floor(r), always in [0,1).
Rational frac_part(const Rational& r);

long to_long(const mpz_class& z);

// Sum_{k=1..n} 1/k, exactly. harmonic(0) == 0.
Rational harmonic(unsigned long n);

Rational factorial(unsigned long n);

std::string ratvec_to_string(const RatVec& v, char sep = ',');
RatVec ratvec_from_string(const std::string& s, char sep = ',');

}  // namespace qm
