#include "quasimap/rational.hpp"

#include <sstream>

#include "quasimap/errors.hpp"

namespace qm {

std::optional<Rational> rat_try_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // mpq accepts "p/q" directly but tolerates whitespace and leading '+' poorly
    // across GMP versions, so normalize first.
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        t.push_back(c);
    }
    if (t.empty()) return std::nullopt;
    if (t.front() == '+') t.erase(t.begin());
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, t.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        return std::nullopt;
    }
    mpq_canonicalize(q);
    Rational out(q);
    mpq_clear(q);
    return out;
}

Rational rat_from_string(const std::string& s) {
    auto r = rat_try_parse(s);
    if (!r) throw ParseError("not a rational: \"" + s + "\"");
    return *r;
}

std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

mpz_class rat_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

mpz_class rat_ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rational frac_part(const Rational& r) {
    return r - Rational(rat_floor(r));
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Error("integer out of range: " + z.get_str());
    return z.get_si();
}

Rational harmonic(unsigned long n) {
    Rational sum = 0;
    for (unsigned long k = 1; k <= n; ++k) sum += Rational(1, k);
    return sum;
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::string ratvec_to_string(const RatVec& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += rat_to_string(v[i]);
    }
    return out;
}

RatVec ratvec_from_string(const std::string& s, char sep) {
    RatVec out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(rat_from_string(item));
    return out;
}

}  // namespace qm
