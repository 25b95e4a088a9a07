#pragma once

#include <map>
#include <string>
#include <vector>

#include "quasimap/rational.hpp"

namespace qm {

// Exponent vector for a monomial in H_1..H_m.
using Monomial = std::vector<int>;

// Sparse polynomial in the classes H_1..H_m over Rational. Terms are kept in
// lexicographic monomial order and zero coefficients are never stored, so
// iteration (and hence serialized output) is byte-stable.
class HPoly {
  public:
    HPoly() : nvars_(0) {}
    explicit HPoly(int nvars) : nvars_(nvars) {}

    static HPoly constant(int nvars, const Rational& c);
    static HPoly variable(int nvars, int i);  // H_{i+1}
    // c_1(L_xi) = sum_i xi[i] * H_{i+1}
    static HPoly linear_form(const std::vector<long long>& xi);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& mono) const;
    Rational constant_term() const;  // evaluation at H_1 = ... = H_m = 0

    // Adds c * H^mono, erasing the term if the result cancels.
    void add_term(const Monomial& mono, const Rational& c);

    // Max total degree of a stored term; -1 for the zero polynomial.
    int total_degree() const;
    int min_degree() const;

    HPoly homogeneous_part(int degree) const;
    HPoly truncate_degree(int max_degree) const;

    // H_i |-> sum_j M[j][i] H_{j+1}; M is m x m acting on characters, so slot i
    // receives the image of the i-th basis character.
    HPoly substitute_linear(const std::vector<std::vector<long long>>& M) const;

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& rhs);
    HPoly& operator-=(const HPoly& rhs);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    HPoly operator*(const Rational& c) const;
    bool operator==(const HPoly& rhs) const = default;

    // e.g. "3/2*H1^2*H3 - H2"; "0" for the zero polynomial.
    std::string to_string() const;
    // Monomial part only, e.g. "H1^2*H3"; "1" for the constant monomial.
    static std::string monomial_to_string(const Monomial& mono);

  private:
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace qm
