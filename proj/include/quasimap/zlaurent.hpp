#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "quasimap/hpoly.hpp"

namespace qm {

// Integer coefficient vector of a nonzero linear form in the H_i (the first
// Chern class of a character line bundle).
using HLinearForm = std::vector<long long>;

// Laurent polynomial in z with HPoly coefficients, together with a validity
// window. Inverse factors (c + kz)^{-1} are only ever expanded to a finite
// z^{-1} order and a finite H-degree, so a value is trusted exactly on the
// region { z-exponent >= z_lo } x { H-degree <= h_max }. Arithmetic narrows
// the region conservatively; terms that fall outside are dropped rather than
// kept as truncation garbage.
class ZLaurent {
  public:
    static constexpr int kNoLowerBound = INT_MIN / 4;  // exact below
    static constexpr int kNoHBound = INT_MAX / 4;      // exact in H-degree

    ZLaurent() : nvars_(0) {}
    explicit ZLaurent(int nvars) : nvars_(nvars) {}

    static ZLaurent one(int nvars);
    static ZLaurent constant(int nvars, const Rational& c);
    // p * z^exp, exact.
    static ZLaurent monomial(const HPoly& p, int exp);

    int nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, HPoly>& coeffs() const { return coeffs_; }

    int z_lo() const { return z_lo_; }
    int h_max() const { return h_max_; }
    bool exact() const { return z_lo_ == kNoLowerBound && h_max_ == kNoHBound; }

    // Highest stored z-exponent (0 when empty; only meaningful for window
    // bookkeeping on nonzero values).
    int top_exponent() const;

    // Throws WindowTooNarrowError if exp is below the validity floor.
    HPoly coeff(int exp) const;
    HPoly coeff_or_zero(int exp) const;

    void add_term(int exp, const HPoly& p);

    // Tightens the window and drops everything outside it.
    void restrict_window(int z_lo, int h_max);

    ZLaurent operator-() const;
    ZLaurent& operator+=(const ZLaurent& rhs);
    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a += -b; }
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    ZLaurent operator*(const Rational& c) const;
    ZLaurent operator*(const HPoly& p) const;
    // Multiplication by z^k.
    ZLaurent shifted(int k) const;

    bool operator==(const ZLaurent& rhs) const;

    std::string to_string() const;

  private:
    void normalize();

    int nvars_;
    std::map<int, HPoly> coeffs_;
    int z_lo_ = kNoLowerBound;
    int h_max_ = kNoHBound;
};

// Exact division of every coefficient by a linear form in the H_i. Throws
// NotDivisibleError when a remainder survives; that signals a failed
// anti-invariance assumption upstream, never data to round away.
ZLaurent divide_exact(const ZLaurent& numerator, const HLinearForm& divisor);
HPoly divide_exact(const HPoly& numerator, const HLinearForm& divisor);

// Evaluates every coefficient at H_1 = ... = H_m = 0. Only nonzero entries
// are returned.
std::map<int, Rational> substitute_h_zero(const ZLaurent& v);

// prod (c_1(L_xi) + k z) over the given k, optionally times an extra c_1(L_xi).
ZLaurent product_of_linear_factors(const std::vector<long long>& xi,
                                   const std::vector<Rational>& ks,
                                   bool extra_c1);

// [prod (c_1(L_xi) + k z)]^{-1} expanded as a z^{-1} series valid on
// { z >= z_lo } x { H-degree <= h_max }. Every k must be nonzero.
ZLaurent expand_inverse_factors(const std::vector<long long>& xi,
                                const std::vector<Rational>& ks,
                                int z_lo, int h_max);

}  // namespace qm
