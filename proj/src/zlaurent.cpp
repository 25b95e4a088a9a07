#include "quasimap/zlaurent.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "quasimap/errors.hpp"

namespace qm {

ZLaurent ZLaurent::one(int nvars) {
    return constant(nvars, 1);
}

ZLaurent ZLaurent::constant(int nvars, const Rational& c) {
    ZLaurent v(nvars);
    if (c != 0) v.coeffs_.emplace(0, HPoly::constant(nvars, c));
    return v;
}

ZLaurent ZLaurent::monomial(const HPoly& p, int exp) {
    ZLaurent v(p.nvars());
    if (!p.is_zero()) v.coeffs_.emplace(exp, p);
    return v;
}

int ZLaurent::top_exponent() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

HPoly ZLaurent::coeff(int exp) const {
    if (exp < z_lo_)
        throw WindowTooNarrowError("z-exponent " + std::to_string(exp) +
                                   " below validity floor " + std::to_string(z_lo_));
    return coeff_or_zero(exp);
}

HPoly ZLaurent::coeff_or_zero(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? HPoly(nvars_) : it->second;
}

void ZLaurent::add_term(int exp, const HPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exp, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void ZLaurent::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < z_lo_) {
            it = coeffs_.erase(it);
            continue;
        }
        if (h_max_ != kNoHBound && it->second.total_degree() > h_max_) {
            it->second = it->second.truncate_degree(h_max_);
            if (it->second.is_zero()) {
                it = coeffs_.erase(it);
                continue;
            }
        }
        ++it;
    }
}

void ZLaurent::restrict_window(int z_lo, int h_max) {
    z_lo_ = std::max(z_lo_, z_lo);
    h_max_ = std::min(h_max_, h_max);
    normalize();
}

ZLaurent ZLaurent::operator-() const {
    ZLaurent out(nvars_);
    out.z_lo_ = z_lo_;
    out.h_max_ = h_max_;
    for (const auto& [e, p] : coeffs_) out.coeffs_.emplace(e, -p);
    return out;
}

ZLaurent& ZLaurent::operator+=(const ZLaurent& rhs) {
    if (nvars_ == 0 && coeffs_.empty()) nvars_ = rhs.nvars_;
    if (!rhs.coeffs_.empty() && nvars_ != rhs.nvars_)
        throw Error("ZLaurent: arity mismatch in +");
    for (const auto& [e, p] : rhs.coeffs_) add_term(e, p);
    z_lo_ = std::max(z_lo_, rhs.z_lo_);
    h_max_ = std::min(h_max_, rhs.h_max_);
    normalize();
    return *this;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent out(a.nvars_ ? a.nvars_ : b.nvars_);
    // Unknown terms of one factor (those below its floor) meet the other
    // factor's terms at exponents bounded by that factor's z-top, so the
    // product's floor rises accordingly. An empty-but-truncated value still
    // hides terms below its floor (bound z_lo - 1); an empty exact value has
    // no terms anywhere and contributes nothing. The H-degree ceiling
    // propagates independently: excess-degree unknowns only produce
    // excess-degree terms.
    auto top_bound = [](const ZLaurent& v) -> std::optional<int> {
        if (!v.coeffs_.empty()) return v.coeffs_.rbegin()->first;
        if (v.z_lo_ != ZLaurent::kNoLowerBound) return v.z_lo_ - 1;
        return std::nullopt;
    };
    auto tb_a = top_bound(a), tb_b = top_bound(b);
    if (a.z_lo_ != ZLaurent::kNoLowerBound && tb_b)
        out.z_lo_ = std::max(out.z_lo_, a.z_lo_ + *tb_b);
    if (b.z_lo_ != ZLaurent::kNoLowerBound && tb_a)
        out.z_lo_ = std::max(out.z_lo_, b.z_lo_ + *tb_a);
    out.h_max_ = std::min(a.h_max_, b.h_max_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
    if (a.nvars_ != b.nvars_) throw Error("ZLaurent: arity mismatch in *");
    for (const auto& [ea, pa] : a.coeffs_)
        for (const auto& [eb, pb] : b.coeffs_) out.add_term(ea + eb, pa * pb);
    out.normalize();
    return out;
}

ZLaurent ZLaurent::operator*(const Rational& c) const {
    ZLaurent out(nvars_);
    out.z_lo_ = z_lo_;
    out.h_max_ = h_max_;
    if (c == 0) return out;
    for (const auto& [e, p] : coeffs_) out.coeffs_.emplace(e, p * c);
    return out;
}

ZLaurent ZLaurent::operator*(const HPoly& p) const {
    return *this * ZLaurent::monomial(p, 0);
}

ZLaurent ZLaurent::shifted(int k) const {
    ZLaurent out(nvars_);
    out.z_lo_ = (z_lo_ == kNoLowerBound) ? kNoLowerBound : z_lo_ + k;
    out.h_max_ = h_max_;
    for (const auto& [e, p] : coeffs_) out.coeffs_.emplace(e + k, p);
    return out;
}

bool ZLaurent::operator==(const ZLaurent& rhs) const {
    return coeffs_ == rhs.coeffs_ && z_lo_ == rhs.z_lo_ && h_max_ == rhs.h_max_;
}

std::string ZLaurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, p] : coeffs_) {
        if (!first) os << " + ";
        os << "(" << p.to_string() << ")";
        if (e != 0) os << "*z^" << e;
        first = false;
    }
    if (z_lo_ != kNoLowerBound) os << " + O(z^" << z_lo_ - 1 << ")";
    return os.str();
}

HPoly divide_exact(const HPoly& numerator, const HLinearForm& divisor) {
    int m = static_cast<int>(divisor.size());
    int pivot = -1;
    for (int i = 0; i < m; ++i) {
        if (divisor[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw Error("divide_exact: zero divisor form");
    if (numerator.is_zero()) return HPoly(m);
    if (numerator.nvars() != m) throw Error("divide_exact: arity mismatch");

    Rational lead(static_cast<long>(divisor[pivot]));
    // ell = lead * H_pivot + rest
    HPoly rest(m);
    for (int i = 0; i < m; ++i) {
        if (i == pivot || divisor[i] == 0) continue;
        Monomial mono(m, 0);
        mono[i] = 1;
        rest.add_term(mono, Rational(static_cast<long>(divisor[i])));
    }

    // Univariate synthetic division in H_pivot with coefficients in the other
    // variables: bucket by pivot degree, then fold from the top down.
    std::map<int, HPoly> by_deg;  // pivot-degree -> coefficient (pivot removed)
    for (const auto& [mono, c] : numerator.terms()) {
        Monomial rest_mono = mono;
        int d = rest_mono[pivot];
        rest_mono[pivot] = 0;
        auto [it, ins] = by_deg.emplace(d, HPoly(m));
        it->second.add_term(rest_mono, c);
    }
    int top = by_deg.rbegin()->first;
    std::map<int, HPoly> quot_by_deg;
    HPoly carry(m);  // running coefficient at the current degree
    for (int d = top; d >= 1; --d) {
        auto it = by_deg.find(d);
        HPoly cur = carry;
        if (it != by_deg.end()) cur += it->second;
        HPoly q = cur * (1 / lead);
        if (!q.is_zero()) quot_by_deg.emplace(d - 1, q);
        // cur * H_pivot^d is consumed by q * H_pivot^{d-1} * ell; the rest part
        // of ell feeds degree d-1.
        carry = -(q * rest);
    }
    HPoly remainder = carry;
    if (auto it = by_deg.find(0); it != by_deg.end()) remainder += it->second;
    if (!remainder.is_zero())
        throw NotDivisibleError("polynomial not divisible by " +
                                HPoly::linear_form(divisor).to_string() +
                                "; remainder " + remainder.to_string());
    HPoly quotient(m);
    for (const auto& [d, p] : quot_by_deg) {
        for (const auto& [mono, c] : p.terms()) {
            Monomial full = mono;
            full[pivot] = d;
            quotient.add_term(full, c);
        }
    }
    return quotient;
}

ZLaurent divide_exact(const ZLaurent& numerator, const HLinearForm& divisor) {
    ZLaurent out(numerator.nvars());
    for (const auto& [e, p] : numerator.coeffs()) {
        HPoly q = divide_exact(p, divisor);
        if (!q.is_zero()) out.add_term(e, q);
    }
    // Degree-d quotient pieces need degree-(d+1) numerator pieces.
    int hmax = numerator.h_max() == ZLaurent::kNoHBound ? ZLaurent::kNoHBound
                                                        : numerator.h_max() - 1;
    out.restrict_window(numerator.z_lo(), hmax);
    return out;
}

std::map<int, Rational> substitute_h_zero(const ZLaurent& v) {
    std::map<int, Rational> out;
    for (const auto& [e, p] : v.coeffs()) {
        Rational c = p.constant_term();
        if (c != 0) out.emplace(e, c);
    }
    return out;
}

ZLaurent product_of_linear_factors(const std::vector<long long>& xi,
                                   const std::vector<Rational>& ks,
                                   bool extra_c1) {
    int m = static_cast<int>(xi.size());
    HPoly c1 = HPoly::linear_form(xi);
    ZLaurent out = ZLaurent::one(m);
    for (const Rational& k : ks) {
        ZLaurent factor = ZLaurent::monomial(c1, 0);
        factor += ZLaurent::monomial(HPoly::constant(m, k), 1);
        out = out * factor;
    }
    if (extra_c1) out = out * c1;
    return out;
}

ZLaurent expand_inverse_factors(const std::vector<long long>& xi,
                                const std::vector<Rational>& ks,
                                int z_lo, int h_max) {
    int m = static_cast<int>(xi.size());
    HPoly c1 = HPoly::linear_form(xi);
    ZLaurent out = ZLaurent::one(m);
    int nf = static_cast<int>(ks.size());
    for (const Rational& k : ks) {
        if (k == 0) throw Error("expand_inverse_factors: zero z-coefficient");
        // (c + kz)^{-1} = sum_{j>=0} (-1)^j c^j / k^{j+1} z^{-(j+1)}.
        // The term at z^{-(j+1)} has H-degree exactly j, so the expansion only
        // needs j <= min(h_max, depth) to cover the claimed region. Other
        // factors in this product contribute at most z^{-1} each, which the
        // per-factor floor accounts for.
        int depth_from_z = -(z_lo + (nf - 1)) - 1;
        int J = std::min(h_max, std::max(depth_from_z, 0));
        ZLaurent factor(m);
        HPoly cpow = HPoly::constant(m, 1);
        Rational kpow = 1 / k;
        for (int j = 0; j <= J; ++j) {
            HPoly coeff = cpow * (((j % 2) ? -1 : 1) * kpow);
            factor.add_term(-(j + 1), coeff);
            cpow = cpow * c1;
            kpow /= k;
        }
        factor.restrict_window(-(J + 1), h_max);
        out = out * factor;
    }
    return out;
}

}  // namespace qm
