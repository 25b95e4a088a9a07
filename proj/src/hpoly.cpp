#include "quasimap/hpoly.hpp"

#include <numeric>
#include <sstream>

#include "quasimap/errors.hpp"

namespace qm {

HPoly HPoly::constant(int nvars, const Rational& c) {
    HPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

HPoly HPoly::variable(int nvars, int i) {
    HPoly p(nvars);
    Monomial mono(nvars, 0);
    mono.at(i) = 1;
    p.add_term(mono, 1);
    return p;
}

HPoly HPoly::linear_form(const std::vector<long long>& xi) {
    HPoly p(static_cast<int>(xi.size()));
    for (size_t i = 0; i < xi.size(); ++i) {
        if (xi[i] == 0) continue;
        Monomial mono(xi.size(), 0);
        mono[i] = 1;
        p.add_term(mono, Rational(static_cast<long>(xi[i])));
    }
    return p;
}

Rational HPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational HPoly::constant_term() const {
    return coeff(Monomial(nvars_, 0));
}

void HPoly::add_term(const Monomial& mono, const Rational& c) {
    if (static_cast<int>(mono.size()) != nvars_)
        throw Error("HPoly: monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static int mono_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

int HPoly::total_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono_degree(mono));
    return d;
}

int HPoly::min_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) {
        int md = mono_degree(mono);
        if (d < 0 || md < d) d = md;
    }
    return d;
}

HPoly HPoly::homogeneous_part(int degree) const {
    HPoly out(nvars_);
    for (const auto& [mono, c] : terms_)
        if (mono_degree(mono) == degree) out.add_term(mono, c);
    return out;
}

HPoly HPoly::truncate_degree(int max_degree) const {
    HPoly out(nvars_);
    for (const auto& [mono, c] : terms_)
        if (mono_degree(mono) <= max_degree) out.add_term(mono, c);
    return out;
}

HPoly HPoly::substitute_linear(const std::vector<std::vector<long long>>& M) const {
    HPoly out(nvars_);
    for (const auto& [mono, c] : terms_) {
        HPoly term = HPoly::constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i) {
            if (mono[i] == 0) continue;
            std::vector<long long> image(nvars_);
            for (int j = 0; j < nvars_; ++j) image[j] = M.at(j).at(i);
            HPoly img = HPoly::linear_form(image);
            for (int e = 0; e < mono[i]; ++e) term = term * img;
        }
        out += term;
    }
    return out;
}

HPoly HPoly::operator-() const {
    HPoly out(nvars_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

HPoly& HPoly::operator+=(const HPoly& rhs) {
    if (terms_.empty() && nvars_ == 0) nvars_ = rhs.nvars_;
    if (rhs.terms_.empty()) return *this;
    if (nvars_ != rhs.nvars_) throw Error("HPoly: arity mismatch in +");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& rhs) {
    return *this += -rhs;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly out(a.nvars_ ? a.nvars_ : b.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (a.nvars_ != b.nvars_) throw Error("HPoly: arity mismatch in *");
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial mono(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) mono[i] = ma[i] + mb[i];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

HPoly HPoly::operator*(const Rational& c) const {
    HPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

std::string HPoly::monomial_to_string(const Monomial& mono) {
    std::string out;
    for (size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "H" + std::to_string(i + 1);
        if (mono[i] != 1) out += "^" + std::to_string(mono[i]);
    }
    return out.empty() ? "1" : out;
}

std::string HPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto rit = terms_.rbegin(); rit != terms_.rend(); ++rit) {
        const auto& [mono, c] = *rit;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string ms = monomial_to_string(mono);
        if (ms == "1") {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << ms;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qm
