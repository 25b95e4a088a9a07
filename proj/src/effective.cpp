#include "quasimap/effective.hpp"

#include <algorithm>
#include <set>

#include "quasimap/errors.hpp"
#include "quasimap/lattice.hpp"

namespace qm {

SectorLabel sector_label(const RatClass& beta) {
    SectorLabel label(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) label[i] = frac_part(-beta[i]);
    return label;
}

std::string sector_label_to_string(const SectorLabel& label) {
    return ratvec_to_string(label);
}

bool in_c_a(const RatClass& beta, const IndexSet& a, const Presentation& p) {
    for (int i : a) {
        Rational v = pairing(beta, p.weight_cols.at(i));
        if (!is_integer(v) || v < 0) return false;
    }
    return true;
}

SupportSets support_sets(const RatClass& beta, const Presentation& p) {
    SupportSets s;
    for (int i = 0; i < p.n_weights(); ++i) {
        Rational v = pairing(beta, p.weight_cols[i]);
        if (!is_integer(v)) continue;
        s.integral.push_back(i);
        if (v >= 0) s.nonnegative.push_back(i);
    }
    s.x_support = s.nonnegative;
    return s;
}

static bool contains_minimal(const IndexSet& sorted_set, const Presentation& p) {
    for (const auto& a : minimal_g_effective_anticones(p)) {
        if (std::includes(sorted_set.begin(), sorted_set.end(),
                          a.indices.begin(), a.indices.end()))
            return true;
    }
    return false;
}

bool inertia_nonempty(const RatClass& beta, const Presentation& p) {
    return contains_minimal(support_sets(beta, p).integral, p);
}

bool is_i_effective(const RatClass& beta, const Presentation& p) {
    return contains_minimal(support_sets(beta, p).nonnegative, p);
}

bool ci_effective(const RatClass& beta, const Presentation& p) {
    if (!p.ci_effective)
        throw MissingCIDataError("presentation carries no CI-effectiveness data");
    if (std::holds_alternative<CiEffectiveAll>(*p.ci_effective))
        return is_i_effective(beta, p);
    for (const auto& a : std::get<CiEffectiveAnticones>(*p.ci_effective).anticones)
        if (in_c_a(beta, a, p)) return true;
    return false;
}

Rational degree(const RatClass& beta, const Presentation& p) {
    IntVec det(p.rank, 0);
    for (const auto& xi : p.weight_cols)
        for (int j = 0; j < p.rank; ++j) det[j] += xi[j];
    for (const auto& eps : p.e_weight_cols)
        for (int j = 0; j < p.rank; ++j) det[j] -= eps[j];
    return pairing(beta, det);
}

Rational age(const RatClass& beta, const Presentation& p) {
    Rational acc = 0;
    for (const auto& xi : p.weight_cols) acc += frac_part(-pairing(beta, xi));
    for (const auto& eps : p.e_weight_cols) acc -= frac_part(-pairing(beta, eps));
    for (const auto& rho : p.roots) acc -= frac_part(-pairing(beta, rho));
    return acc;
}

Rational age_of_label(const SectorLabel& label, const Presentation& p) {
    // The label stores frac(-beta_i); any lift gives the same fractional ages.
    RatClass lift(label.size());
    for (size_t i = 0; i < label.size(); ++i) lift[i] = -label[i];
    return age(lift, p);
}

std::vector<RatClass> enumerate_classes(const Presentation& p,
                                        const TruncationSpec& t) {
    if (static_cast<int>(t.box.size()) != p.rank)
        throw Error("enumerate: box must bound every coordinate");
    std::set<RatClass> seen;
    for (const auto& a : minimal_g_effective_anticones(p)) {
        std::vector<IntVec> gens;
        for (int i : a.indices) gens.push_back(p.weight_cols[i]);
        enumerate_dual_lattice_in_box(gens, t.box, [&](const RatVec& v) {
            if (!in_c_a(v, a.indices, p)) return;
            if (degree(v, p) > t.degree_max) return;
            bool keep = true;
            if (p.ci_effective) keep = ci_effective(v, p);
            if (keep) seen.insert(v);
        });
    }
    std::vector<RatClass> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const RatClass& x, const RatClass& y) {
        Rational dx = degree(x, p), dy = degree(y, p);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    return out;
}

RatVec restrict_class(const RatClass& beta, const Presentation& p) {
    RatVec out(p.image_rank(), 0);
    for (int i = 0; i < p.image_rank(); ++i)
        for (int j = 0; j < p.rank; ++j) out[i] += p.restriction[i][j] * beta[j];
    return out;
}

}  // namespace qm
