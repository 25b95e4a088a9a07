#include "quasimap/iseries.hpp"

#include <algorithm>
#include <set>

#include "quasimap/errors.hpp"

namespace qm {

CFactor c_factor(const RatClass& beta, const IntVec& xi, bool circ) {
    CFactor f;
    f.xi.assign(xi.begin(), xi.end());
    Rational d = pairing(beta, xi);
    if (d <= 0) {
        for (Rational k = d + 1; k < 0; k += 1) f.ks.push_back(k);
        if (!circ && is_integer(d) && d < 0) f.extra_c1 = true;
    } else {
        Rational k = frac_part(d);
        if (k == 0) k = 1;
        for (; k <= d; k += 1) f.ks.push_back(k);
        f.inverse = true;
    }
    return f;
}

ZLaurent realize_c_factor(const CFactor& f, int z_lo, int h_max) {
    if (f.inverse) return expand_inverse_factors(f.xi, f.ks, z_lo, h_max);
    return product_of_linear_factors(f.xi, f.ks, f.extra_c1);
}

namespace {

IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// Roots come in +- pairs; pick the representative whose first nonzero entry
// is positive, once per pair.
std::vector<IntVec> canonical_root_pairs(const Presentation& p) {
    std::multiset<IntVec> pool(p.roots.begin(), p.roots.end());
    std::vector<IntVec> out;
    while (!pool.empty()) {
        IntVec rho = *pool.begin();
        pool.erase(pool.begin());
        IntVec neg = negated(rho);
        auto it = pool.find(neg);
        if (it == pool.end())
            throw Error("roots are not closed under negation");
        pool.erase(it);
        for (auto v : rho) {
            if (v > 0) break;
            if (v < 0) {
                rho = neg;
                break;
            }
        }
        out.push_back(rho);
    }
    return out;
}

struct FactorSet {
    Rational sign = 1;
    std::vector<CFactor> polys;
    std::vector<CFactor> inverses;
    std::vector<HLinearForm> denominator;
};

void push_inverted(FactorSet& fs, CFactor f) {
    if (f.extra_c1)
        throw Error("internal: inverse of a factor with a bare c1 term");
    if (f.ks.empty()) return;
    f.inverse = !f.inverse;
    (f.inverse ? fs.inverses : fs.polys).push_back(std::move(f));
}

void push_direct(FactorSet& fs, CFactor f) {
    if (f.ks.empty() && !f.extra_c1) return;
    (f.inverse ? fs.inverses : fs.polys).push_back(std::move(f));
}

}  // namespace

Contribution contribution(const Presentation& p, const RatClass& beta,
                          const TruncationSpec& t) {
    int m = p.rank;
    Contribution out;
    out.beta = beta;
    out.sector = sector_label(beta);
    if (!inertia_nonempty(beta, p)) {
        out.zero = true;
        out.value = ZLaurent(m);
        return out;
    }

    bool nonneg = true;
    int codim = 0;
    for (const auto& eps : p.e_weight_cols) {
        Rational v = pairing(beta, eps);
        if (is_integer(v) && v < 0) nonneg = false;
        if (is_integer(v) && v >= 0) ++codim;
    }
    out.i_nonnegative = nonneg;
    bool circ = !nonneg;
    if (!nonneg) out.f0 = F0Info{codim};

    FactorSet fs;
    auto root_pairs = canonical_root_pairs(p);
    for (const auto& rho : root_pairs) {
        Rational d = pairing(beta, rho);
        if (d == 0) continue;
        if (is_integer(d)) {
            // C(b,rho)^{-1} C(b,-rho)^{-1} = (-1)^d (c_rho + d z) / c_rho;
            // the division waits for the anti-invariant orbit sum.
            if (mpz_odd_p(d.get_num().get_mpz_t())) fs.sign = -fs.sign;
            CFactor f;
            f.xi.assign(rho.begin(), rho.end());
            f.ks.push_back(d);
            fs.polys.push_back(std::move(f));
            fs.denominator.push_back(HLinearForm(rho.begin(), rho.end()));
        } else {
            push_inverted(fs, c_factor(beta, rho, false));
            push_inverted(fs, c_factor(beta, negated(rho), false));
        }
    }
    for (const auto& eps : p.e_weight_cols)
        push_inverted(fs, c_factor(beta, eps, circ));
    for (const auto& xi : p.weight_cols)
        push_direct(fs, c_factor(beta, xi, circ));

    // Window bookkeeping. Divisions by the root forms cost one H-degree each,
    // and each inverse group's expansion depth must support the final floor.
    int h_int = t.h_degree_max + static_cast<int>(root_pairs.size());
    int total_top = 0;
    for (const auto& f : fs.polys) total_top += static_cast<int>(f.ks.size());
    for (const auto& f : fs.inverses) total_top -= static_cast<int>(f.ks.size());
    std::vector<int> z_needs;
    for (const auto& f : fs.inverses) {
        int top_f = -static_cast<int>(f.ks.size());
        z_needs.push_back(t.z_min - (total_top - top_f));
    }
    for (int zn : z_needs) h_int = std::max(h_int, -zn - 1);

    ZLaurent val = ZLaurent::constant(m, fs.sign);
    for (const auto& f : fs.polys) val = val * realize_c_factor(f, 0, h_int);
    for (size_t i = 0; i < fs.inverses.size(); ++i)
        val = val * realize_c_factor(fs.inverses[i], z_needs[i], h_int);
    val.restrict_window(t.z_min, h_int);
    out.value = std::move(val);
    out.denominator = std::move(fs.denominator);
    return out;
}

namespace {

SectorLabel transport_label(const IntMatrix& w, const SectorLabel& label) {
    RatVec moved = dual_weyl_action(w, label);
    for (auto& v : moved) v = frac_part(v);
    return moved;
}

// Sums the given values over the union of their root denominators and divides
// exactly.
ZLaurent sum_over_common_denominator(
    const std::vector<const Contribution*>& members) {
    std::vector<HLinearForm> all_forms;
    for (const auto* c : members) {
        // Union with multiplicity: each member lists a form at most once per
        // root pair, so the union keeps the max count across members.
        std::map<HLinearForm, int> mine;
        for (const auto& d : c->denominator) ++mine[d];
        std::map<HLinearForm, int> have;
        for (const auto& d : all_forms) ++have[d];
        for (const auto& [form, cnt] : mine)
            for (int k = have[form]; k < cnt; ++k) all_forms.push_back(form);
    }
    std::sort(all_forms.begin(), all_forms.end());
    ZLaurent total;
    bool first = true;
    for (const auto* c : members) {
        ZLaurent v = c->value;
        std::map<HLinearForm, int> mine;
        for (const auto& d : c->denominator) ++mine[d];
        for (const auto& form : all_forms) {
            if (mine[form] > 0) {
                --mine[form];
                continue;
            }
            v = v * HPoly::linear_form(form);
        }
        if (first) {
            total = std::move(v);
            first = false;
        } else {
            total += v;
        }
    }
    for (const auto& form : all_forms) total = divide_exact(total, form);
    return total;
}

}  // namespace

OrbitSum orbit_sum(const std::vector<Contribution>& contribs,
                   const Presentation& p) {
    OrbitSum out;
    // F^0-supported terms stay symbolic and are grouped apart; division still
    // applies within their label when root denominators arise.
    std::map<SectorLabel, std::vector<const Contribution*>> resolved_groups;
    std::map<SectorLabel, std::vector<const Contribution*>> f0_groups;
    for (const auto& c : contribs) {
        if (c.zero) continue;
        (c.f0 ? f0_groups : resolved_groups)[c.sector].push_back(&c);
    }

    std::map<SectorLabel, ZLaurent> per_label;
    for (const auto& [label, members] : resolved_groups)
        per_label.emplace(label, sum_over_common_denominator(members));

    // Merge labels the Weyl action identifies; keep the minimal label's value.
    auto weyl = weyl_closure(p);
    std::set<SectorLabel> done;
    for (const auto& [label, value] : per_label) {
        if (done.count(label)) continue;
        SectorLabel canon = label;
        std::vector<SectorLabel> orbit;
        for (const auto& w : weyl) {
            SectorLabel moved = transport_label(w, label);
            if (per_label.count(moved)) {
                orbit.push_back(moved);
                canon = std::min(canon, moved);
            }
        }
        for (const auto& l : orbit) done.insert(l);
        out.resolved[canon] = per_label.at(canon);
    }

    for (const auto& [label, members] : f0_groups) {
        SectorLabel canon = label;
        for (const auto& w : weyl) canon = std::min(canon, transport_label(w, label));
        if (out.f0.count(canon)) continue;
        F0Piece piece;
        // Representative data is taken from the minimal member.
        const Contribution* rep = members.front();
        for (const auto* c : members)
            if (c->beta < rep->beta) rep = c;
        piece.beta = rep->beta;
        piece.codimension = rep->f0->codimension;
        piece.value = sum_over_common_denominator(members);
        out.f0[canon].push_back(std::move(piece));
    }
    return out;
}

ISeries i_series(const Presentation& p, const TruncationSpec& t) {
    ISeries s;
    s.truncation = t;
    s.image_rank = p.image_rank();
    s.nvars = p.rank;

    auto weyl = weyl_closure(p);
    std::vector<RatClass> classes = enumerate_classes(p, t);
    std::set<RatClass> assigned;
    for (const auto& c : classes) {
        if (assigned.count(c)) continue;
        std::set<RatClass> orbit;
        for (const auto& w : weyl) orbit.insert(dual_weyl_action(w, c));
        for (const auto& b : orbit) assigned.insert(b);

        std::vector<Contribution> contribs;
        for (const auto& b : orbit) contribs.push_back(contribution(p, b, t));
        OrbitSum os = orbit_sum(contribs, p);

        RatVec image = restrict_class(c, p);
        Rational deg = degree(c, p);
        for (const auto& [label, value] : os.resolved) {
            auto [it, fresh] =
                s.entries.try_emplace({image, label}, ISeriesEntry{});
            ISeriesEntry& e = it->second;
            if (fresh) {
                e.image = image;
                e.sector = label;
                e.degree = deg;
                e.value = value;
            } else {
                e.value += value;
            }
        }
        for (const auto& [label, pieces] : os.f0) {
            auto [it, fresh] =
                s.entries.try_emplace({image, label}, ISeriesEntry{});
            ISeriesEntry& e = it->second;
            if (fresh) {
                e.image = image;
                e.sector = label;
                e.degree = deg;
                e.value = ZLaurent(p.rank);
                e.value.restrict_window(t.z_min, t.h_degree_max);
            }
            for (const auto& piece : pieces) e.f0_pieces.push_back(piece);
        }
    }

    // The q^0 coefficient must be exactly the untwisted fundamental class.
    RatVec zero_image(s.image_rank, 0);
    SectorLabel zero_label(p.rank, 0);
    auto it = s.entries.find({zero_image, zero_label});
    if (it != s.entries.end()) {
        auto h0 = substitute_h_zero(it->second.value);
        if (!(h0.size() == 1 && h0.count(0) && h0[0] == 1))
            throw Error("I-series constant term is not the fundamental class");
    }
    return s;
}

MirrorMap mirror_map(const ISeries& s) {
    if (s.truncation.z_min > -1)
        throw WindowTooNarrowError(
            "mirror map needs the z-window to cover exponent -1; series was "
            "computed with z_min = " + std::to_string(s.truncation.z_min));
    MirrorMap out;
    RatVec zero_image(s.image_rank, 0);
    for (const auto& [key, entry] : s.entries) {
        if (entry.image == zero_image) continue;
        if (entry.value.is_zero() && entry.f0_pieces.empty()) continue;
        if (entry.value.z_lo() > -1)
            throw WindowTooNarrowError(
                "mirror map needs the z-window to cover exponent -1");
        std::map<int, Rational> terms;
        for (const auto& [e, poly] : entry.value.coeffs()) {
            if (e < -1) continue;
            Rational c = poly.constant_term();
            if (c != 0) terms.emplace(e + 1, c);
        }
        if (!terms.empty()) out.emplace(key, std::move(terms));
    }
    return out;
}

bool check_homogeneity(const ISeries& s, const Presentation& p) {
    for (const auto& [key, entry] : s.entries) {
        Rational a = age_of_label(entry.sector, p);
        for (const auto& [e, poly] : entry.value.coeffs()) {
            for (const auto& [mono, c] : poly.terms()) {
                int hdeg = 0;
                for (int v : mono) hdeg += v;
                if (entry.degree + e + hdeg + a != 0) return false;
            }
        }
    }
    return true;
}

bool trivial_extension_check(const Presentation& p, const TruncationSpec& t,
                             int d_max) {
    ISeries base = i_series(p, t);
    RatVec zero(p.rank, 0);
    Presentation ext = extend_by_sector(p, zero);
    TruncationSpec t2 = t;
    t2.z_min = t.z_min - d_max;
    t2.degree_max = t.degree_max + d_max;
    t2.box.emplace_back(Rational(0), Rational(d_max));
    ISeries exts = i_series(ext, t2);

    // Collect H->0 tables on both sides.
    using Key = std::pair<RatVec, SectorLabel>;
    std::map<Key, std::map<int, Rational>> base_h0, ext_h0;
    for (const auto& [key, entry] : base.entries) {
        auto h0 = substitute_h_zero(entry.value);
        if (!h0.empty()) base_h0[key] = std::move(h0);
    }
    for (const auto& [key, entry] : exts.entries) {
        auto h0 = substitute_h_zero(entry.value);
        if (!h0.empty()) ext_h0[key] = std::move(h0);
    }

    // Every base term must reappear at every d with the 1/(d! z^d) factor.
    for (const auto& [key, table] : base_h0) {
        for (int d = 0; d <= d_max; ++d) {
            RatVec image = key.first;
            image.push_back(d);
            SectorLabel label = key.second;
            label.push_back(0);
            auto it = ext_h0.find({image, label});
            for (const auto& [e, c] : table) {
                Rational expected = c / factorial(d);
                Rational got = 0;
                if (it != ext_h0.end()) {
                    auto jt = it->second.find(e - d);
                    if (jt != it->second.end()) got = jt->second;
                }
                if (got != expected) return false;
            }
        }
    }
    // And the extension must not contain anything unpredicted in range. The
    // extension's degree cap admits base parts beyond the base cap; skip
    // those since the base series has nothing to compare against.
    for (const auto& [key, entry] : exts.entries) {
        auto table = substitute_h_zero(entry.value);
        if (table.empty()) continue;
        const RatVec& image = key.first;
        const SectorLabel& label = key.second;
        Rational d_rat = image.back();
        if (!is_integer(d_rat) || d_rat < 0 || d_rat > d_max) continue;
        if (label.back() != 0) return false;
        int d = static_cast<int>(d_rat.get_num().get_si());
        if (entry.degree - d > t.degree_max) continue;
        RatVec base_image(image.begin(), image.end() - 1);
        SectorLabel base_label(label.begin(), label.end() - 1);
        auto it = base_h0.find({base_image, base_label});
        for (const auto& [e, c] : table) {
            if (e + d < t.z_min) continue;  // outside the base window
            Rational got = 0;
            if (it != base_h0.end()) {
                auto jt = it->second.find(e + d);
                if (jt != it->second.end()) got = jt->second;
            }
            if (c != got / factorial(d)) return false;
        }
    }
    return true;
}

}  // namespace qm
