#include "quasimap/presentation.hpp"

#include <algorithm>
#include <set>

#include "quasimap/errors.hpp"
#include "quasimap/lp.hpp"

namespace qm {

Rational pairing(const RatVec& beta, const IntVec& xi) {
    Rational acc = 0;
    for (size_t i = 0; i < beta.size(); ++i)
        acc += beta[i] * Rational(static_cast<long>(xi.at(i)));
    return acc;
}

RatVec dual_weyl_action(const IntMatrix& w, const RatVec& beta) {
    size_t m = beta.size();
    RatVec out(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            out[i] += Rational(static_cast<long>(w[j][i])) * beta[j];
    return out;
}

IntVec weyl_on_character(const IntMatrix& w, const IntVec& xi) {
    size_t m = xi.size();
    IntVec out(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) out[i] += w[i][j] * xi[j];
    return out;
}

static IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t m = a.size();
    IntMatrix out(m, IntVec(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::vector<IntMatrix> weyl_closure(const Presentation& p, size_t max_elements) {
    IntMatrix id(p.rank, IntVec(p.rank, 0));
    for (int i = 0; i < p.rank; ++i) id[i][i] = 1;
    std::set<IntMatrix> seen{id};
    std::vector<IntMatrix> frontier{id};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& w : frontier) {
            for (const auto& g : p.weyl_generators) {
                IntMatrix prod = mat_mul(g, w);
                if (seen.insert(prod).second) {
                    if (seen.size() > max_elements)
                        throw Error("weyl_closure: group exceeds cap of " +
                                    std::to_string(max_elements));
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

static bool permutes_columns(const IntMatrix& w,
                             const std::vector<IntVec>& cols) {
    std::multiset<IntVec> before(cols.begin(), cols.end()), after;
    for (const auto& c : cols) after.insert(weyl_on_character(w, c));
    return before == after;
}

std::vector<Violation> validate(const Presentation& p) {
    std::vector<Violation> out;
    auto bad = [&](const std::string& code, const std::string& msg) {
        out.push_back({code, msg});
    };
    int m = p.rank;
    if (m <= 0) {
        bad("rank", "torus rank must be positive");
        return out;
    }
    if (static_cast<int>(p.theta.size()) != m)
        bad("theta-shape", "theta must have length " + std::to_string(m));
    for (const auto& col : p.weight_cols)
        if (static_cast<int>(col.size()) != m)
            bad("weights-shape", "every weight column must have length " +
                                     std::to_string(m));
    for (const auto& col : p.e_weight_cols)
        if (static_cast<int>(col.size()) != m)
            bad("e-weights-shape", "every E-weight column must have length " +
                                       std::to_string(m));
    for (const auto& rho : p.roots)
        if (static_cast<int>(rho.size()) != m)
            bad("roots-shape",
                "every root must have length " + std::to_string(m));
    if (!out.empty()) return out;

    {
        std::multiset<IntVec> rs(p.roots.begin(), p.roots.end());
        for (const auto& rho : p.roots) {
            IntVec neg(rho.size());
            for (size_t i = 0; i < rho.size(); ++i) neg[i] = -rho[i];
            if (rs.count(neg) != rs.count(rho)) {
                bad("root-negation", "roots must be closed under negation");
                break;
            }
        }
    }

    for (const auto& w : p.weyl_generators) {
        if (static_cast<int>(w.size()) != m ||
            std::any_of(w.begin(), w.end(), [&](const IntVec& row) {
                return static_cast<int>(row.size()) != m;
            })) {
            bad("weyl-shape", "weyl generators must be " + std::to_string(m) +
                                  "x" + std::to_string(m));
            continue;
        }
        if (!permutes_columns(w, p.weight_cols))
            bad("weyl-action", "a weyl generator does not permute the weights");
        if (!p.e_weight_cols.empty() && !permutes_columns(w, p.e_weight_cols))
            bad("weyl-action",
                "a weyl generator does not permute the E-weights");
        if (!p.roots.empty() && !permutes_columns(w, p.roots))
            bad("weyl-action", "a weyl generator does not permute the roots");
        if (weyl_on_character(w, p.theta) != p.theta)
            bad("weyl-theta", "a weyl generator moves theta");
    }

    int g = p.image_rank();
    if (g == 0 || std::any_of(p.restriction.begin(), p.restriction.end(),
                              [&](const RatVec& row) {
                                  return static_cast<int>(row.size()) != m;
                              })) {
        bad("restriction-shape", "restriction must be a g x m matrix, g >= 1");
    } else {
        for (const auto& w : p.weyl_generators) {
            if (static_cast<int>(w.size()) != m) continue;
            // r is constant on Weyl orbits iff every restriction row, viewed
            // as a character of G in chi(T) coordinates, is fixed by W.
            bool ok = true;
            for (const auto& row : p.restriction) {
                RatVec moved(m, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        moved[i] += Rational(static_cast<long>(w[i][j])) * row[j];
                if (moved != row) ok = false;
            }
            if (!ok)
                bad("restriction-weyl",
                    "restriction is not constant on Weyl orbits");
        }
    }

    if (std::holds_alternative<GEffectiveTorus>(p.g_effective)) {
        if (!p.roots.empty())
            bad("torus-roots", "torus mode requires an empty root list");
        bool ident = (g == m);
        if (ident) {
            for (int i = 0; i < m && ident; ++i)
                for (int j = 0; j < m && ident; ++j)
                    if (p.restriction[i][j] != Rational(i == j ? 1 : 0))
                        ident = false;
        }
        if (!ident)
            bad("torus-restriction",
                "torus mode requires the identity restriction");
    } else {
        for (const auto& a : std::get<GEffectiveExplicit>(p.g_effective).minimal) {
            for (int i : a)
                if (i < 0 || i >= p.n_weights())
                    bad("g-effective-range",
                        "G-effective set index out of range");
        }
    }

    // Stability proxy: some anticone whose weights span Q^m must exist. The
    // full index set is an anticone as soon as any anticone is (upward
    // closure), so test that one.
    IndexSet all(p.n_weights());
    for (int i = 0; i < p.n_weights(); ++i) all[i] = i;
    bool have_spanning = false;
    if (auto w = is_anticone(p, all)) {
        std::vector<RatVec> cols;
        for (const auto& c : p.weight_cols) {
            RatVec col(c.size());
            for (size_t i = 0; i < c.size(); ++i)
                col[i] = Rational(static_cast<long>(c[i]));
            cols.push_back(col);
        }
        // Rank check via Gauss elimination.
        std::vector<RatVec> rows(m, RatVec(p.n_weights(), 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < p.n_weights(); ++j) rows[i][j] = cols[j][i];
        int rank = 0;
        for (int c = 0; c < p.n_weights() && rank < m; ++c) {
            int piv = -1;
            for (int r = rank; r < m; ++r)
                if (rows[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[rank], rows[piv]);
            for (int r = 0; r < m; ++r) {
                if (r == rank || rows[r][c] == 0) continue;
                Rational f = rows[r][c] / rows[rank][c];
                for (int k = 0; k < p.n_weights(); ++k)
                    rows[r][k] -= f * rows[rank][k];
            }
            ++rank;
        }
        have_spanning = (rank == m);
    }
    if (!have_spanning)
        bad("no-anticone",
            "theta admits no anticone whose weights span the character space");

    if (std::holds_alternative<GEffectiveExplicit>(p.g_effective)) {
        for (const auto& a : std::get<GEffectiveExplicit>(p.g_effective).minimal)
            if (!is_anticone(p, a))
                bad("g-effective-not-anticone",
                    "listed G-effective set " + index_set_to_string(a) +
                        " is not an anticone");
    }
    return out;
}

std::optional<RatVec> is_anticone(const Presentation& p, const IndexSet& a) {
    std::vector<RatVec> cols;
    for (int i : a) {
        const IntVec& xi = p.weight_cols.at(i);
        RatVec col(xi.size());
        for (size_t k = 0; k < xi.size(); ++k)
            col[k] = Rational(static_cast<long>(xi[k]));
        cols.push_back(std::move(col));
    }
    RatVec theta(p.theta.size());
    for (size_t k = 0; k < p.theta.size(); ++k)
        theta[k] = Rational(static_cast<long>(p.theta[k]));
    auto witness = positive_combination(cols, theta);
    if (!witness) return std::nullopt;
    return witness;
}

std::vector<Anticone> minimal_anticones(const Presentation& p) {
    int n = p.n_weights();
    std::vector<Anticone> found;
    // Subsets in order of size; skip supersets of anything already minimal.
    std::vector<IndexSet> minimal_sets;
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx(size);
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (k == size) {
                IndexSet a(idx.begin(), idx.end());
                for (const auto& ms : minimal_sets)
                    if (std::includes(a.begin(), a.end(), ms.begin(), ms.end()))
                        return;
                if (auto w = is_anticone(p, a)) {
                    minimal_sets.push_back(a);
                    found.push_back({a, *w});
                }
                return;
            }
            for (int i = start; i <= n - (size - k); ++i) {
                idx[k] = i;
                rec(i + 1, k + 1);
            }
        };
        rec(0, 0);
    }
    return found;
}

std::vector<Anticone> minimal_g_effective_anticones(const Presentation& p) {
    if (std::holds_alternative<GEffectiveTorus>(p.g_effective))
        return minimal_anticones(p);
    std::vector<Anticone> out;
    for (const auto& a : std::get<GEffectiveExplicit>(p.g_effective).minimal) {
        auto w = is_anticone(p, a);
        if (!w)
            throw NotAnAnticoneError("supplied G-effective set " +
                                     index_set_to_string(a) +
                                     " is not an anticone");
        out.push_back({a, *w});
    }
    std::sort(out.begin(), out.end(), [](const Anticone& x, const Anticone& y) {
        return x.indices < y.indices;
    });
    return out;
}

Presentation extend_presentation(const Presentation& p, const IntVec& nu_weights,
                                 const IntVec& nu_prime, long long r_scale,
                                 long long n_theta) {
    if (static_cast<int>(nu_weights.size()) != p.n_weights())
        throw Error("extend_presentation: nu_weights must have one entry per weight");
    if (static_cast<int>(nu_prime.size()) != p.rank)
        throw Error("extend_presentation: nu_prime must have length rank");
    if (r_scale <= 0) throw Error("extend_presentation: r_scale must be positive");
    for (int i = 0; i < p.n_weights(); ++i) {
        long long lim = 0;
        for (int j = 0; j < p.rank; ++j) lim += p.weight_cols[i][j] * nu_prime[j];
        lim -= r_scale * nu_weights[i];
        if (lim < 0)
            throw LimitFailsError(
                "limit condition fails on weight column " + std::to_string(i + 1) +
                ": <xi, nu'> - r*nu = " + std::to_string(lim));
    }
    long long theta_pair = 0;
    for (int j = 0; j < p.rank; ++j) theta_pair += p.theta[j] * nu_prime[j];
    // N > <theta, nu'> / r, exactly.
    if (Rational(static_cast<long>(n_theta)) <=
        Rational(static_cast<long>(theta_pair)) / Rational(static_cast<long>(r_scale)))
        throw NTooSmallError("N = " + std::to_string(n_theta) +
                             " does not exceed <theta,nu'>/r = " +
                             rat_to_string(Rational(static_cast<long>(theta_pair)) /
                                           Rational(static_cast<long>(r_scale))));

    Presentation q;
    q.rank = p.rank + 1;
    for (int i = 0; i < p.n_weights(); ++i) {
        IntVec col = p.weight_cols[i];
        col.push_back(nu_weights[i]);
        q.weight_cols.push_back(std::move(col));
    }
    IntVec fresh(q.rank, 0);
    fresh.back() = 1;
    q.weight_cols.push_back(fresh);
    q.theta = p.theta;
    q.theta.push_back(n_theta);
    for (const auto& rho : p.roots) {
        IntVec r = rho;
        r.push_back(0);
        q.roots.push_back(std::move(r));
    }
    for (const auto& eps : p.e_weight_cols) {
        IntVec e = eps;
        e.push_back(0);
        q.e_weight_cols.push_back(std::move(e));
    }
    for (const auto& w : p.weyl_generators) {
        IntMatrix wq(q.rank, IntVec(q.rank, 0));
        for (int i = 0; i < p.rank; ++i)
            for (int j = 0; j < p.rank; ++j) wq[i][j] = w[i][j];
        wq[q.rank - 1][q.rank - 1] = 1;
        q.weyl_generators.push_back(std::move(wq));
    }
    if (std::holds_alternative<GEffectiveTorus>(p.g_effective)) {
        q.g_effective = GEffectiveTorus{};
    } else {
        GEffectiveExplicit ge;
        for (const auto& a : std::get<GEffectiveExplicit>(p.g_effective).minimal) {
            IndexSet ext = a;
            ext.push_back(p.n_weights());  // the fresh column
            ge.minimal.push_back(std::move(ext));
        }
        q.g_effective = std::move(ge);
    }
    for (const auto& row : p.restriction) {
        RatVec r = row;
        r.push_back(0);
        q.restriction.push_back(std::move(r));
    }
    RatVec last(q.rank, 0);
    last.back() = 1;
    q.restriction.push_back(std::move(last));
    q.ci_effective = p.ci_effective;
    if (q.ci_effective &&
        std::holds_alternative<CiEffectiveAnticones>(*q.ci_effective)) {
        // CI data is tied to specific columns; an extension changes the column
        // set, so the caller must re-supply it.
        q.ci_effective.reset();
    }
    q.labels.weights = p.labels.weights;
    if (!q.labels.weights.empty()) q.labels.weights.push_back("y");
    q.extended = true;
    return q;
}

Presentation extend_by_sector(const Presentation& p, const RatVec& beta,
                              std::optional<long long> n_override) {
    if (static_cast<int>(beta.size()) != p.rank)
        throw Error("extend_by_sector: class must have length rank");
    for (const auto& w : p.weyl_generators) {
        if (dual_weyl_action(w, beta) != beta)
            throw NotWeylInvariantError(
                "class (" + ratvec_to_string(beta) +
                ") is not fixed by the Weyl generators");
    }
    IntVec nu_weights;
    for (const auto& col : p.weight_cols)
        nu_weights.push_back(-to_long(rat_ceil(pairing(beta, col))));
    // a minimal with a*beta integral.
    mpz_class a = 1;
    for (const auto& b : beta)
        mpz_lcm(a.get_mpz_t(), a.get_mpz_t(), b.get_den().get_mpz_t());
    long long r_scale = to_long(a);
    IntVec nu_prime(p.rank);
    for (int j = 0; j < p.rank; ++j) {
        // nu' = tau_{-beta} scaled by a: the 1-PS pairing <xi, nu'> = -a*beta(xi).
        Rational v = -Rational(a) * beta[j];
        nu_prime[j] = to_long(v.get_num());
    }
    RatVec theta_q(p.theta.size());
    for (size_t i = 0; i < p.theta.size(); ++i)
        theta_q[i] = Rational(static_cast<long>(p.theta[i]));
    long long n_theta;
    if (n_override) {
        n_theta = *n_override;
    } else {
        Rational bt = 0;
        for (int j = 0; j < p.rank; ++j) bt += beta[j] * theta_q[j];
        n_theta = to_long(rat_floor(-bt)) + 1;
    }
    return extend_presentation(p, nu_weights, nu_prime, r_scale, n_theta);
}

Presentation extend_e_weights(const Presentation& p, const IntVec& mu_weights) {
    if (!p.extended)
        throw NotExtendedError(
            "extend_e_weights requires an extended presentation");
    if (mu_weights.size() != p.e_weight_cols.size())
        throw Error("extend_e_weights: one mu weight per E column required");
    Presentation q = p;
    for (size_t j = 0; j < q.e_weight_cols.size(); ++j)
        q.e_weight_cols[j].back() = mu_weights[j];
    return q;
}

bool extended_anticones_check(const Presentation& p_ext, const Presentation& p) {
    std::vector<IndexSet> expected;
    try {
        for (const auto& a : minimal_g_effective_anticones(p)) {
            IndexSet e = a.indices;
            e.push_back(p.n_weights());
            expected.push_back(e);
        }
        std::vector<IndexSet> actual;
        for (const auto& a : minimal_g_effective_anticones(p_ext))
            actual.push_back(a.indices);
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        return expected == actual;
    } catch (const NotAnAnticoneError&) {
        return false;
    }
}

std::string index_set_to_string(const IndexSet& a) {
    std::string out = "{";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i] + 1);
    }
    return out + "}";
}

}  // namespace qm
