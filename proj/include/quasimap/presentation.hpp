#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quasimap/rational.hpp"

namespace qm {

using IntVec = std::vector<long long>;
using IntMatrix = std::vector<IntVec>;  // row-major

// Index subset of the weight columns (0-based internally, 1-based in all
// configuration files and reports), kept sorted.
using IndexSet = std::vector<int>;

struct Anticone {
    IndexSet indices;
    RatVec witness;  // positive a_i with theta = sum a_i xi_i
};

// G-effectiveness data: either every anticone is G-effective (abelian G), or
// an explicit list of the minimal G-effective anticones. Computing X^ss(G)
// for nonabelian G is out of reach of weight data alone, so explicit mode
// carries the case-by-case geometric conclusion as input.
struct GEffectiveTorus {
    bool operator==(const GEffectiveTorus&) const = default;
};
struct GEffectiveExplicit {
    std::vector<IndexSet> minimal;
    bool operator==(const GEffectiveExplicit&) const = default;
};
using GEffective = std::variant<GEffectiveTorus, GEffectiveExplicit>;

// CI-effectiveness for a complete-intersection presentation: either every
// I-effective class is CI-effective (Y meets every stratum), or membership in
// one of the listed coset sets C_A decides it.
struct CiEffectiveAll {
    bool operator==(const CiEffectiveAll&) const = default;
};
struct CiEffectiveAnticones {
    std::vector<IndexSet> anticones;
    bool operator==(const CiEffectiveAnticones&) const = default;
};
using CiEffective = std::variant<CiEffectiveAll, CiEffectiveAnticones>;

struct Labels {
    std::map<std::string, std::string> sectors;  // "1/3,2/3" -> display name
    std::vector<std::string> weights;            // per-column names, optional
    bool operator==(const Labels&) const = default;
};

struct Presentation {
    int rank = 0;                   // m = rank of the torus T
    std::vector<IntVec> weight_cols;    // n columns, each of length m
    IntVec theta;                   // length m
    std::vector<IntVec> roots;      // each of length m; closed under negation
    std::vector<IntVec> e_weight_cols;  // r columns, each of length m
    std::vector<IntMatrix> weyl_generators;  // m x m, acting on characters
    GEffective g_effective = GEffectiveTorus{};
    std::vector<RatVec> restriction;    // g x m matrix for r^{X,T}_{X,G}
    std::optional<CiEffective> ci_effective;
    Labels labels;
    bool extended = false;          // last torus coordinate is the G_m factor

    int n_weights() const { return static_cast<int>(weight_cols.size()); }
    int n_e_weights() const { return static_cast<int>(e_weight_cols.size()); }
    int image_rank() const { return static_cast<int>(restriction.size()); }

    bool operator==(const Presentation&) const = default;
};

struct Violation {
    std::string code;
    std::string message;
};

// Exact pairing of a class with a character: beta(xi) = sum beta_i xi_i.
Rational pairing(const RatVec& beta, const IntVec& xi);

// Dual Weyl action on classes: (w.beta)(xi) = beta(w^{-1} xi), i.e. W^T beta.
RatVec dual_weyl_action(const IntMatrix& w, const RatVec& beta);
// Action of a generator on a character column: xi |-> W xi.
IntVec weyl_on_character(const IntMatrix& w, const IntVec& xi);

// The full group generated by the generators (composition closure). Throws if
// more than max_elements arise, which signals bad input rather than a real
// Weyl group.
std::vector<IntMatrix> weyl_closure(const Presentation& p,
                                    size_t max_elements = 10000);

// Structural and semantic checks; an empty result means the presentation is
// usable. Violations are data, not exceptions.
std::vector<Violation> validate(const Presentation& p);

// Positive-span test for theta against the columns indexed by a (0-based).
// Returns the witness coefficients when a is an anticone.
std::optional<RatVec> is_anticone(const Presentation& p, const IndexSet& a);

// All inclusion-minimal anticones (any mode).
std::vector<Anticone> minimal_anticones(const Presentation& p);

// Minimal G-effective anticones: computed in torus mode, or the re-verified
// user list in explicit mode (NotAnAnticoneError if a listed set fails).
std::vector<Anticone> minimal_g_effective_anticones(const Presentation& p);

// The extension (X x A^1, G x G_m, theta_N): every weight column gains the
// nu coordinate, a fresh (0,..,0,1) column is appended, theta gains N, roots
// gain 0, e-weights gain 0 (adjust with extend_e_weights), and restriction
// extends block-diagonally. Preconditions from the underlying construction:
//   <xi_i, nu_prime> - r_scale * nu_weights[i] >= 0   (LimitFailsError)
//   N > <theta, nu_prime> / r_scale                   (NTooSmallError)
Presentation extend_presentation(const Presentation& p, const IntVec& nu_weights,
                                 const IntVec& nu_prime, long long r_scale,
                                 long long n_theta);

// Extension reaching the sector of a Weyl-invariant class: nu_weights[i] =
// -ceil(beta(xi_i)), nu_prime = -a*beta with a minimal clearing denominators,
// r_scale = a, and N = floor(-beta(theta)) + 1 unless overridden.
Presentation extend_by_sector(const Presentation& p, const RatVec& beta,
                              std::optional<long long> n_override = std::nullopt);

// Sets the G_m coordinate of every E-weight column on an extended
// presentation. Section regularity is the caller's assertion.
Presentation extend_e_weights(const Presentation& p, const IntVec& mu_weights);

// True iff the minimal G-effective anticones of p_ext are exactly
// { A union {n+1} : A minimal G-effective for p }.
bool extended_anticones_check(const Presentation& p_ext, const Presentation& p);

std::string index_set_to_string(const IndexSet& a);  // 1-based, "{2,3}"

}  // namespace qm
