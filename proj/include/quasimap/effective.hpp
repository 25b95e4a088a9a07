#pragma once

#include <tuple>
#include <vector>

#include "quasimap/presentation.hpp"

namespace qm {

// A class in Hom(chi(T), Q), stored as the pairings with the basis characters.
using RatClass = RatVec;

// Fractional parts of -beta_i, each in [0,1). This names the group element
// g_beta^{-1} and hence the inertia sector carrying I_beta.
using SectorLabel = RatVec;

struct TruncationSpec {
    Rational degree_max;                           // cap on deg q^beta
    std::vector<std::pair<Rational, Rational>> box;  // per-coordinate bounds
    int z_min = -4;                                // z-window floor
    int h_degree_max = 2;                          // symbolic H-degree cap
};

SectorLabel sector_label(const RatClass& beta);
std::string sector_label_to_string(const SectorLabel& label);

// beta(xi_i) in Z_{>=0} for every i in the anticone.
bool in_c_a(const RatClass& beta, const IndexSet& a, const Presentation& p);

struct SupportSets {
    IndexSet integral;     // S: beta(xi_i) in Z
    IndexSet nonnegative;  // S^{>=0}: beta(xi_i) in Z_{>=0}
    IndexSet x_support;    // coordinates not forced to zero in X^beta
};
SupportSets support_sets(const RatClass& beta, const Presentation& p);

// Whether the inertia sector of g_beta^{-1} is nonempty: S_beta contains
// (equivalently, is) a G-effective anticone.
bool inertia_nonempty(const RatClass& beta, const Presentation& p);

// Whether beta is the class of an actual quasimap: S^{>=0}_beta contains a
// minimal G-effective anticone.
bool is_i_effective(const RatClass& beta, const Presentation& p);

// CI-effectiveness per the declarative descriptor; MissingCIDataError when the
// presentation carries none.
bool ci_effective(const RatClass& beta, const Presentation& p);

// deg q^beta = beta(sum xi_i - sum eps_j).
Rational degree(const RatClass& beta, const Presentation& p);

// Age of the sector of g_beta^{-1} on Y//G: fractional parts of -beta(.) summed
// over the X-weights, minus the E-weights, minus the roots.
Rational age(const RatClass& beta, const Presentation& p);
Rational age_of_label(const SectorLabel& label, const Presentation& p);

// Exactly the classes in the union of the C_A over minimal G-effective
// anticones, within the box, with degree <= degree_max, filtered by the
// CI-effectiveness descriptor when present. Deterministic lexicographic order.
std::vector<RatClass> enumerate_classes(const Presentation& p,
                                        const TruncationSpec& t);

// Image under the restriction matrix (length g).
RatVec restrict_class(const RatClass& beta, const Presentation& p);

}  // namespace qm
