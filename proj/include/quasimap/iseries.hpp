#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quasimap/effective.hpp"
#include "quasimap/zlaurent.hpp"

namespace qm {

// One C(beta, xi) (or C-circle) factor in combinatorial form: the product of
// (c_1(L_xi) + k z) over ks, possibly inverted, possibly times a bare c_1.
struct CFactor {
    bool inverse = false;  // marks [prod (c+kz)]^{-1}, expanded only on demand
    std::vector<long long> xi;
    std::vector<Rational> ks;
    bool extra_c1 = false;  // only in the non-inverted, integral-negative case
};

CFactor c_factor(const RatClass& beta, const IntVec& xi, bool circ);

// Concrete value of a factor on the window { z >= z_lo } x { H-deg <= h_max }.
ZLaurent realize_c_factor(const CFactor& f, int z_lo, int h_max);

struct F0Info {
    // l.c.i. codimension hypothesis: #{eps_j : beta(eps_j) in Z_{>=0}}.
    int codimension = 0;
};

// One I_beta(z) term. `value` is the numerator; `denominator` lists the root
// forms c_1(L_rho) whose division is deferred to the Weyl orbit sum. A set
// f0 flag means the term is supported on the F^0 locus instead of the full
// sector and is excluded from H-degree-0 reports.
struct Contribution {
    RatClass beta;
    SectorLabel sector;
    ZLaurent value;
    std::vector<HLinearForm> denominator;
    bool i_nonnegative = true;
    std::optional<F0Info> f0;
    bool zero = false;  // empty inertia sector
};

Contribution contribution(const Presentation& p, const RatClass& beta,
                          const TruncationSpec& t);

struct F0Piece {
    RatClass beta;
    int codimension = 0;
    ZLaurent value;  // coefficient of the unresolved F^0 class
};

struct OrbitSum {
    std::map<SectorLabel, ZLaurent> resolved;
    std::map<SectorLabel, std::vector<F0Piece>> f0;
};

// Sums one full Weyl orbit of contributions per sector over the common root
// denominator and divides exactly; labels the Weyl action identifies are
// merged onto the lexicographically minimal one.
OrbitSum orbit_sum(const std::vector<Contribution>& contribs,
                   const Presentation& p);

struct ISeriesEntry {
    RatVec image;        // class downstairs, via restriction
    SectorLabel sector;  // canonical label
    ZLaurent value;
    Rational degree;     // deg q^beta, constant on the restriction fiber
    std::vector<F0Piece> f0_pieces;  // excluded from H-degree-0 output
};

using ISeriesKey = std::pair<RatVec, SectorLabel>;

struct ISeries {
    std::map<ISeriesKey, ISeriesEntry> entries;
    TruncationSpec truncation;
    int image_rank = 0;
    int nvars = 0;
};

// enumerate -> contribution -> Weyl orbit sums -> group by restriction image.
// Orbits of enumerated classes are completed even past the box so that the
// anti-invariant division always sees a full orbit.
ISeries i_series(const Presentation& p, const TruncationSpec& t);

// The mirror map [zI - z]_+ restricted to H-degree 0: per (image, sector),
// a map z-exponent (>= 0) -> coefficient. Requires the series window to
// cover z^{-1}.
using MirrorMap = std::map<ISeriesKey, std::map<int, Rational>>;
MirrorMap mirror_map(const ISeries& s);

// Every stored term must satisfy deg(q^beta) + z-exp + H-deg + age == 0.
bool check_homogeneity(const ISeries& s, const Presentation& p);

// Computes I for p and for its trivial extension and verifies that the
// (beta, d) coefficient at H -> 0 equals (coefficient of beta) / (d! z^d)
// for all d <= d_max.
bool trivial_extension_check(const Presentation& p, const TruncationSpec& t,
                             int d_max = 3);

}  // namespace qm
