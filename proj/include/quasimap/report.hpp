#pragma once

#include <string>
#include <vector>

#include "quasimap/iseries.hpp"
#include "quasimap/period.hpp"

namespace qm {

enum class Format { kHuman, kMachine };

// One record per line, space separated, rationals as "p/q": byte-stable
// across runs. Human mode adds sector aliases and light alignment.
std::string format_anticones(const std::vector<Anticone>& list, Format f);

std::string format_effective(const Presentation& p, const TruncationSpec& t,
                             const std::vector<RatClass>& classes, Format f);

// mode_h_zero: per-(q,sector) z-tables of rational coefficients, f0 terms
// excluded (callers surface `warnings`). Symbolic mode prints H-monomials and
// the f0 pieces with their unresolved-class marker.
std::string format_iseries(const Presentation& p, const ISeries& s,
                           bool mode_h_zero, Format f,
                           std::vector<std::string>* warnings);

std::string format_mirror_map(const Presentation& p, const MirrorMap& mu,
                              Format f);

std::string format_period(const PeriodSeries& s, Format f);

}  // namespace qm
