#pragma once

#include <string>

#include "quasimap/presentation.hpp"

namespace qm {

// Reads a presentation from its JSON configuration. Keys: rank, weights
// (m rows of n integers), theta, roots, e_weights, weyl_generators,
// g_effective ("torus" or a 1-based list of index lists), restriction (rows
// of rationals as strings), ci_effective (null, "all", or a 1-based list of
// index lists), labels, extended. ParseError messages name the offending key.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

// Deterministic serialization; parse(serialize(p)) == p.
std::string serialize_presentation(const Presentation& p);

}  // namespace qm
