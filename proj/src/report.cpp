#include "quasimap/report.hpp"

#include <sstream>

namespace qm {

namespace {

std::string sector_suffix(const Presentation& p, const SectorLabel& label) {
    auto it = p.labels.sectors.find(sector_label_to_string(label));
    if (it == p.labels.sectors.end()) return "";
    return " (" + it->second + ")";
}

std::string h_zero_poly(const std::map<int, Rational>& table) {
    std::ostringstream os;
    bool first = true;
    for (auto it = table.rbegin(); it != table.rend(); ++it) {
        if (!first) os << " + ";
        os << rat_to_string(it->second);
        if (it->first != 0) os << "*z^" << it->first;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string format_anticones(const std::vector<Anticone>& list, Format f) {
    std::ostringstream os;
    for (const auto& a : list) {
        if (f == Format::kMachine)
            os << "anticone " << index_set_to_string(a.indices) << " witness "
               << ratvec_to_string(a.witness) << "\n";
        else
            os << index_set_to_string(a.indices)
               << "  theta = " << ratvec_to_string(a.witness) << " . weights\n";
    }
    if (f == Format::kHuman && list.empty()) os << "(none)\n";
    return os.str();
}

std::string format_effective(const Presentation& p, const TruncationSpec& t,
                             const std::vector<RatClass>& classes, Format f) {
    std::ostringstream os;
    if (f == Format::kHuman)
        os << "# class | image | degree | sector | in_K i_eff ci_eff\n";
    for (const auto& beta : classes) {
        SectorLabel label = sector_label(beta);
        std::string ci = "na";
        if (p.ci_effective) ci = ci_effective(beta, p) ? "1" : "0";
        if (f == Format::kMachine) {
            os << "class " << ratvec_to_string(beta) << " image "
               << ratvec_to_string(restrict_class(beta, p)) << " degree "
               << rat_to_string(degree(beta, p)) << " sector "
               << sector_label_to_string(label) << " in_K "
               << (inertia_nonempty(beta, p) ? 1 : 0) << " i_effective "
               << (is_i_effective(beta, p) ? 1 : 0) << " ci_effective " << ci
               << "\n";
        } else {
            os << "(" << ratvec_to_string(beta) << ") | ("
               << ratvec_to_string(restrict_class(beta, p)) << ") | "
               << rat_to_string(degree(beta, p)) << " | ["
               << sector_label_to_string(label) << "]"
               << sector_suffix(p, label) << " | "
               << (inertia_nonempty(beta, p) ? 1 : 0) << " "
               << (is_i_effective(beta, p) ? 1 : 0) << " " << ci << "\n";
        }
    }
    (void)t;
    return os.str();
}

std::string format_iseries(const Presentation& p, const ISeries& s,
                           bool mode_h_zero, Format f,
                           std::vector<std::string>* warnings) {
    std::ostringstream os;
    if (f == Format::kHuman) {
        os << "I(q,z)" << (mode_h_zero ? " at H->0" : "") << ", degree <= "
           << rat_to_string(s.truncation.degree_max) << ", window z >= "
           << s.truncation.z_min << ":\n";
    }
    int f0_total = 0;
    for (const auto& [key, entry] : s.entries) {
        f0_total += static_cast<int>(entry.f0_pieces.size());
        if (mode_h_zero) {
            auto table = substitute_h_zero(entry.value);
            if (table.empty()) continue;
            if (f == Format::kMachine) {
                for (const auto& [e, c] : table)
                    os << "term q " << ratvec_to_string(entry.image) << " sector "
                       << sector_label_to_string(entry.sector) << " z " << e
                       << " coeff " << rat_to_string(c) << "\n";
            } else {
                os << "  q^(" << ratvec_to_string(entry.image) << ") * ( "
                   << h_zero_poly(table) << " ) [" << sector_label_to_string(entry.sector)
                   << "]" << sector_suffix(p, entry.sector) << "\n";
            }
        } else {
            for (const auto& [e, poly] : entry.value.coeffs()) {
                for (const auto& [mono, c] : poly.terms()) {
                    if (f == Format::kMachine) {
                        os << "term q " << ratvec_to_string(entry.image)
                           << " sector " << sector_label_to_string(entry.sector)
                           << " z " << e << " H " << HPoly::monomial_to_string(mono)
                           << " coeff " << rat_to_string(c) << "\n";
                    } else {
                        os << "  q^(" << ratvec_to_string(entry.image) << ") z^" << e
                           << " " << HPoly::monomial_to_string(mono) << " * "
                           << rat_to_string(c) << " [" << sector_label_to_string(entry.sector)
                           << "]" << sector_suffix(p, entry.sector) << "\n";
                    }
                }
            }
            for (const auto& piece : entry.f0_pieces) {
                for (const auto& [e, poly] : piece.value.coeffs()) {
                    for (const auto& [mono, c] : poly.terms()) {
                        if (f == Format::kMachine) {
                            os << "f0-term q " << ratvec_to_string(entry.image)
                               << " sector " << sector_label_to_string(entry.sector)
                               << " beta " << ratvec_to_string(piece.beta)
                               << " codim " << piece.codimension << " z " << e
                               << " H " << HPoly::monomial_to_string(mono)
                               << " coeff " << rat_to_string(c) << "\n";
                        } else {
                            os << "  q^(" << ratvec_to_string(entry.image) << ") z^" << e
                               << " " << HPoly::monomial_to_string(mono) << " * "
                               << rat_to_string(c) << " on unresolved-class F0(beta=("
                               << ratvec_to_string(piece.beta) << "), codim "
                               << piece.codimension << ")\n";
                        }
                    }
                }
            }
        }
    }
    if (mode_h_zero && f0_total > 0 && warnings)
        warnings->push_back(
            std::to_string(f0_total) +
            " term(s) supported on an unresolved F0 class were excluded from "
            "the H-degree-0 output");
    return os.str();
}

std::string format_mirror_map(const Presentation& p, const MirrorMap& mu,
                              Format f) {
    std::ostringstream os;
    if (mu.empty()) {
        if (f == Format::kHuman) os << "mu(q,z) = 0\n";
        return os.str();
    }
    for (const auto& [key, table] : mu) {
        if (f == Format::kMachine) {
            for (const auto& [e, c] : table)
                os << "mu q " << ratvec_to_string(key.first) << " sector "
                   << sector_label_to_string(key.second) << " z " << e << " coeff "
                   << rat_to_string(c) << "\n";
        } else {
            os << "  q^(" << ratvec_to_string(key.first) << ") * ( "
               << h_zero_poly(table) << " ) [" << sector_label_to_string(key.second)
               << "]" << sector_suffix(p, key.second) << "\n";
        }
    }
    return os.str();
}

std::string format_period(const PeriodSeries& s, Format f) {
    std::ostringstream os;
    for (int n = 0; n <= s.order; ++n) {
        auto it = s.coeffs.find(n);
        std::string poly = (it == s.coeffs.end())
                               ? "0"
                               : param_poly_to_string(it->second, s.parameter);
        if (f == Format::kMachine)
            os << "period " << n << " " << poly << "\n";
        else
            os << "t^" << n << " : " << poly << "\n";
    }
    return os.str();
}

}  // namespace qm
