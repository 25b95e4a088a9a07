#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "quasimap/config.hpp"
#include "quasimap/errors.hpp"
#include "quasimap/report.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCompute = 4;

struct CommonOpts {
    std::string presentation_file;
    std::string format = "human";
    std::string output;
    std::string degree_max;
    std::string box;
    int z_min = -4;
    int h_degree_max = 2;
};

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

qm::Format format_of(const CommonOpts& o) {
    if (o.format == "machine") return qm::Format::kMachine;
    if (o.format == "human") return qm::Format::kHuman;
    throw qm::ParseError("unknown format: " + o.format);
}

// "lo:hi" for every coordinate, or per-coordinate "lo:hi,lo:hi,...".
std::vector<std::pair<qm::Rational, qm::Rational>> parse_box(
    const std::string& spec, int rank) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(spec);
    while (std::getline(is, item, ',')) parts.push_back(item);
    auto parse_range = [](const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw qm::ParseError("box range must look like lo:hi, got " + s);
        return std::make_pair(qm::rat_from_string(s.substr(0, colon)),
                              qm::rat_from_string(s.substr(colon + 1)));
    };
    std::vector<std::pair<qm::Rational, qm::Rational>> box;
    if (parts.size() == 1) {
        auto r = parse_range(parts[0]);
        box.assign(rank, r);
    } else {
        if (static_cast<int>(parts.size()) != rank)
            throw qm::ParseError("box must give one range or one per coordinate");
        for (const auto& p : parts) box.push_back(parse_range(p));
    }
    return box;
}

qm::TruncationSpec truncation_of(const CommonOpts& o, const qm::Presentation& p) {
    qm::TruncationSpec t;
    if (o.degree_max.empty())
        throw qm::ParseError("--degree-max is required (or set QUASIMAP_DEGREE_MAX)");
    t.degree_max = qm::rat_from_string(o.degree_max);
    if (o.box.empty())
        throw qm::ParseError("--box is required (or set QUASIMAP_BOX)");
    t.box = parse_box(o.box, p.rank);
    t.z_min = o.z_min;
    t.h_degree_max = o.h_degree_max;
    return t;
}

qm::Presentation load_validated(const std::string& path) {
    qm::Presentation p = qm::load_presentation(path);
    auto violations = qm::validate(p);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << "violation " << v.code << ": " << v.message << "\n";
        throw qm::ValidationError("presentation fails validation");
    }
    return p;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw qm::Error("cannot write " + o.output);
    out << text;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_truncation) {
    cmd->add_option("presentation", o.presentation_file, "presentation JSON file")
        ->required();
    cmd->add_option("--format", o.format, "human | machine");
    cmd->add_option("-o,--output", o.output, "write to file instead of stdout");
    if (with_truncation) {
        cmd->add_option("--degree-max", o.degree_max, "cap on deg q^beta (rational)");
        cmd->add_option("--box", o.box,
                        "coordinate box lo:hi (uniform) or lo:hi,... per coordinate");
        cmd->add_option("--z-min", o.z_min, "z-window floor (default -4)");
        cmd->add_option("--h-degree-max", o.h_degree_max,
                        "H-degree cap for symbolic output (default 2)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quasimap I-function engine for GIT quotient presentations"};
    app.require_subcommand(1);

    CommonOpts o;
    o.format = env_or("QUASIMAP_FORMAT", "human");
    o.degree_max = env_or("QUASIMAP_DEGREE_MAX", "");
    o.box = env_or("QUASIMAP_BOX", "");
    o.z_min = std::atoi(env_or("QUASIMAP_ZMIN", "-4").c_str());
    o.h_degree_max = std::atoi(env_or("QUASIMAP_HMAX", "2").c_str());

    auto* validate_cmd = app.add_subcommand("validate", "check a presentation file");
    add_common(validate_cmd, o, false);

    auto* anticones_cmd =
        app.add_subcommand("anticones", "minimal G-effective anticones with witnesses");
    add_common(anticones_cmd, o, false);

    auto* effective_cmd =
        app.add_subcommand("effective", "enumerate I-effective classes in a box");
    add_common(effective_cmd, o, true);

    auto* ifunction_cmd = app.add_subcommand("ifunction", "compute the I-series");
    add_common(ifunction_cmd, o, true);
    std::string mode = "h-zero";
    ifunction_cmd->add_option("--mode", mode, "h-zero | symbolic");

    auto* mirror_cmd = app.add_subcommand("mirror-map", "compute [zI - z]_+ at H->0");
    add_common(mirror_cmd, o, true);

    auto* extend_cmd =
        app.add_subcommand("extend", "emit an extended presentation");
    add_common(extend_cmd, o, false);
    std::string sector_flag, nu_weights_flag, nu_prime_flag;
    long long r_scale = 0, n_override = 0;
    bool has_n = false;
    std::string mu_flag;
    extend_cmd->add_option("--sector", sector_flag,
                           "Weyl-invariant class b1,b2,... to extend by");
    extend_cmd->add_option("--nu-weights", nu_weights_flag,
                           "explicit nu weights n1,n2,... (one per column)");
    extend_cmd->add_option("--nu-prime", nu_prime_flag, "1-PS pairing vector");
    extend_cmd->add_option("--r-scale", r_scale, "positive scale r");
    auto* nopt = extend_cmd->add_option("--N", n_override, "theta_N exponent override");
    extend_cmd->add_option("--mu-weights", mu_flag,
                           "E-weight G_m coordinates m1,m2,... (after extension)");

    auto* period_cmd =
        app.add_subcommand("period", "del Pezzo quantum period coefficients");
    int order = 4;
    bool do_regularize = false, mirror_check = false;
    std::string x_value, period_format = env_or("QUASIMAP_FORMAT", "human");
    std::string period_output;
    period_cmd->add_option("--order", order, "truncation order in t")->required();
    period_cmd->add_flag("--regularize", do_regularize, "multiply t^n by n!");
    period_cmd->add_option("--x-value", x_value, "specialize x to a rational");
    period_cmd->add_flag("--mirror-check", mirror_check,
                         "compare with the classical period of the mirror");
    period_cmd->add_option("--format", period_format, "human | machine");
    period_cmd->add_option("-o,--output", period_output, "write to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate_cmd)) {
            qm::Presentation p = qm::load_presentation(o.presentation_file);
            auto violations = qm::validate(p);
            if (violations.empty()) {
                emit(o, "ok\n");
                return 0;
            }
            std::string out;
            for (const auto& v : violations)
                out += "violation " + v.code + ": " + v.message + "\n";
            emit(o, out);
            return kExitValidation;
        }
        if (app.got_subcommand(anticones_cmd)) {
            qm::Presentation p = load_validated(o.presentation_file);
            emit(o, qm::format_anticones(qm::minimal_g_effective_anticones(p),
                                         format_of(o)));
            return 0;
        }
        if (app.got_subcommand(effective_cmd)) {
            qm::Presentation p = load_validated(o.presentation_file);
            qm::TruncationSpec t = truncation_of(o, p);
            emit(o, qm::format_effective(p, t, qm::enumerate_classes(p, t),
                                         format_of(o)));
            return 0;
        }
        if (app.got_subcommand(ifunction_cmd)) {
            qm::Presentation p = load_validated(o.presentation_file);
            qm::TruncationSpec t = truncation_of(o, p);
            if (mode != "h-zero" && mode != "symbolic")
                throw qm::ParseError("unknown mode: " + mode);
            qm::ISeries s = qm::i_series(p, t);
            std::vector<std::string> warnings;
            emit(o, qm::format_iseries(p, s, mode == "h-zero", format_of(o),
                                       &warnings));
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            return 0;
        }
        if (app.got_subcommand(mirror_cmd)) {
            qm::Presentation p = load_validated(o.presentation_file);
            qm::TruncationSpec t = truncation_of(o, p);
            qm::ISeries s = qm::i_series(p, t);
            emit(o, qm::format_mirror_map(p, qm::mirror_map(s), format_of(o)));
            return 0;
        }
        if (app.got_subcommand(extend_cmd)) {
            qm::Presentation p = load_validated(o.presentation_file);
            qm::Presentation ext;
            if (!sector_flag.empty()) {
                qm::RatVec beta = qm::ratvec_from_string(sector_flag);
                std::optional<long long> n;
                if (nopt->count()) n = n_override;
                ext = qm::extend_by_sector(p, beta, n);
            } else {
                if (nu_weights_flag.empty() || nu_prime_flag.empty() || r_scale <= 0 ||
                    !nopt->count())
                    throw qm::ParseError(
                        "extend needs --sector, or --nu-weights/--nu-prime/--r-scale/--N");
                qm::IntVec nu, nup;
                for (const auto& r : qm::ratvec_from_string(nu_weights_flag))
                    nu.push_back(qm::to_long(r.get_num()));
                for (const auto& r : qm::ratvec_from_string(nu_prime_flag))
                    nup.push_back(qm::to_long(r.get_num()));
                ext = qm::extend_presentation(p, nu, nup, r_scale, n_override);
            }
            if (!mu_flag.empty()) {
                qm::IntVec mu;
                for (const auto& r : qm::ratvec_from_string(mu_flag))
                    mu.push_back(qm::to_long(r.get_num()));
                ext = qm::extend_e_weights(ext, mu);
            }
            emit(o, qm::serialize_presentation(ext));
            return 0;
        }
        if (app.got_subcommand(period_cmd)) {
            qm::PeriodSeries s = qm::quantum_period(order);
            if (do_regularize) s = qm::regularize(s);
            std::ostringstream out;
            qm::Format f = period_format == "machine" ? qm::Format::kMachine
                                                      : qm::Format::kHuman;
            if (!x_value.empty()) {
                auto table = qm::specialize(s, qm::rat_from_string(x_value));
                for (int n = 0; n <= s.order; ++n) {
                    qm::Rational c = table.count(n) ? table.at(n) : qm::Rational(0);
                    if (f == qm::Format::kMachine)
                        out << "period " << n << " " << qm::rat_to_string(c) << "\n";
                    else
                        out << "t^" << n << " : " << qm::rat_to_string(c) << "\n";
                }
            } else {
                out << qm::format_period(s, f);
            }
            if (mirror_check) {
                qm::PeriodSeries reg = do_regularize ? s : qm::regularize(s);
                qm::PeriodSeries cls =
                    qm::classical_period(qm::delpezzo_mirror(), order);
                bool ok = true;
                for (int n = 0; n <= order; ++n) {
                    auto a = reg.coeffs.find(n);
                    auto b = cls.coeffs.find(n);
                    bool ea = (a == reg.coeffs.end() || a->second.empty());
                    bool eb = (b == cls.coeffs.end() || b->second.empty());
                    if (ea != eb || (!ea && a->second != b->second)) ok = false;
                }
                out << "mirror-check " << (ok ? "ok" : "FAIL") << "\n";
                if (!ok) {
                    std::string text = out.str();
                    if (period_output.empty())
                        std::cout << text;
                    else {
                        std::ofstream fo(period_output);
                        fo << text;
                    }
                    return kExitCompute;
                }
            }
            if (period_output.empty()) {
                std::cout << out.str();
            } else {
                std::ofstream fo(period_output);
                if (!fo) throw qm::Error("cannot write " + period_output);
                fo << out.str();
            }
            return 0;
        }
    } catch (const qm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qm::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return 0;
}
