#include "quasimap/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "quasimap/errors.hpp"

namespace qm {

using json = nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key: ") + key);
    return *it;
}

long long as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer, got " + j.dump());
    return j.get<long long>();
}

IntVec as_int_vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list");
    IntVec out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

// m rows of equal length -> column vectors of length m.
std::vector<IntVec> rows_to_cols(const json& j, int rank,
                                 const std::string& key) {
    if (!j.is_array()) throw ParseError(key + ": expected a list of rows");
    std::vector<IntVec> rows;
    for (size_t i = 0; i < j.size(); ++i)
        rows.push_back(as_int_vec(j[i], key + " row " + std::to_string(i + 1)));
    if (static_cast<int>(rows.size()) != rank)
        throw ParseError(key + ": expected " + std::to_string(rank) +
                         " rows, got " + std::to_string(rows.size()));
    size_t n = rows.empty() ? 0 : rows[0].size();
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != n)
            throw ParseError(key + ": row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries but row 1 has " +
                             std::to_string(n));
    std::vector<IntVec> cols(n, IntVec(rank));
    for (int r = 0; r < rank; ++r)
        for (size_t c = 0; c < n; ++c) cols[c][r] = rows[r][c];
    return cols;
}

IndexSet as_index_set(const json& j, int limit, const std::string& where) {
    IndexSet out;
    for (const auto& v : as_int_vec(j, where)) {
        if (v < 1 || v > limit)
            throw ParseError(where + ": index " + std::to_string(v) +
                             " out of range 1.." + std::to_string(limit));
        out.push_back(static_cast<int>(v - 1));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("configuration is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("configuration must be a JSON object");

    Presentation p;
    p.rank = static_cast<int>(as_int(require(j, "rank"), "rank"));
    if (p.rank <= 0) throw ParseError("rank: must be positive");
    p.weight_cols = rows_to_cols(require(j, "weights"), p.rank, "weights");
    p.theta = as_int_vec(require(j, "theta"), "theta");
    if (static_cast<int>(p.theta.size()) != p.rank)
        throw ParseError("theta: expected " + std::to_string(p.rank) +
                         " entries, got " + std::to_string(p.theta.size()));

    if (auto it = j.find("roots"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError("roots: expected a list");
        for (size_t i = 0; i < it->size(); ++i) {
            IntVec rho = as_int_vec((*it)[i], "roots[" + std::to_string(i) + "]");
            if (static_cast<int>(rho.size()) != p.rank)
                throw ParseError("roots[" + std::to_string(i) + "]: wrong length");
            p.roots.push_back(std::move(rho));
        }
    }
    if (auto it = j.find("e_weights"); it != j.end() && !it->is_null() &&
                                       !(it->is_array() && it->empty())) {
        p.e_weight_cols = rows_to_cols(*it, p.rank, "e_weights");
    }
    if (auto it = j.find("weyl_generators"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError("weyl_generators: expected a list");
        for (size_t g = 0; g < it->size(); ++g) {
            const json& wj = (*it)[g];
            std::string where = "weyl_generators[" + std::to_string(g) + "]";
            if (!wj.is_array() || static_cast<int>(wj.size()) != p.rank)
                throw ParseError(where + ": expected " + std::to_string(p.rank) +
                                 " rows");
            IntMatrix w;
            for (size_t r = 0; r < wj.size(); ++r) {
                IntVec row = as_int_vec(wj[r], where + " row " + std::to_string(r + 1));
                if (static_cast<int>(row.size()) != p.rank)
                    throw ParseError(where + ": row " + std::to_string(r + 1) +
                                     " has wrong length");
                w.push_back(std::move(row));
            }
            p.weyl_generators.push_back(std::move(w));
        }
    }

    {
        const json& ge = require(j, "g_effective");
        if (ge.is_string() && ge.get<std::string>() == "torus") {
            p.g_effective = GEffectiveTorus{};
        } else if (ge.is_array()) {
            GEffectiveExplicit ex;
            for (size_t i = 0; i < ge.size(); ++i)
                ex.minimal.push_back(as_index_set(
                    ge[i], p.n_weights(), "g_effective[" + std::to_string(i) + "]"));
            p.g_effective = std::move(ex);
        } else {
            throw ParseError("g_effective: expected \"torus\" or a list of index lists");
        }
    }

    {
        const json& rj = require(j, "restriction");
        if (!rj.is_array() || rj.empty())
            throw ParseError("restriction: expected a nonempty list of rows");
        for (size_t r = 0; r < rj.size(); ++r) {
            const json& row = rj[r];
            std::string where = "restriction row " + std::to_string(r + 1);
            if (!row.is_array() || static_cast<int>(row.size()) != p.rank)
                throw ParseError(where + ": expected " + std::to_string(p.rank) +
                                 " entries");
            RatVec out;
            for (const auto& cell : row) {
                if (cell.is_number_integer())
                    out.push_back(Rational(static_cast<long>(cell.get<long long>())));
                else if (cell.is_string())
                    out.push_back(rat_from_string(cell.get<std::string>()));
                else
                    throw ParseError(where + ": entries must be integers or \"p/q\" strings");
            }
            p.restriction.push_back(std::move(out));
        }
    }

    if (auto it = j.find("ci_effective"); it != j.end() && !it->is_null()) {
        if (it->is_string() && it->get<std::string>() == "all") {
            p.ci_effective = CiEffectiveAll{};
        } else if (it->is_array()) {
            CiEffectiveAnticones ce;
            for (size_t i = 0; i < it->size(); ++i)
                ce.anticones.push_back(as_index_set(
                    (*it)[i], p.n_weights(), "ci_effective[" + std::to_string(i) + "]"));
            p.ci_effective = std::move(ce);
        } else {
            throw ParseError("ci_effective: expected \"all\" or a list of index lists");
        }
    }

    if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
        if (!it->is_object()) throw ParseError("labels: expected an object");
        if (auto s = it->find("sectors"); s != it->end()) {
            for (auto& [k, v] : s->items()) {
                if (!v.is_string()) throw ParseError("labels.sectors: values must be strings");
                p.labels.sectors.emplace(k, v.get<std::string>());
            }
        }
        if (auto w = it->find("weights"); w != it->end()) {
            for (const auto& v : *w) {
                if (!v.is_string()) throw ParseError("labels.weights: values must be strings");
                p.labels.weights.push_back(v.get<std::string>());
            }
        }
    }

    if (auto it = j.find("extended"); it != j.end() && !it->is_null()) {
        if (!it->is_boolean()) throw ParseError("extended: expected true/false");
        p.extended = it->get<bool>();
    }
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

namespace {

// Hand-rolled emitter: one matrix row per line, deterministic key order.
std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string int_list(const IntVec& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string index_list(const IndexSet& a) {
    IntVec one_based;
    for (int i : a) one_based.push_back(i + 1);
    return int_list(one_based);
}

std::string matrix_rows(const std::vector<IntVec>& cols, int rank,
                        const std::string& indent) {
    if (cols.empty()) return "[]";
    std::string out = "[\n";
    for (int r = 0; r < rank; ++r) {
        IntVec row;
        for (const auto& col : cols) row.push_back(col[r]);
        out += indent + "  " + int_list(row) + (r + 1 < rank ? ",\n" : "\n");
    }
    return out + indent + "]";
}

}  // namespace

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"rank\": " << p.rank << ",\n";
    os << "  \"weights\": " << matrix_rows(p.weight_cols, p.rank, "  ") << ",\n";
    os << "  \"theta\": " << int_list(p.theta) << ",\n";
    os << "  \"roots\": [";
    for (size_t i = 0; i < p.roots.size(); ++i)
        os << (i ? ", " : "") << int_list(p.roots[i]);
    os << "],\n";
    os << "  \"e_weights\": " << matrix_rows(p.e_weight_cols, p.rank, "  ")
       << ",\n";
    os << "  \"weyl_generators\": [";
    for (size_t g = 0; g < p.weyl_generators.size(); ++g) {
        os << (g ? ", " : "") << "[";
        for (size_t r = 0; r < p.weyl_generators[g].size(); ++r)
            os << (r ? ", " : "") << int_list(p.weyl_generators[g][r]);
        os << "]";
    }
    os << "],\n";
    if (std::holds_alternative<GEffectiveTorus>(p.g_effective)) {
        os << "  \"g_effective\": \"torus\",\n";
    } else {
        os << "  \"g_effective\": [";
        const auto& list = std::get<GEffectiveExplicit>(p.g_effective).minimal;
        for (size_t i = 0; i < list.size(); ++i)
            os << (i ? ", " : "") << index_list(list[i]);
        os << "],\n";
    }
    os << "  \"restriction\": [";
    for (size_t r = 0; r < p.restriction.size(); ++r) {
        os << (r ? ", " : "") << "[";
        for (size_t c = 0; c < p.restriction[r].size(); ++c)
            os << (c ? ", " : "") << quote(rat_to_string(p.restriction[r][c]));
        os << "]";
    }
    os << "],\n";
    if (!p.ci_effective) {
        os << "  \"ci_effective\": null,\n";
    } else if (std::holds_alternative<CiEffectiveAll>(*p.ci_effective)) {
        os << "  \"ci_effective\": \"all\",\n";
    } else {
        os << "  \"ci_effective\": [";
        const auto& list =
            std::get<CiEffectiveAnticones>(*p.ci_effective).anticones;
        for (size_t i = 0; i < list.size(); ++i)
            os << (i ? ", " : "") << index_list(list[i]);
        os << "],\n";
    }
    os << "  \"labels\": {\n";
    os << "    \"sectors\": {";
    bool first = true;
    for (const auto& [k, v] : p.labels.sectors) {
        os << (first ? "" : ", ") << quote(k) << ": " << quote(v);
        first = false;
    }
    os << "},\n";
    os << "    \"weights\": [";
    for (size_t i = 0; i < p.labels.weights.size(); ++i)
        os << (i ? ", " : "") << quote(p.labels.weights[i]);
    os << "]\n  },\n";
    os << "  \"extended\": " << (p.extended ? "true" : "false") << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace qm
