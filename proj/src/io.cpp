#include "lienil/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace lienil {

json field_to_json(const FieldSpec& f) {
    switch (f.kind()) {
        case FieldKind::rational: return json{{"kind", "rational"}};
        case FieldKind::prime: return json{{"kind", "prime"}, {"p", f.characteristic()}};
        case FieldKind::extension:
            return json{{"kind", "extension"},
                        {"p", f.characteristic()},
                        {"degree", f.degree()},
                        {"modulus", f.modulus()}};
    }
    throw error("field_to_json: bad kind");
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw error("field: expected an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    auto require_int = [&](const char* key) -> i64 {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw error(std::string("field: missing integer \"") + key + "\"");
        return j[key].get<i64>();
    };
    if (kind == "rational") return FieldSpec::rationals();
    if (kind == "prime") return FieldSpec::prime(require_int("p"));
    if (kind == "extension") {
        i64 p = require_int("p");
        i64 degree = require_int("degree");
        if (!j.contains("modulus") || !j["modulus"].is_array())
            throw error("field: extension needs a \"modulus\" coefficient array");
        std::vector<i64> mod;
        for (const auto& c : j["modulus"]) {
            if (!c.is_number_integer()) throw error("field: modulus entries must be integers");
            mod.push_back(c.get<i64>());
        }
        return FieldSpec::extension(p, static_cast<int>(degree), std::move(mod));
    }
    throw error("field: unknown kind \"" + kind + "\"");
}

AlgebraDocument parse_algebra_document(const json& j) {
    if (!j.is_object()) throw error("document: expected a JSON object");
    if (!j.contains("field")) throw error("document: missing \"field\"");
    AlgebraDocument doc;
    doc.field = field_from_json(j["field"]);
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<i64>() < 1)
        throw error("document: \"n\" must be a positive integer");
    doc.n = j["n"].get<int>();
    if (!j.contains("generators") || !j["generators"].is_array())
        throw error("document: \"generators\" must be an array of matrices");
    const auto& gens = j["generators"];
    for (size_t g = 0; g < gens.size(); ++g) {
        const auto& gm = gens[g];
        std::string where = "generators[" + std::to_string(g) + "]";
        if (!gm.is_array() || gm.size() != static_cast<size_t>(doc.n))
            throw error("document: " + where + " must have " + std::to_string(doc.n) + " rows");
        Matrix m(doc.field, doc.n, doc.n);
        for (int i = 0; i < doc.n; ++i) {
            const auto& row = gm[static_cast<size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<size_t>(doc.n))
                throw error("document: " + where + "[" + std::to_string(i) + "] must have " +
                            std::to_string(doc.n) + " entries");
            for (int c = 0; c < doc.n; ++c) {
                const auto& cell = row[static_cast<size_t>(c)];
                std::string cell_where =
                    where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]";
                if (!cell.is_string()) throw error("document: " + cell_where + " must be a string");
                try {
                    m.at(i, c) = doc.field->parse(cell.get<std::string>());
                } catch (const error& e) {
                    throw error("document: " + cell_where + ": " + e.what());
                }
            }
        }
        doc.generators.push_back(std::move(m));
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw error("document: \"label\" must be a string");
        doc.label = j["label"].get<std::string>();
    }
    return doc;
}

AlgebraDocument load_algebra_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw error("invalid JSON in " + path + ": " + e.what());
    }
    return parse_algebra_document(j);
}

json to_json(const AlgebraDocument& doc) {
    json gens = json::array();
    for (const Matrix& m : doc.generators) {
        json rows = json::array();
        for (int i = 0; i < doc.n; ++i) {
            json row = json::array();
            for (int c = 0; c < doc.n; ++c) row.push_back(doc.field->to_string(m.at(i, c)));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    json out{{"field", field_to_json(*doc.field)}, {"n", doc.n}, {"generators", std::move(gens)}};
    if (!doc.label.empty()) out["label"] = doc.label;
    return out;
}

json report_to_json(const BoundReport& rep) {
    json verdicts = json::array();
    for (const BoundVerdict& v : rep.verdicts)
        verdicts.push_back(json{{"name", v.name}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"pass", v.pass}});
    json out{{"n", rep.n},
             {"dimension", rep.dimension},
             {"chain_length", rep.chain_length},
             {"radical_nilpotency_degree", rep.radical_degree},
             {"m_of_chain", rep.m_of_chain},
             {"m_of_lie", rep.m_of_lie},
             {"floor_bound", rep.floor_ceiling},
             {"verdicts", std::move(verdicts)},
             {"all_pass", rep.all_pass()},
             {"timing_ms", rep.timing_ms}};
    if (rep.lie_index) out["lie_index"] = *rep.lie_index;
    if (rep.solvability_index) out["solvability_index"] = *rep.solvability_index;
    return out;
}

namespace {

json subspace_rows_json(const Subspace& s) {
    json rows = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < s.ambient(); ++j)
            row.push_back(s.field()->to_string(s.basis().at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json trace_to_json(const ChainTrace& t) {
    json levels = json::array();
    for (size_t k = 0; k < t.levels.size(); ++k) {
        const ChainLevel& lv = t.levels[k];
        levels.push_back(json{{"k", k + 1},
                              {"dim_algebra", lv.algebra.dim()},
                              {"dim_radical", lv.radical.dim()},
                              {"dim_product", lv.product.dim()},
                              {"d", lv.d},
                              {"algebra_basis", subspace_rows_json(lv.algebra.carrier())},
                              {"radical_basis", subspace_rows_json(lv.radical)},
                              {"complement_basis", subspace_rows_json(lv.complement)},
                              {"product_basis", subspace_rows_json(lv.product)}});
    }
    return json{{"field", field_to_json(*t.field)},
                {"n", t.n},
                {"strategy",
                 t.strategy == ComplementStrategy::deterministic ? "deterministic" : "seeded"},
                {"seed", t.seed},
                {"length", t.length},
                {"d_sequence", t.d_sequence()},
                {"dim_sequence", t.dim_sequence()},
                {"levels", std::move(levels)}};
}

json verification_to_json(const ChainVerification& v) {
    json items = json::array();
    for (const CheckItem& c : v.items)
        items.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"items", std::move(items)}, {"all_pass", v.all_pass()}};
}

json sensitivity_to_json(const SensitivityReport& rep) {
    json seqs = json::array();
    for (const auto& [dims, count] : rep.dim_sequences)
        seqs.push_back(json{{"dims", dims}, {"count", count}});
    json dseqs = json::array();
    for (const auto& [d, count] : rep.d_sequences)
        dseqs.push_back(json{{"d", d}, {"count", count}});
    return json{{"trials", rep.trials},
                {"dim_sequences", std::move(seqs)},
                {"d_sequences", std::move(dseqs)},
                {"length_varied", rep.length_varied},
                {"d_varied", rep.d_varied}};
}

FieldPtr parse_field_flag(const std::string& flag) {
    if (flag == "q" || flag == "Q") return FieldSpec::rationals();
    if (flag.size() > 2 && (flag.rfind("gf", 0) == 0 || flag.rfind("GF", 0) == 0)) {
        std::string body = flag.substr(2);
        size_t caret = body.find('^');
        try {
            if (caret == std::string::npos) return FieldSpec::prime(std::stoll(body));
            i64 p = std::stoll(body.substr(0, caret));
            int k = std::stoi(body.substr(caret + 1));
            if (k == 1) return FieldSpec::prime(p);
            return FieldSpec::extension_default(p, k);
        } catch (const std::invalid_argument&) {
            throw error("bad field flag: " + flag);
        } catch (const std::out_of_range&) {
            throw error("bad field flag: " + flag);
        }
    }
    throw error("bad field flag: " + flag + " (expected q, gfP or gfP^K)");
}

}  // namespace lienil
