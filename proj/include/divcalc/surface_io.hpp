#pragma once

#include <divcalc/surface.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace divcalc {

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const std::string& key,
                                           const std::string& path) {
    if (!obj.is_object()) throw ValidationError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(path + "." + key, "missing required field");
    return *it;
}

inline long long require_int(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ValidationError(path, "expected an integer");
    return v.get<long long>();
}

inline bool require_bool(const nlohmann::json& v, const std::string& path) {
    if (!v.is_boolean()) throw ValidationError(path, "expected a boolean");
    return v.get<bool>();
}

inline std::vector<long long> require_int_array(const nlohmann::json& v, const std::string& path) {
    if (!v.is_array()) throw ValidationError(path, "expected an array of integers");
    std::vector<long long> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(require_int(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace detail

/// Builds a SurfaceModel from the surface JSON schema. Parse errors, schema
/// violations and invariant violations are reported with field paths;
/// signature violations propagate as SignatureViolation.
inline SurfaceModel load_surface(const std::string& document) {
    using detail::require_bool;
    using detail::require_field;
    using detail::require_int;
    using detail::require_int_array;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("(document)", std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("(document)", "top level must be an object");

    const long long rank = require_int(require_field(doc, "rank", "$"), "rank");
    if (rank < 1) throw ValidationError("rank", "must be a positive integer");

    const auto& qj = require_field(doc, "intersection_matrix", "$");
    if (!qj.is_array() || qj.size() != static_cast<std::size_t>(rank))
        throw ValidationError("intersection_matrix", "expected a rank x rank integer matrix");
    std::vector<std::vector<Int>> q(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto row = require_int_array(qj[i], "intersection_matrix[" + std::to_string(i) + "]");
        if (row.size() != static_cast<std::size_t>(rank))
            throw ValidationError("intersection_matrix[" + std::to_string(i) + "]",
                                  "row length differs from rank");
        q[i].assign(row.begin(), row.end());
    }
    auto form = IntersectionForm::create(std::move(q));

    const auto k_coords = require_int_array(require_field(doc, "canonical", "$"), "canonical");
    if (k_coords.size() != static_cast<std::size_t>(rank))
        throw ValidationError("canonical", "length differs from rank");

    const auto& curves_j = require_field(doc, "curves", "$");
    if (!curves_j.is_array()) throw ValidationError("curves", "expected an array");
    std::vector<CurveClass> curves;
    for (std::size_t i = 0; i < curves_j.size(); ++i) {
        const std::string path = "curves[" + std::to_string(i) + "]";
        const auto coords = require_int_array(require_field(curves_j[i], "coords", path),
                                              path + ".coords");
        if (coords.size() != static_cast<std::size_t>(rank))
            throw ValidationError(path + ".coords", "length differs from rank");
        const bool irr = require_bool(require_field(curves_j[i], "irreducible", path),
                                      path + ".irreducible");
        curves.push_back({DivisorClass::from_ints(coords), irr, 0});
    }

    const auto gen_idx = require_int_array(require_field(doc, "effective_generators", "$"),
                                           "effective_generators");
    std::vector<std::size_t> gens;
    for (long long g : gen_idx) {
        if (g < 0) throw ValidationError("effective_generators", "negative index");
        gens.push_back(static_cast<std::size_t>(g));
    }

    const auto& inv_j = require_field(doc, "invariants", "$");
    SurfaceInvariants inv;
    inv.char_p = static_cast<int>(require_int(require_field(inv_j, "char_p", "invariants"),
                                              "invariants.char_p"));
    inv.kodaira = kodaira_from_int(static_cast<int>(
        require_int(require_field(inv_j, "kodaira_dim", "invariants"), "invariants.kodaira_dim")));
    inv.quasi_elliptic = require_bool(require_field(inv_j, "quasi_elliptic", "invariants"),
                                      "invariants.quasi_elliptic");
    inv.chi_O = require_int(require_field(inv_j, "chi_O", "invariants"), "invariants.chi_O");
    inv.q = static_cast<int>(require_int(require_field(inv_j, "q", "invariants"), "invariants.q"));
    inv.volume = require_int(require_field(inv_j, "volume", "invariants"), "invariants.volume");
    {
        const auto& h1 = require_field(inv_j, "h1_nilpotent", "invariants");
        if (!h1.is_null())
            inv.h1_nilpotent = static_cast<int>(require_int(h1, "invariants.h1_nilpotent"));
    }
    {
        const auto& fs = require_field(inv_j, "frobenius_split", "invariants");
        if (!fs.is_null()) inv.frobenius_split = require_bool(fs, "invariants.frobenius_split");
    }
    {
        const auto& tags = require_field(inv_j, "class_tags", "invariants");
        if (!tags.is_array()) throw ValidationError("invariants.class_tags", "expected an array");
        for (const auto& t : tags) {
            if (!t.is_string()) throw ValidationError("invariants.class_tags", "expected strings");
            inv.class_tags.push_back(ClassTag::parse(t.get<std::string>()));
        }
    }

    const auto& comp = require_field(doc, "completeness", "$");
    const bool ncc = require_bool(require_field(comp, "negative_curves_complete", "completeness"),
                                  "completeness.negative_curves_complete");
    const bool ecp = require_bool(require_field(comp, "effective_cone_polyhedral", "completeness"),
                                  "completeness.effective_cone_polyhedral");

    return SurfaceModel::create(std::move(form), DivisorClass::from_ints(k_coords),
                                std::move(curves), std::move(gens), std::move(inv), ncc, ecp);
}

/// Serializes a model back to the surface JSON schema; load_surface of the
/// result reproduces the model exactly.
inline nlohmann::json surface_to_json(const SurfaceModel& model) {
    nlohmann::json doc;
    doc["rank"] = model.rank();
    {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < model.rank(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < model.rank(); ++j)
                row.push_back(static_cast<long long>(model.form().entry(i, j)));
            rows.push_back(std::move(row));
        }
        doc["intersection_matrix"] = std::move(rows);
    }
    {
        nlohmann::json k = nlohmann::json::array();
        for (std::size_t i = 0; i < model.rank(); ++i)
            k.push_back(static_cast<long long>(rat_num(model.canonical()[i])));
        doc["canonical"] = std::move(k);
    }
    {
        nlohmann::json curves = nlohmann::json::array();
        for (const auto& c : model.curves()) {
            nlohmann::json coords = nlohmann::json::array();
            for (std::size_t i = 0; i < model.rank(); ++i)
                coords.push_back(static_cast<long long>(rat_num(c.cls[i])));
            curves.push_back({{"coords", std::move(coords)}, {"irreducible", c.irreducible}});
        }
        doc["curves"] = std::move(curves);
    }
    doc["effective_generators"] = model.effective_generators();
    {
        const auto& inv = model.invariants();
        nlohmann::json j;
        j["char_p"] = inv.char_p;
        j["kodaira_dim"] = kodaira_to_int(inv.kodaira);
        j["quasi_elliptic"] = inv.quasi_elliptic;
        j["chi_O"] = inv.chi_O;
        j["q"] = inv.q;
        j["volume"] = inv.volume;
        if (inv.h1_nilpotent) j["h1_nilpotent"] = *inv.h1_nilpotent;
        else j["h1_nilpotent"] = nullptr;
        if (inv.frobenius_split) j["frobenius_split"] = *inv.frobenius_split;
        else j["frobenius_split"] = nullptr;
        nlohmann::json tags = nlohmann::json::array();
        for (const auto& t : inv.class_tags) tags.push_back(t.to_string());
        j["class_tags"] = std::move(tags);
        doc["invariants"] = std::move(j);
    }
    doc["completeness"] = {{"negative_curves_complete", model.negative_curves_complete()},
                           {"effective_cone_polyhedral", model.effective_cone_polyhedral()}};
    return doc;
}

}  // namespace divcalc
