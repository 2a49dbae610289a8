#pragma once

#include <divcalc/prover.hpp>
#include <divcalc/surface_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace divcalc::cli {

// exit codes: 0 definitive answer, 1 input/module error, 2 unknown or
// within-bound outcome
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_unknown = 2;

enum class Format { text, json };

struct Invocation {
    std::string subcommand;
    std::string builtin;       // name or name:param
    std::string surface_path;  // JSON document path
    std::vector<Rat> divisor;
    bool has_divisor = false;
    long long bound = 10;
    std::string level = "basepoint-free";  // reider
    std::vector<std::string> rule_order;   // vanishing
    Format format = Format::text;
    bool allow_relative = false;
    bool multiples = false;  // ms-certify
    CsRounding cs_rounding = CsRounding::exact_rational;
    std::optional<Int> assume_h0;
    std::optional<int> seed_exponent;
};

namespace detail {

inline SurfaceModel make_builtin(const std::string& spec) {
    std::string name = spec;
    std::optional<int> param;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        try {
            param = std::stoi(spec.substr(colon + 1));
        } catch (...) {
            throw ValidationError("--builtin", "bad parameter in '" + spec + "'");
        }
    }
    if (name == "p2" || name == "projective-plane") return make_projective_plane();
    if (name == "hirzebruch") {
        if (!param) throw ValidationError("--builtin", "hirzebruch needs a parameter, e.g. hirzebruch:2");
        return make_hirzebruch(*param);
    }
    if (name == "p1xp1") return make_hirzebruch(0);
    if (name == "delpezzo") {
        if (!param) throw ValidationError("--builtin", "delpezzo needs a parameter, e.g. delpezzo:6");
        return make_del_pezzo_blowup(*param);
    }
    if (name == "abelian") return make_abelian_shell();
    if (name == "hyperelliptic") return make_hyperelliptic_shell();
    if (name == "k3") return make_k3_shell();
    if (name == "enriques") return make_enriques_shell();
    throw ValidationError("--builtin", "unknown builtin surface '" + spec + "'");
}

inline SurfaceModel load_model(const Invocation& inv) {
    if (!inv.builtin.empty() && !inv.surface_path.empty())
        throw ValidationError("surface", "give either --builtin or --surface, not both");
    if (!inv.builtin.empty()) return make_builtin(inv.builtin);
    if (!inv.surface_path.empty()) {
        std::ifstream in(inv.surface_path);
        if (!in.good())
            throw ValidationError("--surface", "cannot read '" + inv.surface_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return load_surface(buf.str());
    }
    throw ValidationError("surface", "a surface is required: --builtin name[:param] or --surface path");
}

inline nlohmann::json coords_json(const DivisorClass& d) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) a.push_back(d[i].str());
    return a;
}

inline std::string coords_text(const DivisorClass& d) { return d.to_string(); }

inline nlohmann::json verdict_json(const PositivityVerdict& v) {
    nlohmann::json j;
    j["value"] = tri_to_string(v.value);
    j["relative_to"] = relative_to_string(v.relative_to);
    if (v.cone_coefficients) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& x : *v.cone_coefficients) c.push_back(x.str());
        j["cone_coefficients"] = std::move(c);
    }
    if (v.witness_curve) j["witness_curve"] = coords_json(*v.witness_curve);
    if (v.witness_class) j["witness_class"] = coords_json(*v.witness_class);
    if (v.witness_decomposition) {
        j["witness_decomposition"] = {{"a", coords_json(v.witness_decomposition->a)},
                                      {"b", coords_json(v.witness_decomposition->b)},
                                      {"pairing", v.witness_decomposition->pairing.str()}};
    }
    if (v.bound_used >= 0) j["bound_used"] = v.bound_used;
    if (v.bound_limited) j["bound_limited"] = true;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline std::string verdict_text(const PositivityVerdict& v) {
    std::string s = tri_to_string(v.value);
    if (v.relative_to == Relative::supplied_generators_only) s += " (relative to supplied generators)";
    if (v.bound_limited) s += " (within bound " + std::to_string(v.bound_used) + ")";
    if (!v.note.empty()) s += " -- " + v.note;
    return s;
}

inline void emit(const Invocation& inv, std::ostream& out, const nlohmann::json& j,
                 const std::string& text) {
    if (inv.format == Format::json) out << j.dump(2) << "\n";
    else out << text;
}

inline DivisorClass need_divisor(const Invocation& inv, const SurfaceModel& model) {
    if (!inv.has_divisor)
        throw ValidationError("--divisor", "this subcommand needs a divisor");
    if (inv.divisor.size() != model.rank())
        throw ValidationError("--divisor",
                              "length " + std::to_string(inv.divisor.size()) +
                                  " does not match the surface rank " +
                                  std::to_string(model.rank()));
    return DivisorClass(inv.divisor);
}

inline int run_surface_show(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    nlohmann::json j = surface_to_json(model);
    const auto cs = correction_constant(model.invariants(), inv.cs_rounding);
    j["derived"] = {{"correction_constant", cs.value.str()},
                    {"correction_case", cs_case_to_string(cs.case_used)},
                    {"negative_curves", model.negative_curve_indices()}};
    std::ostringstream t;
    t << "surface: rank " << model.rank() << ", char p = " << model.invariants().char_p << "\n";
    t << "K = " << coords_text(model.canonical()) << ", K^2 = "
      << model.pair(model.canonical(), model.canonical()).str() << "\n";
    t << "curves: " << model.curves().size() << " ("
      << model.negative_curve_indices().size() << " negative), effective generators: "
      << model.effective_generators().size() << "\n";
    t << "tags:";
    for (const auto& tag : model.invariants().class_tags) t << " " << tag.to_string();
    t << "\n";
    t << "C_S = " << cs.value.str() << " (" << cs_case_to_string(cs.case_used) << ")\n";
    emit(inv, out, j, t.str());
    return exit_ok;
}

inline int run_zariski(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    const auto zd = zariski_decompose(d, model);
    nlohmann::json j;
    j["divisor"] = coords_json(d);
    j["P"] = coords_json(zd.p);
    nlohmann::json n = nlohmann::json::array();
    for (std::size_t k = 0; k < zd.support.size(); ++k)
        n.push_back({{"curve_index", zd.support[k]},
                     {"curve", coords_json(model.curve(zd.support[k]).cls)},
                     {"coefficient", zd.coeffs[k].str()}});
    j["N"] = std::move(n);
    j["N_class"] = coords_json(zd.n);
    j["P_self_intersection"] = model.pair(zd.p, zd.p).str();
    j["relative"] = zd.relative;
    std::ostringstream t;
    t << "P = " << coords_text(zd.p) << "\n";
    t << "N = " << coords_text(zd.n);
    if (zd.support.empty()) t << " (zero)";
    t << "\n";
    for (std::size_t k = 0; k < zd.support.size(); ++k)
        t << "  coefficient " << zd.coeffs[k].str() << " on curve "
          << coords_text(model.curve(zd.support[k]).cls) << "\n";
    t << "P^2 = " << model.pair(zd.p, zd.p).str() << "\n";
    if (zd.relative) t << "note: negative-curve catalog may be incomplete\n";
    emit(inv, out, j, t.str());
    return exit_ok;
}

inline int run_izd(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    const auto izd = integral_zariski_decompose(d, model);
    const auto zp = is_Z_positive(izd.p_z, model, inv.bound);
    nlohmann::json j;
    j["divisor"] = coords_json(d);
    j["P_Z"] = coords_json(izd.p_z);
    nlohmann::json n = nlohmann::json::array();
    for (std::size_t k = 0; k < izd.support.size(); ++k)
        n.push_back({{"curve_index", izd.support[k]},
                     {"curve", coords_json(model.curve(izd.support[k]).cls)},
                     {"coefficient", izd.coeffs[k].str()}});
    j["N_Z"] = std::move(n);
    j["N_Z_class"] = coords_json(izd.n_z);
    j["relative"] = izd.relative;
    j["P_Z_z_positive"] = verdict_json(zp);
    std::ostringstream t;
    t << "P_Z = " << coords_text(izd.p_z) << "\n";
    t << "N_Z = " << coords_text(izd.n_z);
    if (izd.support.empty()) t << " (zero)";
    t << "\n";
    t << "Z-positivity of P_Z: " << verdict_text(zp) << "\n";
    if (izd.relative) t << "note: negative-curve catalog may be incomplete\n";
    emit(inv, out, j, t.str());
    return exit_ok;
}

inline int run_positivity(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    const auto psef = is_pseudoeffective(d, model);
    const auto nef = is_nef(d, model);
    const auto big = is_big(d, model);
    const auto conn = is_numerically_connected(d, model, inv.bound);
    nlohmann::json j;
    j["divisor"] = coords_json(d);
    j["pseudoeffective"] = verdict_json(psef);
    j["nef"] = verdict_json(nef);
    j["big"] = verdict_json(big);
    j["numerically_connected"] = verdict_json(conn);
    j["self_intersection"] = model.pair(d, d).str();
    std::ostringstream t;
    t << "D = " << coords_text(d) << ", D^2 = " << model.pair(d, d).str() << "\n";
    t << "pseudoeffective: " << verdict_text(psef) << "\n";
    t << "nef:             " << verdict_text(nef) << "\n";
    t << "big:             " << verdict_text(big) << "\n";
    t << "num. connected:  " << verdict_text(conn) << "\n";
    emit(inv, out, j, t.str());
    const bool any_unknown = psef.value == Tri::unknown || nef.value == Tri::unknown ||
                             big.value == Tri::unknown || conn.value == Tri::unknown;
    return any_unknown ? exit_unknown : exit_ok;
}

inline int run_reider(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    ReiderLevel level;
    if (inv.level == "basepoint-free" || inv.level == "bpf")
        level = ReiderLevel::basepoint_free;
    else if (inv.level == "very-ample")
        level = ReiderLevel::very_ample;
    else
        throw ValidationError("--level", "expected basepoint-free or very-ample");
    const auto rep = reider_check(d, model, level, inv.bound, inv.cs_rounding);
    auto obstruction_json = [&](const ReiderObstruction& o) {
        return nlohmann::json{{"B", coords_json(o.b)},
                              {"DB", o.db.str()},
                              {"B^2", o.b_sq.str()},
                              {"case", o.case_label}};
    };
    nlohmann::json j;
    j["divisor"] = coords_json(d);
    j["level"] = reider_level_to_string(rep.level);
    j["hypothesis_ok"] = rep.hypothesis_ok;
    j["D^2"] = rep.d_sq.str();
    j["threshold"] = rep.threshold.str();
    j["obstructions"] = nlohmann::json::array();
    for (const auto& o : rep.obstructions) j["obstructions"].push_back(obstruction_json(o));
    if (rep.exceptional_case) j["exceptional_case"] = obstruction_json(*rep.exceptional_case);
    j["proof_chain_matches"] = nlohmann::json::array();
    for (const auto& o : rep.proof_chain_matches)
        j["proof_chain_matches"].push_back(obstruction_json(o));
    j["enumeration_complete"] = rep.enumeration_complete;
    j["coeff_bound"] = rep.coeff_bound;
    j["bound_note"] = rep.bound_note;
    j["relative_to"] = relative_to_string(rep.relative_to);

    std::ostringstream t;
    t << "adjoint level: " << reider_level_to_string(rep.level) << "\n";
    t << "hypothesis D^2 >= " << rep.threshold.str() << ": "
      << (rep.hypothesis_ok ? "holds" : "fails") << " (D^2 = " << rep.d_sq.str() << ")\n";
    if (rep.hypothesis_ok) {
        if (rep.obstructions.empty() && !rep.exceptional_case) {
            t << "no obstruction classes found";
            t << (rep.enumeration_complete ? " (enumeration complete)\n"
                                           : " (within coefficient bound " +
                                                 std::to_string(rep.coeff_bound) + ")\n");
            t << "K + D is " << (level == ReiderLevel::basepoint_free ? "basepoint-free"
                                                                      : "very ample");
            t << (rep.enumeration_complete ? "\n" : " unless an obstruction beyond the bound exists\n");
        } else {
            for (const auto& o : rep.obstructions)
                t << "obstruction: B = " << coords_text(o.b) << " with " << o.case_label << "\n";
            if (rep.exceptional_case)
                t << "exceptional case: B = " << coords_text(rep.exceptional_case->b) << " with "
                  << rep.exceptional_case->case_label << "\n";
        }
        for (const auto& o : rep.proof_chain_matches)
            t << "proof-chain match: B = " << coords_text(o.b) << " (DB = " << o.db.str()
              << ", B^2 = " << o.b_sq.str() << ")\n";
    } else {
        t << "the criterion does not apply at this level\n";
    }
    emit(inv, out, j, t.str());
    if (!rep.hypothesis_ok) return exit_unknown;
    const bool found = !rep.obstructions.empty() || rep.exceptional_case.has_value();
    if (found || rep.enumeration_complete) return exit_ok;
    return exit_unknown;
}

inline int run_ms_search(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    const auto res = ms_destabilizer_search(d, model, inv.bound, inv.cs_rounding);
    nlohmann::json j;
    j["divisor"] = coords_json(d);
    j["D^2"] = res.d_sq.str();
    j["4C_S"] = res.cs4.str();
    j["coeff_bound"] = res.coeff_bound;
    std::ostringstream t;
    if (res.witness) {
        const auto& w = *res.witness;
        j["witness"] = {{"B", coords_json(w.b)},
                        {"(D-B).B", w.pairing_d_minus_b_b.str()},
                        {"(D-2B)^2", w.d_minus_2b_sq.str()},
                        {"D^2", w.d_sq.str()},
                        {"D-2B_big", verdict_json(w.big_check)}};
        t << "destabilizer found: B = " << coords_text(w.b) << "\n";
        t << "  (D-B).B = " << w.pairing_d_minus_b_b.str() << " <= 0\n";
        t << "  (D-2B)^2 = " << w.d_minus_2b_sq.str() << " >= D^2 = " << w.d_sq.str() << "\n";
        t << "  D-2B big: " << verdict_text(w.big_check) << "\n";
    } else {
        j["witness"] = nullptr;
        t << "none_within_bound: no destabilizing class with coefficients <= "
          << res.coeff_bound << "\n";
        t << "(absence of a witness is evidence toward vanishing of H^1(-D))\n";
    }
    emit(inv, out, j, t.str());
    return res.witness ? exit_ok : exit_unknown;
}

inline ProverConfig prover_config(const Invocation& inv) {
    ProverConfig config;
    if (!inv.rule_order.empty()) config.rule_order = inv.rule_order;
    config.allow_relative = inv.allow_relative;
    config.search_bound = inv.bound;
    config.cs_rounding = inv.cs_rounding;
    config.user_h0 = inv.assume_h0;
    config.user_seed_exponent = inv.seed_exponent;
    return config;
}

inline void certificate_text(const Certificate& cert, std::ostream& t) {
    t << "conclusion: " << conclusion_to_string(cert.conclusion) << "\n";
    t << "divisor: " << coords_text(cert.divisor) << "\n";
    if (!(cert.subject == cert.divisor))
        t << "subject: " << coords_text(cert.subject) << "\n";
    for (const auto& r : cert.rules) {
        t << (r.fired ? (r.alternate ? "[alternate] " : "[cited]     ") : "[not fired] ") << r.id
          << " -- " << r.reference << "\n";
        for (const auto& c : r.checks) {
            t << "    " << c.name << ": " << tri_to_string(c.verdict);
            if (c.relative) t << " (relative)";
            if (c.bound_limited) t << " (bound-limited)";
            if (c.assumption) t << " (assumption)";
            t << "\n";
        }
        if (!r.fired && !r.failure.empty()) t << "    failed at: " << r.failure << "\n";
    }
    for (const auto& c : cert.caveats) t << "caveat: " << c << "\n";
}

inline int run_vanishing(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    const auto cert = prove_h1_vanishing(d, model, prover_config(inv));
    std::ostringstream t;
    certificate_text(cert, t);
    emit(inv, out, certificate_to_json(cert), t.str());
    return cert.conclusion == Conclusion::unknown ? exit_unknown : exit_ok;
}

inline int run_ms_certify(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto d = need_divisor(inv, model);
    const auto cert = certify_miyaoka_sakai(d, model, prover_config(inv), inv.multiples);
    std::ostringstream t;
    certificate_text(cert, t);
    emit(inv, out, certificate_to_json(cert), t.str());
    return cert.conclusion == Conclusion::unknown ? exit_unknown : exit_ok;
}

inline int run_cs(const Invocation& inv, const SurfaceModel& model, std::ostream& out) {
    const auto cs = correction_constant(model.invariants(), inv.cs_rounding);
    nlohmann::json j;
    j["value"] = cs.value.str();
    j["case_used"] = cs_case_to_string(cs.case_used);
    j["rounding"] = cs.rounding == CsRounding::exact_rational ? "rational" : "ceil";
    std::ostringstream t;
    t << "C_S = " << cs.value.str() << " (" << cs_case_to_string(cs.case_used) << ")\n";
    emit(inv, out, j, t.str());
    return exit_ok;
}

}  // namespace detail

/// Dispatches a validated invocation; all module errors map to exit 1 with a
/// structured message on the error stream.
inline int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
    try {
        const SurfaceModel model = detail::load_model(inv);
        if (inv.subcommand == "surface-show") return detail::run_surface_show(inv, model, out);
        if (inv.subcommand == "zariski") return detail::run_zariski(inv, model, out);
        if (inv.subcommand == "izd") return detail::run_izd(inv, model, out);
        if (inv.subcommand == "positivity") return detail::run_positivity(inv, model, out);
        if (inv.subcommand == "reider") return detail::run_reider(inv, model, out);
        if (inv.subcommand == "ms-search") return detail::run_ms_search(inv, model, out);
        if (inv.subcommand == "ms-certify") return detail::run_ms_certify(inv, model, out);
        if (inv.subcommand == "vanishing") return detail::run_vanishing(inv, model, out);
        if (inv.subcommand == "cs") return detail::run_cs(inv, model, out);
        err << "error: unknown subcommand '" << inv.subcommand << "'\n";
        return exit_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

inline int main(int argc, char** argv) {
    CLI::App app{"exact divisor positivity on algebraic surfaces"};
    app.require_subcommand(1);

    Invocation inv;
    if (const char* env = std::getenv("DIVCALC_DEFAULT_BOUND")) {
        try {
            const long long v = std::stoll(env);
            if (v >= 1) inv.bound = v;
        } catch (...) {
            std::cerr << "error: DIVCALC_DEFAULT_BOUND must be an integer >= 1\n";
            return exit_error;
        }
    }

    std::string divisor_text;
    std::string rule_order_text;
    std::string format_text = "text";
    std::string cs_mode = "rational";
    long long assume_h0 = -1;
    int seed_exponent = -1;

    auto add_common = [&](CLI::App* cmd, bool with_divisor) {
        cmd->add_option("--builtin", inv.builtin,
                        "built-in surface: p2, hirzebruch:n, p1xp1, delpezzo:r, abelian, "
                        "hyperelliptic, k3, enriques");
        cmd->add_option("--surface", inv.surface_path, "surface JSON document");
        if (with_divisor)
            cmd->add_option("--divisor", divisor_text,
                            "comma-separated rational coordinates, e.g. 2,1 or 1/2,3");
        cmd->add_option("--bound", inv.bound, "enumeration coefficient bound (default 10)");
        cmd->add_option("--format", format_text, "output format: text or json");
        cmd->add_option("--cs-mode", cs_mode,
                        "correction constant mode: rational (exact) or ceil");
        cmd->add_flag("--allow-relative", inv.allow_relative,
                      "let certificates rely on catalog-relative verdicts (caveated)");
    };

    auto* show = app.add_subcommand("surface-show", "print the surface model");
    add_common(show, false);
    auto* zar = app.add_subcommand("zariski", "Zariski decomposition D = P + N");
    add_common(zar, true);
    auto* izd = app.add_subcommand("izd", "integral Zariski decomposition D = P_Z + N_Z");
    add_common(izd, true);
    auto* pos = app.add_subcommand("positivity", "pseudoeffective/nef/big/connected verdicts");
    add_common(pos, true);
    auto* rei = app.add_subcommand("reider", "adjoint basepoint-freeness / very-ampleness");
    add_common(rei, true);
    rei->add_option("--level", inv.level, "basepoint-free (default) or very-ample");
    auto* mss = app.add_subcommand("ms-search", "destabilizing divisor search");
    add_common(mss, true);
    auto* msc = app.add_subcommand("ms-certify", "certify a Miyaoka-Sakai divisor");
    add_common(msc, true);
    msc->add_flag("--multiples", inv.multiples, "certify k m D for all k >= 1 instead");
    msc->add_option("--assume-h0", assume_h0, "trusted lower bound for h^0 (tagged assumption)");
    auto* van = app.add_subcommand("vanishing", "certificate prover for H^1(-D) = 0");
    add_common(van, true);
    van->add_option("--rule-order", rule_order_text, "comma-separated rule ids, e.g. R1,R6,R3");
    van->add_option("--assume-h0", assume_h0, "trusted lower bound for h^0 (tagged assumption)");
    van->add_option("--seed-exponent", seed_exponent,
                    "user-asserted exponent e with H^1(-p^e D) = 0 (tagged assumption)");
    auto* cs = app.add_subcommand("cs", "correction constant of the surface");
    add_common(cs, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    inv.subcommand = app.get_subcommands().front()->get_name();
    if (format_text == "json") inv.format = Format::json;
    else if (format_text == "text") inv.format = Format::text;
    else {
        std::cerr << "error: --format must be text or json\n";
        return exit_error;
    }
    if (cs_mode == "ceil") inv.cs_rounding = CsRounding::ceil_integer;
    else if (cs_mode != "rational") {
        std::cerr << "error: --cs-mode must be rational or ceil\n";
        return exit_error;
    }
    if (inv.bound < 1) {
        std::cerr << "error: --bound must be >= 1\n";
        return exit_error;
    }
    if (assume_h0 >= 0) inv.assume_h0 = Int(assume_h0);
    if (seed_exponent >= 0) inv.seed_exponent = seed_exponent;
    if (!divisor_text.empty()) {
        inv.has_divisor = true;
        try {
            std::stringstream ss(divisor_text);
            std::string part;
            while (std::getline(ss, part, ',')) inv.divisor.push_back(rat_from_string(part));
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: --divisor: " << e.what() << "\n";
            return exit_error;
        }
    }
    if (!rule_order_text.empty()) {
        std::stringstream ss(rule_order_text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            static const std::vector<std::string> known = {"R1", "R2", "R3", "R4",
                                                           "R5", "R6", "R7", "R8"};
            if (std::find(known.begin(), known.end(), part) == known.end()) {
                std::cerr << "error: --rule-order: unknown rule id '" << part << "'\n";
                return exit_error;
            }
            inv.rule_order.push_back(part);
        }
    }
    return run(inv, std::cout, std::cerr);
}

}  // namespace divcalc::cli
