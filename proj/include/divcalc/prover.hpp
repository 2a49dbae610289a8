#pragma once

#include <divcalc/criteria.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace divcalc {

enum class Conclusion { h1_vanishes, miyaoka_sakai_divisor, unknown };

inline std::string conclusion_to_string(Conclusion c) {
    switch (c) {
        case Conclusion::h1_vanishes: return "h1_vanishes";
        case Conclusion::miyaoka_sakai_divisor: return "miyaoka_sakai_divisor";
        case Conclusion::unknown: return "unknown";
    }
    return "unknown";
}

/// One hypothesis sub-check inside a rule: a named predicate, its verdict,
/// and the exact input values it was evaluated on (rationals as strings).
struct CheckRecord {
    std::string name;
    Tri verdict = Tri::unknown;
    nlohmann::json inputs = nlohmann::json::object();
    bool relative = false;       // depends on supplied_generators_only data
    bool bound_limited = false;  // attested only within an enumeration bound
    bool assumption = false;     // user-asserted, not derived
};

struct RuleNode {
    std::string id;
    std::string reference;  // the result the rule implements, by name
    std::vector<CheckRecord> checks;
    bool fired = false;
    bool alternate = false;  // fired, but another rule was cited first
    std::string failure;     // first failing check, for unknown reports

    bool all_checks_pass() const {
        for (const auto& c : checks)
            if (c.verdict != Tri::yes) return false;
        return true;
    }
    bool uses_relative_data() const {
        for (const auto& c : checks)
            if (c.relative || c.bound_limited) return true;
        return false;
    }
    bool uses_assumption() const {
        for (const auto& c : checks)
            if (c.assumption) return true;
        return false;
    }
};

/// A certificate: the conclusion, the rule chain with per-check inputs, and
/// mandatory caveats for anything relative, bound-limited or assumed. The
/// `subject` is the class the conclusion is about (it differs from the input
/// for the roundup rules).
struct Certificate {
    Conclusion conclusion = Conclusion::unknown;
    DivisorClass divisor;
    DivisorClass subject;
    std::vector<RuleNode> rules;
    std::vector<std::string> caveats;
};

struct ProverConfig {
    std::vector<std::string> rule_order = {"R1", "R3", "R4", "R8", "R5", "R6", "R2", "R7"};
    bool allow_relative = false;
    long long search_bound = 10;
    CsRounding cs_rounding = CsRounding::exact_rational;
    std::optional<Int> user_h0;           // trusted h^0 lower bound for D
    std::optional<int> user_seed_exponent;  // user-asserted H^1(-p^e D) = 0 seed
};

namespace detail {

inline nlohmann::json coords_json(const DivisorClass& d) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) a.push_back(d[i].str());
    return a;
}

inline CheckRecord record_verdict(std::string name, const PositivityVerdict& v,
                                  nlohmann::json inputs = nlohmann::json::object()) {
    CheckRecord c;
    c.name = std::move(name);
    c.verdict = v.value;
    c.inputs = std::move(inputs);
    c.inputs["note"] = v.note;
    c.relative = v.relative_to == Relative::supplied_generators_only;
    c.bound_limited = v.bound_limited;
    return c;
}

inline CheckRecord record_bool(std::string name, bool ok,
                               nlohmann::json inputs = nlohmann::json::object()) {
    CheckRecord c;
    c.name = std::move(name);
    c.verdict = ok ? Tri::yes : Tri::no;
    c.inputs = std::move(inputs);
    return c;
}

/// Roundup of a rational class through an effective representation: a cone
/// witness D = sum lambda_i g_i over the generator curves is an effective
/// Q-divisor in the class, and its divisorial roundup is sum ceil(lambda_i) g_i.
/// Integral classes are their own roundup. When no cone witness exists but
/// the fractional part is carried by the Zariski negative part, that
/// representation is rounded instead. The chosen representation is returned
/// alongside for the certificate.
struct Roundup {
    DivisorClass cls;
    nlohmann::json representation;
};

inline std::optional<Roundup> roundup_via_representation(const DivisorClass& d,
                                                         const SurfaceModel& model) {
    if (d.is_integral()) return Roundup{d, "integral"};
    const auto psef = is_pseudoeffective(d, model);
    if (psef.yes()) {
        DivisorClass out = DivisorClass::zero(model.rank());
        nlohmann::json rep = nlohmann::json::array();
        const auto gens = model.generator_classes();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const Rat lambda = (*psef.cone_coefficients)[j];
            out = out + Rat(rat_ceil(lambda)) * gens[j];
            rep.push_back(lambda.str());
        }
        return Roundup{out, {{"generator_coefficients", rep}}};
    }
    const auto zd = zariski_decompose(d, model);
    if (!zd.p.is_integral()) return std::nullopt;
    DivisorClass out = zd.p;
    nlohmann::json rep = nlohmann::json::array();
    for (std::size_t k = 0; k < zd.support.size(); ++k) {
        out = out + Rat(rat_ceil(zd.coeffs[k])) * model.curve(zd.support[k]).cls;
        rep.push_back({{"curve", zd.support[k]}, {"coefficient", zd.coeffs[k].str()}});
    }
    return Roundup{out, {{"negative_part_coefficients", rep}}};
}

}  // namespace detail

/// Tries the configured rules in order and returns the first complete
/// certificate for H^1(S, O_S(-D)) = 0, with later-firing rules recorded as
/// alternates and per-rule failure reasons when nothing fires. All failure is
/// data in the certificate; nothing throws for an unprovable input.
inline Certificate prove_h1_vanishing(const DivisorClass& d, const SurfaceModel& model,
                                      const ProverConfig& config = {}) {
    Certificate cert;
    cert.divisor = d;
    cert.subject = d;
    const auto& inv = model.invariants();
    const auto cs = correction_constant(inv, config.cs_rounding);
    const Rat d_sq = model.pair(d, d);

    const auto psef = is_pseudoeffective(d, model);
    if (psef.value != Tri::yes) {
        cert.caveats.push_back("input not certified pseudoeffective: " + psef.note);
        RuleNode gate;
        gate.id = "input";
        gate.reference = "pseudoeffectivity gate";
        gate.checks.push_back(detail::record_verdict("pseudoeffective(D)", psef));
        gate.failure = "pseudoeffective(D)";
        cert.rules.push_back(std::move(gate));
        return cert;
    }

    auto eval_rule = [&](const std::string& id) -> RuleNode {
        RuleNode node;
        node.id = id;
        auto add = [&](CheckRecord c) {
            if (c.verdict != Tri::yes && node.failure.empty()) node.failure = c.name;
            node.checks.push_back(std::move(c));
        };
        auto subject_roundup = [&]() -> std::optional<DivisorClass> {
            auto up = detail::roundup_via_representation(d, model);
            CheckRecord c;
            c.name = "roundup_defined";
            c.verdict = up ? Tri::yes : Tri::no;
            if (up) {
                c.inputs["roundup"] = detail::coords_json(up->cls);
                c.inputs["representation"] = up->representation;
            } else {
                c.inputs["note"] =
                    "no effective representation of D over the catalog curves is available";
            }
            add(std::move(c));
            if (up) return up->cls;
            return std::nullopt;
        };

        if (id == "R1") {
            node.reference = "effective Mumford-Ramanujam vanishing";
            add(detail::record_bool("integral(D)", d.is_integral()));
            add(detail::record_verdict("nef(D)", is_nef(d, model)));
            add(detail::record_bool("D^2 > 4 C_S", d_sq > 4 * cs.value,
                                    {{"D^2", d_sq.str()},
                                     {"4C_S", Rat(4 * cs.value).str()},
                                     {"cs_case", cs_case_to_string(cs.case_used)}}));
        } else if (id == "R2") {
            node.reference = "effective Ramanujam vanishing for numerically connected divisors";
            add(detail::record_bool("integral(D)", d.is_integral()));
            add(detail::record_verdict("pseudoeffective(D)", psef));
            add(detail::record_bool("D^2 > 4 C_S", d_sq > 4 * cs.value,
                                    {{"D^2", d_sq.str()}, {"4C_S", Rat(4 * cs.value).str()}}));
            add(detail::record_verdict(
                "numerically_connected(D)",
                is_numerically_connected(d, model, config.search_bound)));
        } else if (id == "R3" || id == "R4") {
            const bool dp = id == "R3";
            node.reference = dp ? "Kawamata-Viehweg vanishing on del Pezzo surfaces"
                                : "Kawamata-Viehweg vanishing on Hirzebruch surfaces";
            add(detail::record_bool(dp ? "tag del_pezzo" : "tag hirzebruch",
                                    model.has_tag(dp ? ClassTag::Kind::del_pezzo
                                                     : ClassTag::Kind::hirzebruch)));
            add(detail::record_verdict("nef(D)", is_nef(d, model)));
            add(detail::record_verdict("big(D)", is_big(d, model)));
            if (node.failure.empty()) subject_roundup();
        } else if (id == "R5") {
            node.reference = "Kawamata-Viehweg vanishing on Frobenius split surfaces "
                             "(linearly effective roundup)";
            add(detail::record_bool("frobenius_split",
                                    inv.frobenius_split && *inv.frobenius_split));
            add(detail::record_verdict("nef(D)", is_nef(d, model)));
            add(detail::record_verdict("big(D)", is_big(d, model)));
            if (node.failure.empty()) {
                const auto up = subject_roundup();
                if (up) {
                    // "linearly effective" = admits an effective representative:
                    // a cone witness or a certified h^0 >= 1
                    const auto up_psef = is_pseudoeffective(*up, model);
                    const auto h0 = h0_lower_bound(*up, model, config.user_h0);
                    CheckRecord c;
                    c.name = "roundup_linearly_effective";
                    const bool by_cone = up_psef.yes();
                    const bool by_h0 = h0.lower >= 1;
                    c.verdict = (by_cone || by_h0) ? Tri::yes : Tri::unknown;
                    c.inputs["h0_lower"] = h0.lower.str();
                    c.inputs["h0_method"] = h0_method_to_string(h0.method);
                    c.inputs["cone_witness"] = by_cone;
                    c.relative = (by_cone ? up_psef.relative_to == Relative::supplied_generators_only
                                          : h0.relative_to == Relative::supplied_generators_only);
                    c.assumption = by_h0 && !by_cone && h0.method == H0Method::user_supplied;
                    if (c.verdict != Tri::yes && node.failure.empty()) node.failure = c.name;
                    node.checks.push_back(std::move(c));
                }
            }
        } else if (id == "R6") {
            node.reference = "Enokizono vanishing for big Z-positive divisors";
            add(detail::record_bool("integral(D)", d.is_integral()));
            add(detail::record_verdict("big(D)", is_big(d, model)));
            add(detail::record_bool("h1_nilpotent known", inv.h1_nilpotent.has_value()));
            if (node.failure.empty()) {
                const auto izd = integral_zariski_decompose(d, model);
                CheckRecord zp;
                zp.name = "z_positive(D)";
                zp.verdict = izd.support.empty() ? Tri::yes : Tri::no;
                zp.inputs["n_z_components"] = izd.support.size();
                zp.inputs["note"] = izd.support.empty()
                                        ? "the integral decomposition of D has N_Z = 0, so D is "
                                          "its own Z-positive part"
                                        : "N_Z != 0: D is not Z-positive (the Z-positive part is "
                                          "P_Z != D)";
                zp.relative = izd.relative;
                add(std::move(zp));
                const auto h0 = h0_lower_bound(d, model, config.user_h0);
                CheckRecord hc;
                hc.name = "h0(D) > h1_nilpotent";
                hc.verdict = h0.lower > *inv.h1_nilpotent ? Tri::yes : Tri::no;
                hc.inputs["h0_lower"] = h0.lower.str();
                hc.inputs["h0_method"] = h0_method_to_string(h0.method);
                hc.inputs["h1_nilpotent"] = *inv.h1_nilpotent;
                hc.relative = h0.relative_to == Relative::supplied_generators_only;
                hc.assumption = h0.method == H0Method::user_supplied;
                add(std::move(hc));
            }
        } else if (id == "R7") {
            node.reference = "generalized Mumford-Ramanujam vanishing through Frobenius descent";
            add(detail::record_bool("integral(D)", d.is_integral()));
            add(detail::record_bool("kodaira_dim <= 1", inv.kodaira != Kodaira::two,
                                    {{"kodaira_dim", kodaira_to_int(inv.kodaira)}}));
            add(detail::record_bool("not quasi-elliptic of kodaira_dim 1",
                                    !(inv.quasi_elliptic && inv.kodaira == Kodaira::one)));
            add(detail::record_verdict("big(D)", is_big(d, model)));
            add(detail::record_bool("D^2 > 0", d_sq > 0, {{"D^2", d_sq.str()}}));
            if (node.failure.empty()) {
                // seed H^1(-p^e D) = 0: through the nef route (k >> 0 lemma),
                // or a user-asserted exponent behind the config flag
                const auto nef = is_nef(d, model);
                if (nef.yes()) {
                    add(detail::record_verdict("seed: nef(D) (vanishing for large multiples)",
                                               nef));
                } else if (config.user_seed_exponent) {
                    CheckRecord c;
                    c.name = "seed: user-asserted H^1(-p^e D) = 0";
                    c.verdict = Tri::yes;
                    c.inputs["e"] = *config.user_seed_exponent;
                    c.assumption = true;
                    node.checks.push_back(std::move(c));
                } else {
                    CheckRecord c;
                    c.name = "seed: nef route or user-asserted exponent";
                    c.verdict = Tri::no;
                    c.inputs["note"] = "D is not nef and no seed exponent was asserted";
                    node.failure = c.name;
                    node.checks.push_back(std::move(c));
                }
            }
        } else if (id == "R8") {
            node.reference = "Kawamata-Viehweg vanishing on abelian and hyperelliptic surfaces";
            add(detail::record_bool("tag abelian or hyperelliptic",
                                    model.has_tag(ClassTag::Kind::abelian) ||
                                        model.has_tag(ClassTag::Kind::hyperelliptic)));
            if (d.is_integral()) {
                add(detail::record_verdict("big(D)", is_big(d, model)));
                add(detail::record_bool("D^2 > 0", d_sq > 0, {{"D^2", d_sq.str()}}));
            } else {
                add(detail::record_verdict("nef(D)", is_nef(d, model)));
                add(detail::record_verdict("big(D)", is_big(d, model)));
                if (node.failure.empty()) subject_roundup();
            }
        } else {
            node.reference = "unknown rule id";
            node.failure = "unknown rule id " + id;
        }
        return node;
    };

    std::optional<std::size_t> fired_at;
    for (const auto& id : config.rule_order) {
        RuleNode node = eval_rule(id);
        const bool complete = node.all_checks_pass();
        const bool relative_ok = !node.uses_relative_data() || config.allow_relative;
        if (complete && relative_ok) {
            node.fired = true;
            if (fired_at) node.alternate = true;
            else fired_at = cert.rules.size();
        } else if (complete && !relative_ok) {
            node.failure = "verdicts depend on supplied-generators-only or bound-limited data "
                           "and allow_relative is not set";
        }
        cert.rules.push_back(std::move(node));
    }

    if (fired_at) {
        cert.conclusion = Conclusion::h1_vanishes;
        const RuleNode& fired = cert.rules[*fired_at];
        // the roundup rules conclude about the roundup
        if ((fired.id == "R3" || fired.id == "R4" || fired.id == "R5" ||
             (fired.id == "R8" && !d.is_integral()))) {
            if (auto up = detail::roundup_via_representation(d, model)) cert.subject = up->cls;
        } else {
            cert.subject = d;
        }
        if (fired.uses_relative_data())
            cert.caveats.push_back("conclusion relies on verdicts relative to the supplied "
                                   "generators or bounded searches (allow_relative is set)");
        if (fired.uses_assumption())
            cert.caveats.push_back("conclusion relies on a user-asserted assumption");
    }
    return cert;
}

/// Certifies that D is a Miyaoka-Sakai divisor through its integral
/// decomposition: P_Z is big, N_Z = D - P_Z sits under the rational negative
/// part, and a certified h^0(P_Z) bound exceeds h1_nilpotent; the required
/// effective divisor B then exists with Q = P_Z as the vanishing subdivisor.
/// With via_multiple set, routes through the smallest instability multiple
/// instead and certifies every positive multiple of m D.
inline Certificate certify_miyaoka_sakai(const DivisorClass& d, const SurfaceModel& model,
                                         const ProverConfig& config = {},
                                         bool via_multiple = false) {
    Certificate cert;
    cert.divisor = d;
    cert.subject = d;
    const auto& inv = model.invariants();
    RuleNode node;
    auto add = [&](CheckRecord c) {
        if (c.verdict != Tri::yes && node.failure.empty()) node.failure = c.name;
        node.checks.push_back(std::move(c));
    };

    const auto big = is_big(d, model);
    const Rat d_sq = model.pair(d, d);

    if (via_multiple) {
        node.id = "MSx";
        node.reference = "instability multiples: k m D is a Miyaoka-Sakai divisor for k >= 1";
        add(detail::record_verdict("big(D)", big));
        add(detail::record_bool("D^2 > 0", d_sq > 0, {{"D^2", d_sq.str()}}));
        if (node.failure.empty()) {
            const auto mm = ms_multiple(d, model, config.cs_rounding);
            CheckRecord c;
            c.name = "(mP)^2 > 4 C_S with mP integral";
            c.verdict = Tri::yes;
            c.inputs["m"] = mm.m;
            c.inputs["P"] = detail::coords_json(mm.p);
            c.inputs["(mP)^2"] = mm.mp_sq.str();
            c.inputs["4C_S"] = mm.cs4.str();
            c.inputs["minimality"] = mm.minimality;
            node.checks.push_back(std::move(c));
            cert.subject = Rat(mm.m) * d;
            cert.caveats.push_back("certified for every positive multiple of m D (m = " +
                                   std::to_string(mm.m) + ")");
        }
    } else {
        node.id = "MS";
        node.reference = "Miyaoka-Sakai divisors through the integral decomposition "
                         "(Q = P_Z as the vanishing subdivisor)";
        add(detail::record_verdict("big(D)", big));
        add(detail::record_bool("integral(D)", d.is_integral()));
        add(detail::record_bool("h1_nilpotent known", inv.h1_nilpotent.has_value()));
        if (d_sq <= 0)
            cert.caveats.push_back("D^2 = " + d_sq.str() +
                                   " <= 0: the strict reading of the conclusion presumes "
                                   "D^2 > 0; the certificate establishes the decomposition "
                                   "chain (vanishing for P_Z and the subdivisor relation)");
        if (node.failure.empty()) {
            const auto zd = zariski_decompose(d, model);
            const auto izd = integral_zariski_decompose(d, model);
            {
                // P_Z = P + M with M effective: P_Z is big because P is
                CheckRecord c;
                c.name = "P_Z big";
                const Rat p2 = model.pair(zd.p, zd.p);
                c.verdict = p2 > 0 ? Tri::yes : Tri::no;
                c.inputs["P^2"] = p2.str();
                c.inputs["P_Z"] = detail::coords_json(izd.p_z);
                c.relative = izd.relative;
                add(std::move(c));
            }
            {
                // N_Z under the rational negative part, componentwise
                bool under = true;
                for (std::size_t k = 0; k < izd.support.size() && under; ++k) {
                    bool found = false;
                    for (std::size_t j = 0; j < zd.support.size(); ++j)
                        if (zd.support[j] == izd.support[k]) {
                            found = true;
                            if (Rat(izd.coeffs[k]) > zd.coeffs[j]) under = false;
                        }
                    if (!found) under = false;
                }
                CheckRecord c;
                c.name = "0 <= N_Z <= N componentwise";
                c.verdict = under ? Tri::yes : Tri::no;
                c.inputs["N_Z"] = detail::coords_json(izd.n_z);
                c.inputs["N"] = detail::coords_json(zd.n);
                add(std::move(c));
            }
            {
                const auto h0 = h0_lower_bound(izd.p_z, model, config.user_h0);
                CheckRecord c;
                c.name = "h0(P_Z) > h1_nilpotent";
                c.verdict = h0.lower > *inv.h1_nilpotent ? Tri::yes : Tri::no;
                c.inputs["h0_lower"] = h0.lower.str();
                c.inputs["h0_method"] = h0_method_to_string(h0.method);
                c.inputs["h1_nilpotent"] = *inv.h1_nilpotent;
                c.relative = h0.relative_to == Relative::supplied_generators_only;
                c.assumption = h0.method == H0Method::user_supplied;
                add(std::move(c));
            }
        }
    }

    const bool complete = node.all_checks_pass();
    const bool relative_ok = !node.uses_relative_data() || config.allow_relative;
    if (complete && relative_ok) {
        node.fired = true;
        cert.conclusion = Conclusion::miyaoka_sakai_divisor;
        if (node.uses_relative_data())
            cert.caveats.push_back("conclusion relies on verdicts relative to the supplied "
                                   "generators or bounded searches (allow_relative is set)");
        if (node.uses_assumption())
            cert.caveats.push_back("conclusion relies on a user-asserted assumption");
        if (!via_multiple)
            cert.caveats.push_back(
                "the destabilizing divisor B is asserted to exist below N_Z; the argument does "
                "not exhibit it");
    } else if (complete && !relative_ok) {
        node.failure = "verdicts depend on supplied-generators-only or bound-limited data and "
                       "allow_relative is not set";
    }
    cert.rules.push_back(std::move(node));
    return cert;
}

/// Serializes a certificate to the stable JSON contract:
/// {conclusion, divisor, subject, rules: [{id, paper_ref, checks: [{name,
/// verdict, inputs}]}], caveats}.
inline nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["conclusion"] = conclusion_to_string(cert.conclusion);
    j["divisor"] = detail::coords_json(cert.divisor);
    j["subject"] = detail::coords_json(cert.subject);
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& r : cert.rules) {
        nlohmann::json rj;
        rj["id"] = r.id;
        rj["paper_ref"] = r.reference;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["verdict"] = tri_to_string(c.verdict);
            cj["inputs"] = c.inputs;
            if (c.relative) cj["relative"] = true;
            if (c.bound_limited) cj["bound_limited"] = true;
            if (c.assumption) cj["assumption"] = true;
            checks.push_back(std::move(cj));
        }
        rj["checks"] = std::move(checks);
        rj["fired"] = r.fired;
        if (r.alternate) rj["alternate"] = true;
        if (!r.failure.empty()) rj["failure"] = r.failure;
        rules.push_back(std::move(rj));
    }
    j["rules"] = std::move(rules);
    j["caveats"] = cert.caveats;
    return j;
}

/// Soundness replay: re-runs the prover on the same inputs and compares the
/// serialized certificates bit for bit. Each hypothesis sub-check is thereby
/// independently re-evaluated from the recorded inputs.
inline bool replay_certificate(const Certificate& cert, const DivisorClass& d,
                               const SurfaceModel& model, const ProverConfig& config,
                               bool miyaoka_sakai = false, bool via_multiple = false) {
    const Certificate again = miyaoka_sakai ? certify_miyaoka_sakai(d, model, config, via_multiple)
                                            : prove_h1_vanishing(d, model, config);
    return certificate_to_json(cert).dump() == certificate_to_json(again).dump();
}

}  // namespace divcalc
