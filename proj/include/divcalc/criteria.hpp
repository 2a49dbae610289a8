#pragma once

#include <divcalc/numerics.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace divcalc {

/// Instability hypothesis c1^2 - 4 c2 > 4 C_S for a rank-2 sheaf, with the
/// exact margin. A true outcome guarantees slope instability with respect to
/// some numerically nontrivial nef divisor.
struct BogomolovResult {
    bool unstable_guaranteed;
    Rat discriminant;  // c1^2 - 4 c2
    Rat cs4;           // 4 C_S
    Rat margin;        // discriminant - 4 C_S
    CsCase cs_case;
};

inline BogomolovResult bogomolov_hypothesis(const DivisorClass& c1, const Rat& c2,
                                            const SurfaceModel& model,
                                            CsRounding rounding = CsRounding::exact_rational) {
    const auto cs = correction_constant(model.invariants(), rounding);
    BogomolovResult r;
    r.discriminant = model.pair(c1, c1) - 4 * c2;
    r.cs4 = 4 * cs.value;
    r.margin = r.discriminant - r.cs4;
    r.unstable_guaranteed = r.margin > 0;
    r.cs_case = cs.case_used;
    return r;
}

/// A destabilizing divisor for the effective instability criterion:
/// B nonzero effective with (D-B).B <= 0, D-2B big and (D-2B)^2 >= D^2.
/// All three conditions and the identity (D-2B)^2 = D^2 - 4 (D-B).B are
/// re-verified at construction.
struct DestabilizerWitness {
    DivisorClass b;
    std::vector<long long> coeffs;  // over effective generators
    Rat pairing_d_minus_b_b;
    Rat d_minus_2b_sq;
    Rat d_sq;
    PositivityVerdict big_check;  // bigness certificate for D - 2B
};

struct DestabilizerSearch {
    std::optional<DestabilizerWitness> witness;  // none_within_bound when empty
    long long coeff_bound;
    Rat d_sq;
    Rat cs4;
};

namespace detail {

inline DestabilizerWitness make_destabilizer_witness(const DivisorClass& d, const DivisorClass& b,
                                                     std::vector<long long> coeffs,
                                                     PositivityVerdict big_check,
                                                     const SurfaceModel& model) {
    DestabilizerWitness w;
    w.b = b;
    w.coeffs = std::move(coeffs);
    w.pairing_d_minus_b_b = model.pair(d - b, b);
    const DivisorClass d2b = d - (Rat(2) * b);
    w.d_minus_2b_sq = model.pair(d2b, d2b);
    w.d_sq = model.pair(d, d);
    w.big_check = std::move(big_check);
    if (w.pairing_d_minus_b_b > 0) throw Error("internal: destabilizer has (D-B).B > 0");
    if (w.d_minus_2b_sq < w.d_sq) throw Error("internal: destabilizer has (D-2B)^2 < D^2");
    if (!w.big_check.yes()) throw Error("internal: destabilizer lacks a bigness certificate");
    if (w.d_minus_2b_sq != w.d_sq - 4 * w.pairing_d_minus_b_b)
        throw Error("internal: destabilizer identity (D-2B)^2 = D^2 - 4(D-B).B fails");
    return w;
}

}  // namespace detail

/// Searches for a destabilizing divisor among nonzero effective combinations
/// of the generators with coefficients in [0, coeff_bound], in lexicographic
/// order; returns the first hit or none_within_bound. The instability theorem
/// guarantees a witness only when additionally H^1(-D) != 0, which is not a
/// lattice quantity: an empty search is evidence toward vanishing, never a
/// contradiction. Preconditions (D big, D^2 > 4 C_S) are the theorem's
/// hypotheses and violations throw.
inline DestabilizerSearch ms_destabilizer_search(const DivisorClass& d, const SurfaceModel& model,
                                                 long long coeff_bound,
                                                 CsRounding rounding = CsRounding::exact_rational) {
    const auto big = is_big(d, model);
    if (!big.yes())
        throw HypothesisViolation("destabilizer search needs a big divisor; " + big.note);
    const auto cs = correction_constant(model.invariants(), rounding);
    DestabilizerSearch out;
    out.coeff_bound = coeff_bound;
    out.d_sq = model.pair(d, d);
    out.cs4 = 4 * cs.value;
    if (out.d_sq <= out.cs4)
        throw HypothesisViolation("destabilizer search needs D^2 > 4 C_S; D^2 = " +
                                  out.d_sq.str() + ", 4 C_S = " + out.cs4.str());

    const auto gens = model.generator_classes();
    std::vector<long long> coeffs(gens.size(), 0);
    std::function<bool(std::size_t, const DivisorClass&)> dfs =
        [&](std::size_t idx, const DivisorClass& acc) -> bool {
        if (idx == gens.size()) {
            if (acc.is_zero()) return false;
            if (model.pair(d - acc, acc) > 0) return false;
            const DivisorClass d2b = d - (Rat(2) * acc);
            if (model.pair(d2b, d2b) < out.d_sq) return false;
            const auto d2b_big = is_big(d2b, model);
            if (!d2b_big.yes()) return false;
            out.witness =
                detail::make_destabilizer_witness(d, acc, coeffs, d2b_big, model);
            return true;
        }
        DivisorClass cur = acc;
        for (long long c = 0; c <= coeff_bound; ++c) {
            if (c > 0) cur = cur + gens[idx];
            coeffs[idx] = c;
            if (dfs(idx + 1, cur)) return true;
        }
        coeffs[idx] = 0;
        return false;
    };
    dfs(0, DivisorClass::zero(model.rank()));
    return out;
}

/// One obstruction row of the adjoint criterion.
struct ReiderObstruction {
    DivisorClass b;
    std::vector<long long> coeffs;
    Rat db;
    Rat b_sq;
    std::string case_label;
};

enum class ReiderLevel { basepoint_free, very_ample };

inline std::string reider_level_to_string(ReiderLevel l) {
    return l == ReiderLevel::basepoint_free ? "basepoint_free" : "very_ample";
}

/// Report of the Reider-type enumeration: the hypothesis check, matched
/// obstruction rows, the exceptional D = 3B case at the very-ample level, and
/// separately the matches of the proof-level constraint chain
/// DB - deg Z <= B^2 < DB/2 < deg Z.
struct ReiderReport {
    ReiderLevel level;
    bool hypothesis_ok;
    Rat d_sq;
    Rat threshold;  // 4 C_S + 5 or 4 C_S + 9
    std::vector<ReiderObstruction> obstructions;
    std::optional<ReiderObstruction> exceptional_case;
    std::vector<ReiderObstruction> proof_chain_matches;
    long long coeff_bound;
    bool enumeration_complete;
    std::string bound_note;
    Relative relative_to;
};

/// Enumerates effective divisor classes B that obstruct basepoint-freeness or
/// very-ampleness of K + D for nef D. When D pairs strictly positively with
/// every generator the row bounds DB <= 1 (resp. 3) cap the coefficients and
/// the enumeration is complete; otherwise it is truncated at coeff_bound.
inline ReiderReport reider_check(const DivisorClass& d, const SurfaceModel& model,
                                 ReiderLevel level, long long coeff_bound,
                                 CsRounding rounding = CsRounding::exact_rational) {
    {
        const auto nef = is_nef(d, model);
        if (!nef.yes())
            throw HypothesisViolation("the adjoint criterion needs a nef divisor; " + nef.note);
    }
    const auto cs = correction_constant(model.invariants(), rounding);
    ReiderReport rep;
    rep.level = level;
    rep.d_sq = model.pair(d, d);
    rep.threshold = 4 * cs.value + (level == ReiderLevel::basepoint_free ? 5 : 9);
    rep.hypothesis_ok = rep.d_sq >= rep.threshold;
    rep.coeff_bound = coeff_bound;
    rep.relative_to = model.effective_cone_polyhedral() ? Relative::complete
                                                        : Relative::supplied_generators_only;
    rep.enumeration_complete = false;
    if (!rep.hypothesis_ok) {
        rep.bound_note = "hypothesis D^2 >= " + rep.threshold.str() + " fails (D^2 = " +
                         rep.d_sq.str() + "); no enumeration run";
        return rep;
    }

    const Rat max_db = (level == ReiderLevel::basepoint_free) ? 1 : 3;
    const long long deg_z = (level == ReiderLevel::basepoint_free) ? 1 : 2;
    const auto gens = model.generator_classes();
    std::vector<Rat> gd(gens.size());
    bool all_positive = !gens.empty();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        gd[i] = model.pair(gens[i], d);
        if (gd[i] <= 0) all_positive = false;
    }
    long long bound = coeff_bound;
    if (all_positive) {
        // any B beyond these caps has DB > max_db and matches no row
        Rat min_gd = gd[0];
        for (const auto& v : gd) min_gd = std::min(min_gd, v);
        const Int cap = rat_floor(max_db / min_gd);
        if (cap <= coeff_bound) {
            bound = cap.convert_to<long long>();
            rep.enumeration_complete = true;
            rep.bound_note = "DB <= " + max_db.str() +
                             " caps every generator coefficient at " + cap.str() +
                             "; enumeration complete";
        } else {
            rep.bound_note = "the DB cap " + cap.str() + " exceeds the coefficient bound " +
                             std::to_string(coeff_bound) + "; enumeration truncated";
        }
    } else {
        rep.bound_note = "some generator pairs to zero with D; enumeration truncated at "
                         "coefficient bound " + std::to_string(coeff_bound);
    }
    rep.coeff_bound = bound;

    std::vector<long long> coeffs(gens.size(), 0);
    auto classify = [&](const DivisorClass& b) {
        const Rat db = model.pair(d, b);
        const Rat b2 = model.pair(b, b);
        std::string label;
        if (level == ReiderLevel::basepoint_free) {
            if (db == 1 && b2 == 0) label = "DB=1, B^2=0";
            else if (db == 0 && b2 == -1) label = "DB=0, B^2=-1";
        } else {
            if (db == 0 && b2 == -2) label = "DB=0, B^2=-2";
            else if (db == 0 && b2 == -1) label = "DB=0, B^2=-1";
            else if (db == 1 && b2 == -1) label = "DB=1, B^2=-1";
            else if (db == 1 && b2 == 0) label = "DB=1, B^2=0";
            else if (db == 2 && b2 == 0) label = "DB=2, B^2=0";
        }
        if (!label.empty())
            rep.obstructions.push_back({b, coeffs, db, b2, label});
        if (level == ReiderLevel::very_ample && !rep.exceptional_case) {
            // collapsed DB=3, B^2=1 row: forces C_S = 0, D^2 = 9 and D = 3B
            if (cs.value == 0 && rep.d_sq == 9 && d == Rat(3) * b)
                rep.exceptional_case = ReiderObstruction{b, coeffs, db, b2, "C_S=0, D^2=9, D=3B"};
        }
        // proof-level chain DB - deg Z <= B^2 < DB/2 < deg Z
        if (db - deg_z <= b2 && b2 < db / 2 && db < Rat(2) * deg_z)
            rep.proof_chain_matches.push_back({b, coeffs, db, b2,
                                               "DB-degZ <= B^2 < DB/2 < degZ (degZ=" +
                                                   std::to_string(deg_z) + ")"});
    };

    std::function<void(std::size_t, const DivisorClass&)> dfs = [&](std::size_t idx,
                                                                    const DivisorClass& acc) {
        if (idx == gens.size()) {
            if (!acc.is_zero()) classify(acc);
            return;
        }
        DivisorClass cur = acc;
        for (long long c = 0; c <= bound; ++c) {
            if (c > 0) cur = cur + gens[idx];
            coeffs[idx] = c;
            dfs(idx + 1, cur);
        }
        coeffs[idx] = 0;
    };
    dfs(0, DivisorClass::zero(model.rank()));
    return rep;
}

/// Certificate for the smallest m with mP integral and (mP)^2 > 4 C_S, where
/// P is the Zariski positive part of D: every positive multiple of m D is
/// then subject to the instability/vanishing chain through m P.
struct MsMultiple {
    long long m;
    DivisorClass p;
    Int denominator;      // least d with dP integral
    Rat mp_sq;
    Rat cs4;
    std::string minimality;  // which condition m-1 fails
};

inline MsMultiple ms_multiple(const DivisorClass& d, const SurfaceModel& model,
                              CsRounding rounding = CsRounding::exact_rational) {
    const auto big = is_big(d, model);
    if (!big.yes()) throw HypothesisViolation("needs a big divisor; " + big.note);
    const auto zd = zariski_decompose(d, model);
    const auto cs = correction_constant(model.invariants(), rounding);
    MsMultiple out;
    out.p = zd.p;
    out.cs4 = 4 * cs.value;
    Int den = 1;
    for (std::size_t i = 0; i < zd.p.rank(); ++i)
        den = lcm(den, rat_den(zd.p[i]));
    out.denominator = den;
    const Rat p2 = model.pair(zd.p, zd.p);  // > 0 since D is big
    Int k = 1;
    while (Rat(k * den) * Rat(k * den) * p2 <= out.cs4) ++k;
    const Int m_int = k * den;
    out.m = m_int.convert_to<long long>();
    out.mp_sq = Rat(m_int) * Rat(m_int) * p2;
    // minimality: m-1 fails integrality or the strict inequality
    const Int prev = m_int - 1;
    if (prev == 0) {
        out.minimality = "m-1 = 0 fails the strict inequality (0 > 4 C_S is false)";
    } else if (prev % den != 0) {
        out.minimality = "(m-1) P is not integral (denominator " + den.str() + ")";
    } else {
        const Rat prev_sq = Rat(prev) * Rat(prev) * p2;
        if (prev_sq > out.cs4) throw Error("internal: ms_multiple minimality violated");
        out.minimality = "((m-1) P)^2 = " + prev_sq.str() + " <= 4 C_S = " + out.cs4.str();
    }
    return out;
}

/// Outcome of the weak instability exponent search: the first e <= e_cap with
/// a certified h^0(P_Z(p^e D)) bound strictly above h^1_nilpotent, or the
/// reason the cap was exhausted.
struct WeakMsStep {
    int e;
    Int p_power;
    DivisorClass p_z;
    H0Bound bound;
};

struct WeakMsResult {
    std::optional<int> e;
    std::vector<WeakMsStep> steps;
    int h1_nilpotent;
    enum class Failure { none, bound_method_failed, inequality_false } failure = Failure::none;
};

inline WeakMsResult weak_ms_exponent(const DivisorClass& d, const SurfaceModel& model, int e_cap) {
    if (!model.invariants().h1_nilpotent)
        throw HypothesisViolation(
            "the exponent search needs a known h1_nilpotent (it is 'unknown' on this model)");
    if (!d.is_integral()) throw ValidationError("divisor", "needs an integral divisor");
    const auto big = is_big(d, model);
    if (!big.yes()) throw HypothesisViolation("needs a big divisor; " + big.note);

    WeakMsResult out;
    out.h1_nilpotent = *model.invariants().h1_nilpotent;
    const Int p = model.invariants().char_p;
    Int power = 1;
    for (int e = 0; e <= e_cap; ++e) {
        DivisorClass scaled = Rat(power) * d;
        const auto izd = integral_zariski_decompose(scaled, model);
        const auto bound = h0_lower_bound(izd.p_z, model);
        out.steps.push_back({e, power, izd.p_z, bound});
        if (bound.lower > out.h1_nilpotent) {
            out.e = e;
            return out;
        }
        power *= p;
    }
    // distinguish a method failure (no vanishing route certified anything)
    // from a genuine inequality failure at the cap
    const auto& last = out.steps.back().bound;
    out.failure = (last.method == H0Method::trivial)
                      ? WeakMsResult::Failure::bound_method_failed
                      : WeakMsResult::Failure::inequality_false;
    return out;
}

}  // namespace divcalc
