#pragma once

#include <divcalc/cones.hpp>
#include <divcalc/zariski.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace divcalc {

/// Bigness through the Zariski decomposition: a pseudoeffective D is big iff
/// its positive part P has P^2 > 0 (this subsumes nef-and-big and handles
/// classes with D^2 < 0). On the K-trivial shells whose effective cone is not
/// polyhedral, a class rule replaces the cone computation: D^2 > 0 together
/// with D . g > 0 against a supplied effective class certifies bigness,
/// because effective divisors on abelian and hyperelliptic surfaces are nef.
inline PositivityVerdict is_big(const DivisorClass& d, const SurfaceModel& model) {
    PositivityVerdict psef = is_pseudoeffective(d, model);
    PositivityVerdict v;
    if (psef.value == Tri::no) {
        v.value = Tri::no;
        v.relative_to = psef.relative_to;
        v.note = "not pseudoeffective";
        return v;
    }
    if (psef.value == Tri::unknown) {
        if (model.has_tag(ClassTag::Kind::abelian) ||
            model.has_tag(ClassTag::Kind::hyperelliptic)) {
            if (model.pair(d, d) > 0) {
                for (std::size_t g : model.effective_generators()) {
                    const Rat p = model.pair(d, model.curve(g).cls);
                    if (p > 0) {
                        v.value = Tri::yes;
                        v.relative_to = Relative::complete;
                        v.witness_class = model.curve(g).cls;
                        v.note = "class rule: D^2 = " + model.pair(d, d).str() +
                                 " > 0 and D pairs " + p.str() +
                                 " > 0 with the effective class " +
                                 model.curve(g).cls.to_string() +
                                 ", which is nef on this surface class";
                        return v;
                    }
                }
            }
        }
        v.value = Tri::unknown;
        v.relative_to = psef.relative_to;
        v.note = "pseudoeffectivity undecided: " + psef.note;
        return v;
    }
    const ZariskiDecomposition zd = zariski_decompose(d, model);
    const Rat p2 = model.pair(zd.p, zd.p);
    v.relative_to = combine(psef.relative_to, model.negative_curves_complete()
                                                  ? Relative::complete
                                                  : Relative::supplied_generators_only);
    if (p2 > 0) {
        v.value = Tri::yes;
        v.witness_class = zd.p;
        v.note = "Zariski positive part has P^2 = " + p2.str() + " > 0";
    } else {
        v.value = Tri::no;
        v.witness_class = zd.p;
        v.note = "Zariski positive part has P^2 = " + p2.str();
    }
    return v;
}

/// Numerical connectedness of a pseudoeffective D. Three tiers:
/// (i) nef and big implies connected (connectedness lemma);
/// (ii) a bounded search over integral effective decompositions D = A + B
///      with A.B <= 0 refutes it (lexicographically least witness);
/// (iii) otherwise undecided within the bound.
inline PositivityVerdict is_numerically_connected(const DivisorClass& d, const SurfaceModel& model,
                                                  long long search_bound) {
    PositivityVerdict v;
    const auto psef = is_pseudoeffective(d, model);
    if (psef.value != Tri::yes) {
        v.value = Tri::unknown;
        v.relative_to = psef.relative_to;
        v.note = "pseudoeffectivity of D not certified";
        return v;
    }
    {
        const auto nef = is_nef(d, model);
        if (nef.yes()) {
            const auto big = is_big(d, model);
            if (big.yes()) {
                v.value = Tri::yes;
                v.relative_to = combine(nef.relative_to, big.relative_to);
                v.note = "nef and big, hence numerically connected";
                return v;
            }
        }
    }
    const auto gens = model.generator_classes();
    const std::size_t m = gens.size();
    std::vector<Rat> gd(m);
    std::vector<Rat> g_self(m);
    for (std::size_t i = 0; i < m; ++i) {
        gd[i] = model.pair(gens[i], d);
        g_self[i] = model.pair(gens[i], gens[i]);
    }
    // candidates A = sum a_i g_i in lexicographic coefficient order
    std::function<std::optional<DecompositionWitness>(std::size_t, const DivisorClass&, const Rat&,
                                                      const Rat&)>
        dfs = [&](std::size_t idx, const DivisorClass& acc, const Rat& ad,
                  const Rat& aa) -> std::optional<DecompositionWitness> {
        if (idx == m) {
            if (acc.is_zero()) return std::nullopt;
            const DivisorClass b = d - acc;
            if (b.is_zero()) return std::nullopt;
            const Rat pairing = ad - aa;  // A.(D - A)
            if (pairing > 0) return std::nullopt;
            if (!is_pseudoeffective(b, model).yes()) return std::nullopt;
            if (model.pair(acc, b) != pairing)
                throw Error("internal: connectedness witness failed re-verification");
            return DecompositionWitness{acc, b, pairing};
        }
        DivisorClass cur = acc;
        Rat cur_ad = ad, cur_aa = aa;
        for (long long c = 0; c <= search_bound; ++c) {
            if (c > 0) {
                cur_aa += 2 * model.pair(cur, gens[idx]) + g_self[idx];  // (A+g)^2
                cur_ad += gd[idx];
                cur = cur + gens[idx];
            }
            if (auto w = dfs(idx + 1, cur, cur_ad, cur_aa)) return w;
        }
        return std::nullopt;
    };
    if (auto w = dfs(0, DivisorClass::zero(model.rank()), Rat(0), Rat(0))) {
        v.value = Tri::no;
        v.relative_to = Relative::complete;  // an explicit decomposition refutes absolutely
        v.witness_decomposition = std::move(*w);
        v.bound_used = search_bound;
        v.note =
            "found decomposition D = A + B with A.B = " + v.witness_decomposition->pairing.str();
        return v;
    }
    v.value = Tri::unknown;
    v.relative_to = Relative::supplied_generators_only;
    v.bound_used = search_bound;
    v.bound_limited = true;
    v.note = "no disconnecting integral decomposition within coefficient bound " +
             std::to_string(search_bound) + "; connectedness not established";
    return v;
}

}  // namespace divcalc
