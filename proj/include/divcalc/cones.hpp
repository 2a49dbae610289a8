#pragma once

#include <divcalc/lp.hpp>
#include <divcalc/surface.hpp>

#include <optional>
#include <string>
#include <vector>

namespace divcalc {

enum class Tri { yes, no, unknown };

inline std::string tri_to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        case Tri::unknown: return "unknown_within_bound";
    }
    return "unknown_within_bound";
}

enum class Relative { complete, supplied_generators_only };

inline std::string relative_to_string(Relative r) {
    return r == Relative::complete ? "complete" : "supplied_generators_only";
}

inline Relative combine(Relative a, Relative b) {
    return (a == Relative::supplied_generators_only || b == Relative::supplied_generators_only)
               ? Relative::supplied_generators_only
               : Relative::complete;
}

/// A refuting decomposition D = A + B for numerical connectedness.
struct DecompositionWitness {
    DivisorClass a, b;
    Rat pairing;  // a . b, re-verified <= 0
    friend bool operator==(const DecompositionWitness&, const DecompositionWitness&) = default;
};

/// Verdict of a cone-theoretic predicate. Witnesses, when present, certify or
/// refute the predicate and are re-verified exactly before being returned.
struct PositivityVerdict {
    Tri value = Tri::unknown;
    Relative relative_to = Relative::complete;
    std::optional<std::vector<Rat>> cone_coefficients;        // pseudoeffective witness
    std::optional<DivisorClass> witness_curve;                // nef refutation
    std::optional<DivisorClass> witness_class;                // big: positive part; Z-positivity: B
    std::optional<DecompositionWitness> witness_decomposition;
    std::string note;
    long long bound_used = -1;
    bool bound_limited = false;

    bool yes() const { return value == Tri::yes; }
    bool no() const { return value == Tri::no; }
    bool definitive() const { return value != Tri::unknown && !bound_limited; }
};

/// Membership of D in the rational cone spanned by the effective generators,
/// decided by exact LP feasibility. A feasible point is an absolute
/// certificate; infeasibility is definitive only on polyhedral cones.
inline PositivityVerdict is_pseudoeffective(const DivisorClass& d, const SurfaceModel& model) {
    if (d.rank() != model.rank()) throw DimensionMismatch(model.rank(), d.rank());
    PositivityVerdict v;
    const auto gens = model.generator_classes();
    std::vector<std::vector<Rat>> a(model.rank(), std::vector<Rat>(gens.size()));
    std::vector<Rat> rhs(model.rank());
    for (std::size_t i = 0; i < model.rank(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) a[i][j] = gens[j][i];
        rhs[i] = d[i];
    }
    auto x = lp_feasible_point(std::move(a), std::move(rhs));
    if (x) {
        DivisorClass combo = DivisorClass::zero(model.rank());
        for (std::size_t j = 0; j < gens.size(); ++j) combo = combo + (*x)[j] * gens[j];
        if (!(combo == d))
            throw Error("internal: LP witness failed exact re-verification");
        v.value = Tri::yes;
        v.relative_to = Relative::complete;
        v.cone_coefficients = std::move(*x);
        return v;
    }
    if (model.effective_cone_polyhedral()) {
        v.value = Tri::no;
        v.relative_to = Relative::complete;
        v.note = "not in the cone of the effective generators (cone is complete)";
    } else {
        v.value = Tri::unknown;
        v.relative_to = Relative::supplied_generators_only;
        v.note = "not in the cone of the supplied generators; the effective cone of this model "
                 "is not polyhedral/complete, so no definitive answer is possible";
    }
    return v;
}

/// Nefness relative to the curve catalog: D . C >= 0 for every catalog curve.
/// A negative pairing refutes absolutely; the positive answer is relative to
/// catalog completeness.
inline PositivityVerdict is_nef(const DivisorClass& d, const SurfaceModel& model) {
    if (d.rank() != model.rank()) throw DimensionMismatch(model.rank(), d.rank());
    PositivityVerdict v;
    v.relative_to = model.effective_cone_polyhedral() ? Relative::complete
                                                      : Relative::supplied_generators_only;
    for (const auto& c : model.curves()) {
        const Rat p = model.pair(d, c.cls);
        if (p < 0) {
            v.value = Tri::no;
            v.relative_to = Relative::complete;
            v.witness_curve = c.cls;
            v.note = "pairs " + p.str() + " with catalog curve " + c.cls.to_string();
            return v;
        }
    }
    v.value = Tri::yes;
    return v;
}

}  // namespace divcalc
