#pragma once

#include <divcalc/cones.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace divcalc {

/// Rational Zariski decomposition D = P + N: P nef against the catalog,
/// N = sum a_i C_i with positive coefficients on a negative definite support,
/// and P orthogonal to every component of N.
struct ZariskiDecomposition {
    DivisorClass p;
    DivisorClass n;
    std::vector<std::size_t> support;  // catalog indices of N's components
    std::vector<Rat> coeffs;           // aligned with support, all > 0
    bool relative = false;             // catalog may be incomplete

    friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

/// Integral Zariski decomposition D = P_Z + N_Z with P_Z . C <= 0 on the
/// components of N_Z and N_Z supported on a negative definite set.
struct IntegralZariskiDecomposition {
    DivisorClass p_z;
    DivisorClass n_z;
    std::vector<std::size_t> support;
    std::vector<Int> coeffs;  // aligned with support, all >= 1
    bool relative = false;

    friend bool operator==(const IntegralZariskiDecomposition&,
                           const IntegralZariskiDecomposition&) = default;
};

namespace detail {

inline void verify_zariski(const ZariskiDecomposition& zd, const DivisorClass& d,
                           const SurfaceModel& model) {
    DivisorClass sum = zd.p;
    for (std::size_t k = 0; k < zd.support.size(); ++k) {
        if (zd.coeffs[k] <= 0) throw Error("internal: nonpositive coefficient in negative part");
        sum = sum + zd.coeffs[k] * model.curve(zd.support[k]).cls;
        if (model.pair(zd.p, model.curve(zd.support[k]).cls) != 0)
            throw Error("internal: positive part not orthogonal to negative support");
    }
    if (!(sum == d)) throw Error("internal: Zariski decomposition does not sum to D");
    for (const auto& c : model.curves())
        if (model.pair(zd.p, c.cls) < 0)
            throw Error("internal: positive part not nef against the catalog");
    std::vector<DivisorClass> cls;
    for (std::size_t i : zd.support) cls.push_back(model.curve(i).cls);
    if (!is_negative_definite(cls, model.form()))
        throw Error("internal: negative part support is not negative definite");
}

}  // namespace detail

/// Computes the Zariski decomposition by support growth: seed the support
/// with the catalog curves pairing negatively with D, solve the Gram system
/// N . C_i = D . C_i, and enlarge the support by every catalog curve the
/// remainder still pairs negatively with, until P = D - N is catalog-nef.
/// A Gram system that stops being negative definite signals inconsistent or
/// incomplete curve data (or a non-pseudoeffective input) and throws.
inline ZariskiDecomposition zariski_decompose(const DivisorClass& d, const SurfaceModel& model) {
    if (d.rank() != model.rank()) throw DimensionMismatch(model.rank(), d.rank());
    if (model.effective_cone_polyhedral() && !is_pseudoeffective(d, model).yes())
        throw HypothesisViolation("Zariski decomposition needs a pseudoeffective class; " +
                                  d.to_string() + " is not in the effective cone");

    std::vector<bool> in_support(model.curves().size(), false);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < model.curves().size(); ++i)
        if (model.curve(i).self_int < 0 && model.pair(d, model.curve(i).cls) < 0) {
            in_support[i] = true;
            support.push_back(i);
        }

    std::vector<Rat> coeffs;
    DivisorClass p = d;
    while (true) {
        std::vector<DivisorClass> cls;
        std::vector<Rat> targets;
        for (std::size_t i : support) {
            cls.push_back(model.curve(i).cls);
            targets.push_back(model.pair(d, model.curve(i).cls));
        }
        coeffs = solve_gram(cls, targets, model.form());
        DivisorClass n = DivisorClass::zero(model.rank());
        for (std::size_t k = 0; k < support.size(); ++k)
            n = n + coeffs[k] * model.curve(support[k]).cls;
        p = d - n;
        bool grew = false;
        for (std::size_t i = 0; i < model.curves().size(); ++i) {
            if (in_support[i]) continue;
            if (model.pair(p, model.curve(i).cls) < 0) {
                in_support[i] = true;
                support.push_back(i);
                grew = true;
            }
        }
        if (!grew) break;
        std::sort(support.begin(), support.end());
    }

    ZariskiDecomposition zd;
    zd.p = p;
    zd.n = d - p;
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (coeffs[k] < 0)
            throw Error("negative coefficient in the Zariski negative part: curve data is "
                        "inconsistent or the class is not pseudoeffective");
        if (coeffs[k] > 0) {
            zd.support.push_back(support[k]);
            zd.coeffs.push_back(coeffs[k]);
        }
    }
    zd.relative = !model.negative_curves_complete();
    detail::verify_zariski(zd, d, model);
    return zd;
}

/// Picks the component to absorb next in the integral augmentation loop;
/// receives the candidate catalog indices (those with coefficient >= 1 and
/// P . C > 0). The default takes the lowest index; the uniqueness of the
/// decomposition makes the result independent of this choice.
using AugmentationChoice = std::function<std::size_t(const std::vector<std::size_t>&)>;

/// Integral Zariski decomposition via roundup-then-augment: start from
/// P_0 = D - sum floor(a_i) C_i and repeatedly add a component C of the
/// remainder with P . C > 0 until P . C <= 0 on all remaining components.
inline IntegralZariskiDecomposition integral_zariski_decompose(
    const DivisorClass& d, const SurfaceModel& model, const AugmentationChoice& choose = {}) {
    if (!d.is_integral())
        throw ValidationError("divisor", "integral Zariski decomposition needs an integral class");
    const ZariskiDecomposition zd = zariski_decompose(d, model);

    std::vector<std::size_t> support = zd.support;
    std::vector<Int> m(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) m[k] = rat_floor(zd.coeffs[k]);

    auto current_p = [&]() {
        DivisorClass n = DivisorClass::zero(model.rank());
        for (std::size_t k = 0; k < support.size(); ++k)
            n = n + Rat(m[k]) * model.curve(support[k]).cls;
        return d - n;
    };

    DivisorClass p = current_p();
    while (true) {
        std::vector<std::size_t> candidates;  // positions into support
        for (std::size_t k = 0; k < support.size(); ++k)
            if (m[k] >= 1 && model.pair(p, model.curve(support[k]).cls) > 0)
                candidates.push_back(k);
        if (candidates.empty()) break;
        std::size_t pick = candidates.front();
        if (choose) {
            std::vector<std::size_t> catalog_ids;
            for (std::size_t k : candidates) catalog_ids.push_back(support[k]);
            const std::size_t chosen = choose(catalog_ids);
            const auto it = std::find(catalog_ids.begin(), catalog_ids.end(), chosen);
            if (it == catalog_ids.end())
                throw Error("internal: augmentation choice outside candidate set");
            pick = candidates[static_cast<std::size_t>(it - catalog_ids.begin())];
        }
        m[pick] -= 1;
        p = p + model.curve(support[pick]).cls;
    }

    IntegralZariskiDecomposition izd;
    izd.p_z = p;
    izd.n_z = d - p;
    for (std::size_t k = 0; k < support.size(); ++k)
        if (m[k] >= 1) {
            izd.support.push_back(support[k]);
            izd.coeffs.push_back(m[k]);
        }
    izd.relative = zd.relative;
    // theorem conditions, re-verified
    if (!izd.p_z.is_integral() || !izd.n_z.is_integral())
        throw Error("internal: integral decomposition has non-integral parts");
    for (std::size_t k = 0; k < izd.support.size(); ++k)
        if (model.pair(izd.p_z, model.curve(izd.support[k]).cls) > 0)
            throw Error("internal: P_Z pairs positively with a component of N_Z");
    {
        std::vector<DivisorClass> cls;
        for (std::size_t i : izd.support) cls.push_back(model.curve(i).cls);
        if (!is_negative_definite(cls, model.form()))
            throw Error("internal: N_Z support is not negative definite");
    }
    return izd;
}

/// Z-positivity of D within a coefficient bound: every effective divisor
/// B = sum b_i C_i (1 <= sum b_i, b_i <= coeff_bound) supported on a negative
/// definite set of catalog curves must have a component C with
/// B . C < D . C. A failing B refutes Z-positivity absolutely; if all pass,
/// the positive answer is attested only within the bound.
inline PositivityVerdict is_Z_positive(const DivisorClass& d, const SurfaceModel& model,
                                       long long coeff_bound) {
    PositivityVerdict v;
    v.relative_to = model.negative_curves_complete() ? Relative::complete
                                                     : Relative::supplied_generators_only;
    const auto neg = model.negative_curve_indices();
    if (neg.empty()) {
        v.value = Tri::yes;
        v.bound_used = coeff_bound;
        v.note = "no negative catalog curves: every negative definite B is empty, so the "
                 "condition holds vacuously";
        return v;
    }

    // enumerate the negative definite supports once
    std::vector<std::vector<std::size_t>> nd_subsets;
    std::vector<std::size_t> acc;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        for (std::size_t t = from; t < neg.size(); ++t) {
            acc.push_back(neg[t]);
            std::vector<DivisorClass> cls;
            for (std::size_t i : acc) cls.push_back(model.curve(i).cls);
            if (is_negative_definite(cls, model.form())) {
                nd_subsets.push_back(acc);
                grow(t + 1);
            }
            acc.pop_back();
        }
    };
    grow(0);

    std::optional<std::vector<Rat>> best_full;  // lexicographically least failing B
    std::optional<DivisorClass> best_class;
    for (const auto& sub : nd_subsets) {
        const std::size_t k = sub.size();
        std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k));
        std::vector<Rat> t(k);
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = model.pair(d, model.curve(sub[i]).cls);
            for (std::size_t j = 0; j < k; ++j)
                g[i][j] = model.pair(model.curve(sub[i]).cls, model.curve(sub[j]).cls);
        }
        // A failing B satisfies sum_j b_j g_ij >= t_i for all i; since
        // g_ii < 0 and g_ij >= 0 off-diagonal, each row caps b_i in terms of
        // the other coordinates. Shrink the search box to a fixpoint first.
        std::vector<long long> upper(k, coeff_bound);
        bool empty = false;
        for (bool changed = true; changed && !empty;) {
            changed = false;
            for (std::size_t i = 0; i < k; ++i) {
                Rat slack = -t[i];
                for (std::size_t j = 0; j < k; ++j)
                    if (j != i) slack += Rat(upper[j]) * g[i][j];
                // b_i * (-g_ii) <= slack
                if (slack < 0) { empty = true; break; }
                const Int cap = rat_floor(slack / -g[i][i]);
                const long long cap_ll = cap > coeff_bound ? coeff_bound
                                                           : static_cast<long long>(cap);
                if (cap_ll < upper[i]) {
                    upper[i] = cap_ll;
                    changed = true;
                }
                if (upper[i] < 1) { empty = true; break; }
            }
        }
        if (empty) continue;
        std::vector<long long> b(k);
        std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
            if (idx == k) {
                for (std::size_t i = 0; i < k; ++i) {
                    Rat lhs = 0;
                    for (std::size_t j = 0; j < k; ++j) lhs += Rat(b[j]) * g[i][j];
                    if (lhs < t[i]) return false;  // this component witnesses Z-positivity
                }
                return true;  // failing B found
            }
            for (b[idx] = 1; b[idx] <= upper[idx]; ++b[idx])
                if (dfs(idx + 1)) return true;
            return false;
        };
        if (!dfs(0)) continue;
        std::vector<Rat> full(model.curves().size(), 0);
        for (std::size_t i = 0; i < k; ++i) full[sub[i]] = b[i];
        if (!best_full || full < *best_full) {
            best_full = full;
            DivisorClass bc = DivisorClass::zero(model.rank());
            for (std::size_t i = 0; i < k; ++i)
                bc = bc + Rat(b[i]) * model.curve(sub[i]).cls;
            best_class = bc;
        }
    }

    if (best_class) {
        // re-verify: every component of B pairs at least as much with B as with D
        for (std::size_t i = 0; i < best_full->size(); ++i) {
            if ((*best_full)[i] == 0) continue;
            if (model.pair(*best_class, model.curve(i).cls) < model.pair(d, model.curve(i).cls))
                throw Error("internal: Z-positivity witness failed re-verification");
        }
        v.value = Tri::no;
        v.witness_class = *best_class;
        v.bound_used = coeff_bound;
        v.note = "B = " + best_class->to_string() +
                 " satisfies B . C >= D . C on all of its components";
        return v;
    }
    v.value = Tri::yes;
    v.bound_used = coeff_bound;
    v.bound_limited = true;
    v.note = "every effective negative definite B with coefficients <= " +
             std::to_string(coeff_bound) + " has a component C with B . C < D . C";
    return v;
}

}  // namespace divcalc
