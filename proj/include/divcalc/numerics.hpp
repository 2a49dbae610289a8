#pragma once

#include <divcalc/positivity.hpp>

#include <algorithm>
#include <optional>
#include <string>

namespace divcalc {

enum class CsCase { general_type_p_gt_2, general_type_p_eq_2, quasi_elliptic_kappa1, zero_case };

inline std::string cs_case_to_string(CsCase c) {
    switch (c) {
        case CsCase::general_type_p_gt_2: return "general_type_p_gt_2";
        case CsCase::general_type_p_eq_2: return "general_type_p_eq_2";
        case CsCase::quasi_elliptic_kappa1: return "quasi_elliptic_kappa1";
        case CsCase::zero_case: return "zero_case";
    }
    return "zero_case";
}

/// The sources state the correction constant as an integer while its defining
/// formulas produce rationals (Vol/4 need not be integral). The default keeps
/// the exact rational; ceil_integer rounds the final value up instead.
enum class CsRounding { exact_rational, ceil_integer };

/// The characteristic-p correction constant, with the case that produced it.
struct CorrectionConstant {
    Rat value;
    CsCase case_used;
    CsRounding rounding = CsRounding::exact_rational;
};

/// Case split for the correction constant:
///   kappa = 2, p > 2:  min{ Vol/4, 2 + 5 Vol - chi }
///   kappa = 2, p = 2:  min{ max{Vol, Vol - 3 chi + 2}/4, 2 + 5 Vol - chi }
///   kappa = 1, quasi-elliptic, chi <= 0:  2 - chi
///   otherwise 0.
inline CorrectionConstant correction_constant(const SurfaceInvariants& inv,
                                              CsRounding rounding = CsRounding::exact_rational) {
    const Rat vol = inv.volume;
    const Rat chi = inv.chi_O;
    Rat value = 0;
    CsCase c = CsCase::zero_case;
    if (inv.kodaira == Kodaira::two) {
        const Rat second = Rat(2) + 5 * vol - chi;
        if (inv.char_p > 2) {
            const Rat first = vol / 4;
            value = first < second ? first : second;
            c = CsCase::general_type_p_gt_2;
        } else {
            const Rat alt = vol - 3 * chi + 2;
            const Rat first = (vol > alt ? vol : alt) / 4;
            value = first < second ? first : second;
            c = CsCase::general_type_p_eq_2;
        }
    } else if (inv.kodaira == Kodaira::one && inv.quasi_elliptic && inv.chi_O <= 0) {
        value = Rat(2) - chi;
        c = CsCase::quasi_elliptic_kappa1;
    }
    if (value < 0) value = 0;
    if (rounding == CsRounding::ceil_integer) value = Rat(rat_ceil(value));
    return {value, c, rounding};
}

inline CorrectionConstant correction_constant(const SurfaceModel& model,
                                              CsRounding rounding = CsRounding::exact_rational) {
    return correction_constant(model.invariants(), rounding);
}

/// Riemann-Roch Euler characteristic chi(O_S) + (D^2 - D.K)/2.
inline Rat euler_char(const DivisorClass& d, const SurfaceModel& model) {
    return Rat(model.invariants().chi_O) +
           (model.pair(d, d) - model.pair(d, model.canonical())) / 2;
}

enum class H0Method { riemann_roch_with_h2_vanishing, class_tag_rule, user_supplied, trivial };

inline std::string h0_method_to_string(H0Method m) {
    switch (m) {
        case H0Method::riemann_roch_with_h2_vanishing: return "riemann_roch_with_h2_vanishing";
        case H0Method::class_tag_rule: return "class_tag_rule";
        case H0Method::user_supplied: return "user_supplied";
        case H0Method::trivial: return "trivial";
    }
    return "trivial";
}

/// A certified lower bound on h^0(D); `method` records which vanishing
/// argument produced it so a certificate can replay the reasoning.
struct H0Bound {
    Int lower = 0;
    H0Method method = H0Method::trivial;
    bool h2_vanishing_certified = false;
    Relative relative_to = Relative::complete;
    std::string note;
};

/// Certified lower bound for h^0(D):
///   - D = 0 gives h^0 = 1 (the structure sheaf);
///   - if D - K is certified big then h^2(D) = h^0(K - D) = 0 and
///     Riemann-Roch gives h^0 >= chi(D);
///   - on (weak) del Pezzo models a nef and big D yields the same bound as a
///     class rule;
///   - a user-supplied value is taken on trust and tagged as such.
inline H0Bound h0_lower_bound(const DivisorClass& d, const SurfaceModel& model,
                              const std::optional<Int>& user_supplied = std::nullopt) {
    H0Bound best;
    best.note = "no vanishing route certified a positive bound";
    auto consider = [&](Int lower, H0Method method, bool h2, Relative rel, std::string note) {
        if (lower < 0) lower = 0;
        if (lower > best.lower) best = {lower, method, h2, rel, std::move(note)};
    };
    if (d.is_zero())
        consider(1, H0Method::class_tag_rule, false, Relative::complete,
                 "the zero class has h^0 = 1");
    {
        const auto big = is_big(d - model.canonical(), model);
        if (big.yes()) {
            const Rat chi = euler_char(d, model);
            consider(rat_ceil(chi), H0Method::riemann_roch_with_h2_vanishing, true,
                     big.relative_to,
                     "D - K is big, so h^2(D) = h^0(K - D) = 0 and h^0 >= chi(D) = " + chi.str());
        }
    }
    if (model.has_tag(ClassTag::Kind::del_pezzo) || model.has_tag(ClassTag::Kind::weak_del_pezzo)) {
        const auto nef = is_nef(d, model);
        if (nef.yes()) {
            const auto big = is_big(d, model);
            if (big.yes()) {
                const Rat chi = euler_char(d, model);
                consider(rat_ceil(chi), H0Method::class_tag_rule, true,
                         combine(nef.relative_to, big.relative_to),
                         "nef and big on a (weak) del Pezzo model: -K is effective, so "
                         "h^2(D) = 0 and h^0 >= chi(D) = " + chi.str());
            }
        }
    }
    if (user_supplied)
        consider(*user_supplied, H0Method::user_supplied, false, Relative::complete,
                 "explicit user-supplied bound");
    return best;
}

}  // namespace divcalc
