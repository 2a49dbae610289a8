#pragma once

#include <divcalc/errors.hpp>
#include <divcalc/lattice.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace divcalc {

enum class Kodaira { minus_infinity, zero, one, two };

inline int kodaira_to_int(Kodaira k) {
    switch (k) {
        case Kodaira::minus_infinity: return -10;  // JSON encoding of -infinity
        case Kodaira::zero: return 0;
        case Kodaira::one: return 1;
        case Kodaira::two: return 2;
    }
    return -10;
}

inline Kodaira kodaira_from_int(int v) {
    switch (v) {
        case -10: return Kodaira::minus_infinity;
        case 0: return Kodaira::zero;
        case 1: return Kodaira::one;
        case 2: return Kodaira::two;
    }
    throw ValidationError("kodaira_dim", "must be -10 (minus infinity), 0, 1 or 2");
}

/// Surface classification tag; `param` carries n for hirzebruch(n) and g for
/// ruled_over_genus(g), and is -1 otherwise.
struct ClassTag {
    enum class Kind {
        projective_plane, hirzebruch, del_pezzo, weak_del_pezzo, ruled_over_genus,
        abelian, hyperelliptic, k3, enriques, elliptic_fibration, quasi_elliptic,
        general_type, other
    };
    Kind kind;
    int param = -1;

    friend bool operator==(const ClassTag&, const ClassTag&) = default;
    friend auto operator<=>(const ClassTag&, const ClassTag&) = default;

    std::string to_string() const {
        auto base = [&]() -> std::string {
            switch (kind) {
                case Kind::projective_plane: return "projective_plane";
                case Kind::hirzebruch: return "hirzebruch";
                case Kind::del_pezzo: return "del_pezzo";
                case Kind::weak_del_pezzo: return "weak_del_pezzo";
                case Kind::ruled_over_genus: return "ruled_over_genus";
                case Kind::abelian: return "abelian";
                case Kind::hyperelliptic: return "hyperelliptic";
                case Kind::k3: return "k3";
                case Kind::enriques: return "enriques";
                case Kind::elliptic_fibration: return "elliptic_fibration";
                case Kind::quasi_elliptic: return "quasi_elliptic";
                case Kind::general_type: return "general_type";
                case Kind::other: return "other";
            }
            return "other";
        }();
        if (kind == Kind::hirzebruch || kind == Kind::ruled_over_genus)
            return base + "(" + std::to_string(param) + ")";
        return base;
    }

    static ClassTag parse(const std::string& s) {
        auto parametric = [&](const std::string& name, Kind kind) -> std::optional<ClassTag> {
            if (s.rfind(name + "(", 0) == 0 && s.back() == ')') {
                const std::string inner = s.substr(name.size() + 1, s.size() - name.size() - 2);
                try {
                    return ClassTag{kind, std::stoi(inner)};
                } catch (...) {
                    throw ValidationError("class_tags", "bad parameter in tag '" + s + "'");
                }
            }
            return std::nullopt;
        };
        if (auto t = parametric("hirzebruch", Kind::hirzebruch)) return *t;
        if (auto t = parametric("ruled_over_genus", Kind::ruled_over_genus)) return *t;
        static const std::vector<std::pair<std::string, Kind>> plain = {
            {"projective_plane", Kind::projective_plane}, {"del_pezzo", Kind::del_pezzo},
            {"weak_del_pezzo", Kind::weak_del_pezzo}, {"abelian", Kind::abelian},
            {"hyperelliptic", Kind::hyperelliptic}, {"k3", Kind::k3},
            {"enriques", Kind::enriques}, {"elliptic_fibration", Kind::elliptic_fibration},
            {"quasi_elliptic", Kind::quasi_elliptic}, {"general_type", Kind::general_type},
            {"other", Kind::other}};
        for (const auto& [name, kind] : plain)
            if (s == name) return ClassTag{kind};
        throw ValidationError("class_tags", "unknown tag '" + s + "'");
    }
};

/// Arithmetic invariants of a surface. h1_nilpotent is the dimension of the
/// Frobenius-nilpotent part of H^1(O_S); frobenius_split = true forces it to
/// zero, as does q = 0. Unknown values are represented by nullopt.
struct SurfaceInvariants {
    int char_p = 2;
    Kodaira kodaira = Kodaira::minus_infinity;
    bool quasi_elliptic = false;
    long long chi_O = 1;
    int q = 0;
    long long volume = 0;
    std::optional<int> h1_nilpotent;
    std::optional<bool> frobenius_split;
    std::vector<ClassTag> class_tags;

    bool has_tag(ClassTag::Kind kind) const {
        return std::any_of(class_tags.begin(), class_tags.end(),
                           [&](const ClassTag& t) { return t.kind == kind; });
    }
    std::optional<int> tag_param(ClassTag::Kind kind) const {
        for (const auto& t : class_tags)
            if (t.kind == kind) return t.param;
        return std::nullopt;
    }

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

namespace detail {
inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
}  // namespace detail

/// Validates classification constraints and fills derived defaults
/// (h1_nilpotent = 0 when q = 0 or the surface is Frobenius split).
/// `path` prefixes error messages with the JSON location.
inline SurfaceInvariants normalize_invariants(SurfaceInvariants inv,
                                              const std::string& path = "invariants") {
    if (!detail::is_prime(inv.char_p))
        throw ValidationError(path + ".char_p", "must be a prime >= 2");
    if (inv.q < 0) throw ValidationError(path + ".q", "must be nonnegative");
    if (inv.volume < 0) throw ValidationError(path + ".volume", "must be nonnegative");
    if (inv.quasi_elliptic) {
        // The classification of surfaces allows quasi-elliptic fibrations only
        // in characteristics 2 and 3; enforced here so the correction-constant
        // case split never sees a meaningless input.
        if (inv.char_p != 2 && inv.char_p != 3)
            throw ValidationError(path + ".quasi_elliptic",
                                  "quasi-elliptic surfaces exist only in characteristic 2 or 3 "
                                  "(char_p = " + std::to_string(inv.char_p) + ")");
        if (inv.kodaira == Kodaira::two)
            throw ValidationError(path + ".quasi_elliptic",
                                  "quasi-elliptic surfaces have Kodaira dimension at most 1");
    }
    if (inv.h1_nilpotent && *inv.h1_nilpotent < 0)
        throw ValidationError(path + ".h1_nilpotent", "must be nonnegative or null");
    if (inv.h1_nilpotent && *inv.h1_nilpotent > inv.q)
        throw ValidationError(path + ".h1_nilpotent",
                              "the Frobenius-nilpotent part cannot exceed q");
    if (inv.frobenius_split && *inv.frobenius_split) {
        if (inv.h1_nilpotent && *inv.h1_nilpotent != 0)
            throw ValidationError(path + ".h1_nilpotent",
                                  "a Frobenius split surface has h1_nilpotent = 0");
        inv.h1_nilpotent = 0;
    }
    if (inv.q == 0) inv.h1_nilpotent = 0;
    std::sort(inv.class_tags.begin(), inv.class_tags.end());
    inv.class_tags.erase(std::unique(inv.class_tags.begin(), inv.class_tags.end()),
                         inv.class_tags.end());
    return inv;
}

/// A curve class in the catalog: integral class, irreducibility flag and the
/// cached self-intersection.
struct CurveClass {
    DivisorClass cls;
    bool irreducible = true;
    Rat self_int;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// A surface presented through its Neron-Severi lattice: intersection form,
/// canonical class, curve catalog, effective-cone generators, invariants and
/// completeness flags. Immutable after construction.
class SurfaceModel {
  public:
    static SurfaceModel create(IntersectionForm form, DivisorClass canonical,
                               std::vector<CurveClass> curves,
                               std::vector<std::size_t> effective_generators,
                               SurfaceInvariants invariants, bool negative_curves_complete,
                               bool effective_cone_polyhedral) {
        const std::size_t rank = form.rank();
        if (canonical.rank() != rank)
            throw ValidationError("canonical", "length differs from rank");
        if (!canonical.is_integral())
            throw ValidationError("canonical", "must be integral");
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const std::string path = "curves[" + std::to_string(i) + "]";
            if (curves[i].cls.rank() != rank)
                throw ValidationError(path + ".coords", "length differs from rank");
            if (!curves[i].cls.is_integral())
                throw ValidationError(path + ".coords", "curve classes must be integral");
            curves[i].self_int = form.pair(curves[i].cls, curves[i].cls);
        }
        std::vector<bool> seen(curves.size(), false);
        for (std::size_t g : effective_generators) {
            if (g >= curves.size())
                throw ValidationError("effective_generators",
                                      "index " + std::to_string(g) + " out of range");
            if (seen[g])
                throw ValidationError("effective_generators",
                                      "duplicate index " + std::to_string(g));
            seen[g] = true;
        }
        invariants = normalize_invariants(std::move(invariants));
        if (invariants.has_tag(ClassTag::Kind::del_pezzo)) {
            for (std::size_t i = 0; i < curves.size(); ++i)
                if (curves[i].self_int < 0 && curves[i].self_int != -1)
                    throw ValidationError(
                        "curves[" + std::to_string(i) + "]",
                        "on a del Pezzo surface every negative curve is a (-1)-curve; found "
                        "self-intersection " + curves[i].self_int.str());
        }
        return SurfaceModel(std::move(form), std::move(canonical), std::move(curves),
                            std::move(effective_generators), std::move(invariants),
                            negative_curves_complete, effective_cone_polyhedral);
    }

    const IntersectionForm& form() const { return form_; }
    std::size_t rank() const { return form_.rank(); }
    const DivisorClass& canonical() const { return canonical_; }
    const std::vector<CurveClass>& curves() const { return curves_; }
    const CurveClass& curve(std::size_t i) const { return curves_[i]; }
    const std::vector<std::size_t>& effective_generators() const { return effective_generators_; }
    const SurfaceInvariants& invariants() const { return invariants_; }
    bool negative_curves_complete() const { return negative_curves_complete_; }
    bool effective_cone_polyhedral() const { return effective_cone_polyhedral_; }

    Rat pair(const DivisorClass& a, const DivisorClass& b) const { return form_.pair(a, b); }

    /// Indices of catalog curves with negative self-intersection.
    std::vector<std::size_t> negative_curve_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < curves_.size(); ++i)
            if (curves_[i].self_int < 0) out.push_back(i);
        return out;
    }

    std::vector<DivisorClass> generator_classes() const {
        std::vector<DivisorClass> out;
        out.reserve(effective_generators_.size());
        for (std::size_t g : effective_generators_) out.push_back(curves_[g].cls);
        return out;
    }

    bool has_tag(ClassTag::Kind kind) const { return invariants_.has_tag(kind); }

    friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
        return a.form_ == b.form_ && a.canonical_ == b.canonical_ && a.curves_ == b.curves_ &&
               a.effective_generators_ == b.effective_generators_ &&
               a.invariants_ == b.invariants_ &&
               a.negative_curves_complete_ == b.negative_curves_complete_ &&
               a.effective_cone_polyhedral_ == b.effective_cone_polyhedral_;
    }

  private:
    SurfaceModel(IntersectionForm form, DivisorClass canonical, std::vector<CurveClass> curves,
                 std::vector<std::size_t> effective_generators, SurfaceInvariants invariants,
                 bool negative_curves_complete, bool effective_cone_polyhedral)
        : form_(std::move(form)), canonical_(std::move(canonical)), curves_(std::move(curves)),
          effective_generators_(std::move(effective_generators)),
          invariants_(std::move(invariants)),
          negative_curves_complete_(negative_curves_complete),
          effective_cone_polyhedral_(effective_cone_polyhedral) {}

    IntersectionForm form_;
    DivisorClass canonical_;
    std::vector<CurveClass> curves_;
    std::vector<std::size_t> effective_generators_;
    SurfaceInvariants invariants_;
    bool negative_curves_complete_;
    bool effective_cone_polyhedral_;
};

// ---------------------------------------------------------------------------
// Built-in constructors
// ---------------------------------------------------------------------------

/// The projective plane: rank 1, Q = [[1]], K = -3H.
inline SurfaceModel make_projective_plane(int char_p = 2) {
    auto form = IntersectionForm::create({{Int(1)}});
    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::minus_infinity;
    inv.chi_O = 1;
    inv.q = 0;
    inv.volume = 0;
    inv.frobenius_split = true;  // toric
    inv.class_tags = {ClassTag{ClassTag::Kind::projective_plane},
                      ClassTag{ClassTag::Kind::del_pezzo},
                      ClassTag{ClassTag::Kind::weak_del_pezzo}};
    std::vector<CurveClass> curves = {{DivisorClass::from_ints({1}), true, 0}};
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints({-3}),
                                std::move(curves), {0}, std::move(inv), true, true);
}

/// The Hirzebruch surface F_n in the basis (C0, F): Q = [[-n,1],[1,0]],
/// K = -2 C0 - (n+2) F, Eff = <C0, F>.
inline SurfaceModel make_hirzebruch(int n, int char_p = 2) {
    if (n < 0) throw ValidationError("n", "Hirzebruch parameter must be nonnegative");
    auto form = IntersectionForm::create({{Int(-n), Int(1)}, {Int(1), Int(0)}});
    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::minus_infinity;
    inv.chi_O = 1;
    inv.q = 0;
    inv.volume = 0;
    inv.frobenius_split = true;  // toric
    inv.class_tags = {ClassTag{ClassTag::Kind::hirzebruch, n},
                      ClassTag{ClassTag::Kind::ruled_over_genus, 0}};
    // -K = 2 C0 + (n+2) F is ample iff n <= 1, nef iff n <= 2.
    if (n <= 1) {
        inv.class_tags.push_back(ClassTag{ClassTag::Kind::del_pezzo});
        inv.class_tags.push_back(ClassTag{ClassTag::Kind::weak_del_pezzo});
    } else if (n == 2) {
        inv.class_tags.push_back(ClassTag{ClassTag::Kind::weak_del_pezzo});
    }
    std::vector<CurveClass> curves = {{DivisorClass::from_ints({1, 0}), true, 0},
                                      {DivisorClass::from_ints({0, 1}), true, 0}};
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints({-2, -(n + 2)}),
                                std::move(curves), {0, 1}, std::move(inv), true, true);
}

namespace detail {

/// All integral classes E on the blowup lattice Z^{1+r} (Q = diag(1,-1,..))
/// with E.E = -1 and E.K = -1 for K = (-3,1,..,1). Writing E = a H - sum b_i E_i
/// gives a^2 - sum b_i^2 = -1 and 3a - sum b_i = 1; Cauchy-Schwarz confines
/// a to [-1, 7], and the search below prunes on the two constraints.
inline void minus_one_rec(int r, int idx, long long lin_left, long long sq_left,
                          std::vector<long long>& b, std::vector<DivisorClass>& out,
                          long long a) {
    if (idx == r) {
        if (lin_left == 0 && sq_left == 0) {
            std::vector<long long> coords(static_cast<std::size_t>(r) + 1);
            coords[0] = a;
            for (int i = 0; i < r; ++i) coords[static_cast<std::size_t>(i) + 1] = -b[i];
            out.push_back(DivisorClass::from_ints(coords));
        }
        return;
    }
    long long s = 0;
    while ((s + 1) * (s + 1) <= sq_left) ++s;
    for (long long v = -s; v <= s; ++v) {
        const long long rem_sq = sq_left - v * v;
        const long long rem_lin = lin_left - v;
        // remaining coordinates can move the linear sum by at most
        // (r - idx - 1) * floor(sqrt(rem_sq)) in either direction
        long long cap = 0;
        while ((cap + 1) * (cap + 1) <= rem_sq) ++cap;
        const long long slots = r - idx - 1;
        if (rem_lin > slots * cap || rem_lin < -slots * cap) continue;
        b[idx] = v;
        minus_one_rec(r, idx + 1, rem_lin, rem_sq, b, out, a);
    }
}

inline std::vector<DivisorClass> minus_one_classes_on_blowup(int r) {
    std::vector<DivisorClass> out;
    std::vector<long long> b(static_cast<std::size_t>(std::max(r, 1)));
    for (long long a = -1; a <= 7; ++a) {
        const long long lin = 3 * a - 1;      // sum b_i
        const long long sq = a * a + 1;       // sum b_i^2
        if (sq < 0) continue;
        if (r == 0) {
            if (lin == 0 && sq == 0) out.push_back(DivisorClass::from_ints({a}));
            continue;
        }
        minus_one_rec(r, 0, lin, sq, b, out, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// All integral (-1)-classes (E.E = E.K = -1) on a del Pezzo blowup lattice,
/// by bounded coordinate search. Errors on models that are not such lattices.
inline std::vector<DivisorClass> enumerate_minus_one_classes(const SurfaceModel& model) {
    if (!model.has_tag(ClassTag::Kind::del_pezzo) && !model.has_tag(ClassTag::Kind::weak_del_pezzo))
        throw ValidationError("model", "unsupported model tag: expected a del Pezzo blowup lattice");
    const int r = static_cast<int>(model.rank()) - 1;
    // require the standard blowup presentation diag(1,-1,..,-1), K = (-3,1,..,1)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(r); ++i)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(r); ++j) {
            const Int expected = (i != j) ? 0 : (i == 0 ? 1 : -1);
            if (model.form().entry(i, j) != expected)
                throw ValidationError("model", "not presented on the standard blowup basis");
        }
    if (model.canonical()[0] != -3)
        throw ValidationError("model", "not presented on the standard blowup basis");
    for (std::size_t i = 1; i <= static_cast<std::size_t>(r); ++i)
        if (model.canonical()[i] != 1)
            throw ValidationError("model", "not presented on the standard blowup basis");
    return detail::minus_one_classes_on_blowup(r);
}

/// Blowup of the plane in r general points, 0 <= r <= 8, presented on the
/// standard basis (H, E_1..E_r). Curve catalog = all (-1)-classes; for r >= 2
/// these generate the effective cone.
inline SurfaceModel make_del_pezzo_blowup(int r, int char_p = 2) {
    if (r < 0 || r > 8) throw ValidationError("r", "del Pezzo blowup needs 0 <= r <= 8");
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    std::vector<std::vector<Int>> q(n, std::vector<Int>(n, Int(0)));
    q[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) q[i][i] = -1;
    auto form = IntersectionForm::create(std::move(q));

    std::vector<long long> k_coords(n, 1);
    k_coords[0] = -3;

    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::minus_infinity;
    inv.chi_O = 1;
    inv.q = 0;
    inv.volume = 0;
    // Globally F-regular (hence split) is known for p > 5; left unknown below.
    if (char_p > 5 || r == 0) inv.frobenius_split = true;
    inv.class_tags = {ClassTag{ClassTag::Kind::del_pezzo},
                      ClassTag{ClassTag::Kind::weak_del_pezzo}};
    if (r == 0) inv.class_tags.push_back(ClassTag{ClassTag::Kind::projective_plane});

    std::vector<CurveClass> curves;
    std::vector<std::size_t> gens;
    const auto lines = detail::minus_one_classes_on_blowup(r);
    for (const auto& e : lines) curves.push_back({e, true, 0});
    for (std::size_t i = 0; i < lines.size(); ++i) gens.push_back(i);
    if (r == 0) {
        curves.push_back({DivisorClass::from_ints({1}), true, 0});
        gens.push_back(curves.size() - 1);
    } else if (r == 1) {
        // Eff(Bl_1 P^2) = <E_1, H - E_1>; the second ray is the ruling fiber,
        // not a (-1)-class, so it is added explicitly.
        curves.push_back({DivisorClass::from_ints({1, -1}), true, 0});
        gens.push_back(curves.size() - 1);
    }
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints(k_coords),
                                std::move(curves), std::move(gens), std::move(inv), true, true);
}

/// Numeric shells for the minimal Kodaira-dimension-zero classes: the catalog
/// fixes invariants only; the lattice is the rank-2 hyperbolic plane unless a
/// custom form is supplied through JSON. The abelian/hyperelliptic shells
/// model a generic fibered product (two fiber classes, no negative curves).
inline SurfaceModel make_abelian_shell(int char_p = 2, bool ordinary = true) {
    auto form = IntersectionForm::create({{Int(0), Int(1)}, {Int(1), Int(0)}});
    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::zero;
    inv.chi_O = 0;
    inv.q = 2;
    inv.volume = 0;
    if (ordinary) inv.frobenius_split = true;
    inv.class_tags = {ClassTag{ClassTag::Kind::abelian}};
    std::vector<CurveClass> curves = {{DivisorClass::from_ints({1, 0}), true, 0},
                                      {DivisorClass::from_ints({0, 1}), true, 0}};
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints({0, 0}),
                                std::move(curves), {0, 1}, std::move(inv), true, true);
}

inline SurfaceModel make_hyperelliptic_shell(int char_p = 2) {
    auto form = IntersectionForm::create({{Int(0), Int(1)}, {Int(1), Int(0)}});
    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::zero;
    inv.chi_O = 0;
    inv.q = 1;
    inv.volume = 0;
    inv.class_tags = {ClassTag{ClassTag::Kind::hyperelliptic}};
    std::vector<CurveClass> curves = {{DivisorClass::from_ints({1, 0}), true, 0},
                                      {DivisorClass::from_ints({0, 1}), true, 0}};
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints({0, 0}),
                                std::move(curves), {0, 1}, std::move(inv), true, true);
}

/// K3 shell: elliptic K3 with a section (NS = hyperbolic plane); the catalog
/// holds the fiber and the (-2)-section, which generate the effective cone.
inline SurfaceModel make_k3_shell(int char_p = 2) {
    auto form = IntersectionForm::create({{Int(0), Int(1)}, {Int(1), Int(0)}});
    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::zero;
    inv.chi_O = 2;
    inv.q = 0;
    inv.volume = 0;
    inv.class_tags = {ClassTag{ClassTag::Kind::k3}, ClassTag{ClassTag::Kind::elliptic_fibration}};
    std::vector<CurveClass> curves = {{DivisorClass::from_ints({1, 0}), true, 0},
                                      {DivisorClass::from_ints({-1, 1}), true, 0}};
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints({0, 0}),
                                std::move(curves), {0, 1}, std::move(inv), true, true);
}

/// Enriques shell: rank-2 slice only; no curve catalog is fixed, so verdicts
/// on it are relative to whatever curves a document supplies.
inline SurfaceModel make_enriques_shell(int char_p = 2) {
    auto form = IntersectionForm::create({{Int(0), Int(1)}, {Int(1), Int(0)}});
    SurfaceInvariants inv;
    inv.char_p = char_p;
    inv.kodaira = Kodaira::zero;
    inv.chi_O = 1;
    inv.q = 0;
    inv.volume = 0;
    inv.class_tags = {ClassTag{ClassTag::Kind::enriques}};
    return SurfaceModel::create(std::move(form), DivisorClass::from_ints({0, 0}), {}, {},
                                std::move(inv), false, false);
}

}  // namespace divcalc
