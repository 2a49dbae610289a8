#include <divcalc/numerics.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace divcalc;

namespace {

SurfaceInvariants general_type(int p, long long vol, long long chi) {
    SurfaceInvariants inv;
    inv.char_p = p;
    inv.kodaira = Kodaira::two;
    inv.chi_O = chi;
    inv.q = 0;
    inv.volume = vol;
    inv.class_tags = {ClassTag{ClassTag::Kind::general_type}};
    return inv;
}

SurfaceInvariants quasi_elliptic(int p, long long chi) {
    SurfaceInvariants inv;
    inv.char_p = p;
    inv.kodaira = Kodaira::one;
    inv.quasi_elliptic = true;
    inv.chi_O = chi;
    inv.q = 2;
    inv.volume = 0;
    inv.class_tags = {ClassTag{ClassTag::Kind::quasi_elliptic}};
    return inv;
}

}  // namespace

TEST_CASE("correction constant case split") {
    {
        // kappa = -infinity: zero case regardless of p
        SurfaceInvariants inv;
        inv.char_p = 5;
        const auto cs = correction_constant(inv);
        CHECK(cs.value == 0);
        CHECK(cs.case_used == CsCase::zero_case);
    }
    {
        const auto cs = correction_constant(general_type(3, 1, 1));
        CHECK(cs.value == Rat(1, 4));  // min{1/4, 6}
        CHECK(cs.case_used == CsCase::general_type_p_gt_2);
    }
    {
        const auto cs = correction_constant(quasi_elliptic(2, -1));
        CHECK(cs.value == 3);  // 2 - (-1)
        CHECK(cs.case_used == CsCase::quasi_elliptic_kappa1);
    }
    {
        // quasi-elliptic with chi > 0 falls through to the zero case
        const auto cs = correction_constant(quasi_elliptic(2, 1));
        CHECK(cs.value == 0);
        CHECK(cs.case_used == CsCase::zero_case);
    }
    {
        // p = 2 max branch: vol 2, chi -1: max{2, 2+3+2}/4 = 7/4; second 13
        const auto cs = correction_constant(general_type(2, 2, -1));
        CHECK(cs.value == Rat(7, 4));
        CHECK(cs.case_used == CsCase::general_type_p_eq_2);
    }
    {
        // second argument of the min can win: vol 4, chi 21 gives 2+20-21 = 1 < vol/4
        const auto cs = correction_constant(general_type(3, 4, 21));
        CHECK(cs.value == 1);
    }
    {
        // ceiling mode rounds the final value up
        const auto cs = correction_constant(general_type(3, 1, 1), CsRounding::ceil_integer);
        CHECK(cs.value == 1);
    }
}

TEST_CASE("correction constant is monotone in the volume") {
    for (int p : {2, 3, 5}) {
        for (long long chi = -2; chi <= 3; ++chi) {
            Rat prev = -1;
            for (long long vol = 1; vol <= 12; ++vol) {
                const auto cs = correction_constant(general_type(p, vol, chi));
                CHECK(cs.value >= prev);
                prev = cs.value;
            }
        }
    }
}

TEST_CASE("Euler characteristic") {
    const auto f2 = make_hirzebruch(2);
    CHECK(euler_char(DivisorClass::zero(2), f2) == 1);
    CHECK(euler_char(DivisorClass::from_ints({1, 1}), f2) == 2);
    const auto p2 = make_projective_plane();
    CHECK(euler_char(DivisorClass::from_ints({1}), p2) == 3);
}

TEST_CASE("Euler characteristic has the Serre symmetry chi(D) = chi(K - D)") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    for (const auto& m : {make_hirzebruch(2), make_del_pezzo_blowup(4), make_k3_shell()}) {
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<Rat> c(m.rank());
            for (auto& v : c) v = Rat(num(rng), den(rng));
            const DivisorClass d(std::move(c));
            CHECK(euler_char(d, m) == euler_char(m.canonical() - d, m));
        }
    }
}

TEST_CASE("h0 lower bounds") {
    const auto f2 = make_hirzebruch(2);
    {
        const auto b = h0_lower_bound(DivisorClass::from_ints({1, 1}), f2);
        CHECK(b.lower >= 2);
        CHECK(b.h2_vanishing_certified);
    }
    {
        const auto p2 = make_projective_plane();
        const auto b = h0_lower_bound(DivisorClass::zero(1), p2);
        CHECK(b.lower == 1);
        CHECK(b.method == H0Method::class_tag_rule);
    }
    {
        const auto ab = make_abelian_shell();
        const auto b = h0_lower_bound(DivisorClass::from_ints({1, 1}), ab);
        CHECK(b.lower >= 1);
        CHECK(b.h2_vanishing_certified);
        CHECK(b.method == H0Method::riemann_roch_with_h2_vanishing);
    }
    {
        // user-supplied values are recorded as such
        const auto b = h0_lower_bound(DivisorClass::from_ints({1, 0}), f2, Int(5));
        CHECK(b.lower == 5);
        CHECK(b.method == H0Method::user_supplied);
    }
    {
        // a negative class certifies nothing
        const auto b = h0_lower_bound(DivisorClass::from_ints({0, -3}), f2);
        CHECK(b.lower == 0);
        CHECK(b.method == H0Method::trivial);
    }
}

TEST_CASE("a positive h0 bound forces an effective representation") {
    // computable shadow of the section count comparison: a certified
    // h^0(D) >= 1 means D is effective, and on dP2 the generator classes are
    // a lattice basis, so every effective integral class decomposes (the
    // count is exact because -K is ample)
    const auto dp2 = make_del_pezzo_blowup(2);
    const auto gens = dp2.generator_classes();
    const auto anti_k = -dp2.canonical();
    auto rep_count = [&](const DivisorClass& d) {
        long long count = 0;
        std::function<void(std::size_t, DivisorClass, Rat)> rec =
            [&](std::size_t idx, DivisorClass rest, Rat budget) {
                if (budget < 0) return;
                if (idx == gens.size()) {
                    if (rest.is_zero()) ++count;
                    return;
                }
                DivisorClass cur = rest;
                Rat b = budget;
                while (b >= 0) {
                    rec(idx + 1, cur, b);
                    cur = cur - gens[idx];
                    b -= dp2.pair(gens[idx], anti_k);
                }
            };
        rec(0, d, dp2.pair(d, anti_k));
        return count;
    };
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int iter = 0; iter < 20; ++iter) {
        DivisorClass d = DivisorClass::zero(dp2.rank());
        for (std::size_t g : dp2.effective_generators())
            d = d + Rat(coeff(rng)) * dp2.curve(g).cls;
        const auto bound = h0_lower_bound(d, dp2);
        const long long reps = rep_count(d);
        if (bound.lower > 0) CHECK(reps >= 1);
    }
}
