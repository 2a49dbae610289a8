#include <divcalc/positivity.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace divcalc;

namespace {
const SurfaceModel& f2() {
    static const SurfaceModel m = make_hirzebruch(2);
    return m;
}
DivisorClass cls(std::vector<Rat> v) { return DivisorClass(std::move(v)); }
}  // namespace

TEST_CASE("pseudoeffective membership on F2") {
    const auto yes = is_pseudoeffective(DivisorClass::from_ints({1, 1}), f2());
    CHECK(yes.yes());
    REQUIRE(yes.cone_coefficients.has_value());
    CHECK(*yes.cone_coefficients == std::vector<Rat>{1, 1});

    const auto no = is_pseudoeffective(DivisorClass::from_ints({0, -1}), f2());
    CHECK(no.no());
    CHECK(no.relative_to == Relative::complete);

    // C0 - F/2: the F-coefficient is forced negative
    const auto no2 = is_pseudoeffective(cls({Rat(1), Rat(-1, 2)}), f2());
    CHECK(no2.no());
}

TEST_CASE("pseudoeffective on a non-polyhedral model is one-sided") {
    const auto en = make_enriques_shell();
    const auto v = is_pseudoeffective(DivisorClass::from_ints({1, 0}), en);
    CHECK(v.value == Tri::unknown);
    CHECK(v.relative_to == Relative::supplied_generators_only);
}

TEST_CASE("nef on F2") {
    CHECK(is_nef(DivisorClass::from_ints({1, 2}), f2()).yes());  // pairings 0 and 1
    const auto no = is_nef(DivisorClass::from_ints({1, 1}), f2());
    CHECK(no.no());
    REQUIRE(no.witness_curve.has_value());
    CHECK(*no.witness_curve == DivisorClass::from_ints({1, 0}));
    CHECK(is_nef(DivisorClass::zero(2), f2()).yes());
}

TEST_CASE("big on F2") {
    const auto big = is_big(DivisorClass::from_ints({2, 1}), f2());
    CHECK(big.yes());
    REQUIRE(big.witness_class.has_value());
    CHECK(*big.witness_class == cls({Rat(1, 2), Rat(1)}));  // P = C0/2 + F

    CHECK(is_big(DivisorClass::from_ints({1, 0}), f2()).no());  // N absorbs C0
    CHECK(is_big(DivisorClass::from_ints({1, 2}), f2()).yes()); // nef with D^2 = 2
    CHECK(is_big(DivisorClass::from_ints({0, 1}), f2()).no());  // fiber: P = F, P^2 = 0
    CHECK(is_big(DivisorClass::from_ints({0, -1}), f2()).no()); // not pseudoeffective
}

TEST_CASE("big via the class rule on the abelian shell") {
    const auto ab = make_abelian_shell();
    // (1,1) is a generator combination, so the LP route answers
    CHECK(is_big(DivisorClass::from_ints({1, 1}), ab).yes());
}

TEST_CASE("big is monotone under adding effective generators") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coeff(0, 4);
    const auto& m = f2();
    int bigs = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const auto d = DivisorClass::from_ints({coeff(rng), coeff(rng)});
        if (!is_big(d, m).yes()) continue;
        ++bigs;
        for (std::size_t g : m.effective_generators())
            CHECK(is_big(d + m.curve(g).cls, m).yes());
    }
    CHECK(bigs > 10);
}

TEST_CASE("nef implies empty Zariski negative part") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(0, 5);
    for (const auto& m : {make_hirzebruch(2), make_del_pezzo_blowup(3)}) {
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<long long> v(m.rank());
            DivisorClass d = DivisorClass::zero(m.rank());
            for (std::size_t g : m.effective_generators())
                d = d + Rat(coeff(rng)) * m.curve(g).cls;
            if (!is_nef(d, m).yes()) continue;
            const auto zd = zariski_decompose(d, m);
            CHECK(zd.support.empty());
            CHECK(zd.p == d);
        }
    }
}

TEST_CASE("numerical connectedness tiers") {
    const auto f0 = make_hirzebruch(0);
    const auto tier1 = is_numerically_connected(DivisorClass::from_ints({1, 1}), f0, 4);
    CHECK(tier1.yes());
    CHECK(tier1.note.find("nef and big") != std::string::npos);

    // D = 2C0 + 2F on F2 splits as C0 + (C0 + 2F) with pairing 0
    const auto tier2 = is_numerically_connected(DivisorClass::from_ints({2, 2}), f2(), 4);
    CHECK(tier2.no());
    REQUIRE(tier2.witness_decomposition.has_value());
    CHECK(tier2.witness_decomposition->a == DivisorClass::from_ints({1, 0}));
    CHECK(tier2.witness_decomposition->b == DivisorClass::from_ints({1, 2}));
    CHECK(tier2.witness_decomposition->pairing == 0);

    const auto tier3 = is_numerically_connected(DivisorClass::from_ints({1, 0}), f2(), 3);
    CHECK(tier3.value == Tri::unknown);
    CHECK(tier3.bound_limited);
}

TEST_CASE("tier-1 yes is never contradicted by the decomposition search") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coeff(0, 3);
    const auto dp2 = make_del_pezzo_blowup(2);
    int tier1 = 0;
    for (int iter = 0; iter < 80 && tier1 < 25; ++iter) {
        DivisorClass d = DivisorClass::zero(dp2.rank());
        for (std::size_t g : dp2.effective_generators())
            d = d + Rat(coeff(rng)) * dp2.curve(g).cls;
        if (!(is_nef(d, dp2).yes() && is_big(d, dp2).yes())) continue;
        ++tier1;
        const auto gens = dp2.generator_classes();
        // exhaustive decomposition search at bound 4 must find nothing
        std::vector<long long> a(gens.size(), 0);
        bool found = false;
        while (true) {
            std::size_t i = 0;
            while (i < a.size() && a[i] == 4) a[i++] = 0;
            if (i == a.size()) break;
            ++a[i];
            DivisorClass acand = DivisorClass::zero(dp2.rank());
            for (std::size_t j = 0; j < gens.size(); ++j) acand = acand + Rat(a[j]) * gens[j];
            if (acand.is_zero()) continue;
            const DivisorClass b = d - acand;
            if (b.is_zero()) continue;
            if (!is_pseudoeffective(b, dp2).yes()) continue;
            if (dp2.pair(acand, b) <= 0) { found = true; break; }
        }
        CHECK_FALSE(found);
    }
    CHECK(tier1 >= 10);
}

TEST_CASE("false verdicts re-verify their witnesses") {
    const auto no = is_nef(DivisorClass::from_ints({1, 1}), f2());
    REQUIRE(no.witness_curve.has_value());
    CHECK(f2().pair(DivisorClass::from_ints({1, 1}), *no.witness_curve) < 0);

    const auto disc = is_numerically_connected(DivisorClass::from_ints({2, 2}), f2(), 4);
    REQUIRE(disc.witness_decomposition.has_value());
    const auto& w = *disc.witness_decomposition;
    CHECK(w.a + w.b == DivisorClass::from_ints({2, 2}));
    CHECK(f2().pair(w.a, w.b) <= 0);
    CHECK(is_pseudoeffective(w.a, f2()).yes());
    CHECK(is_pseudoeffective(w.b, f2()).yes());
}
