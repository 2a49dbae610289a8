#include <divcalc/positivity.hpp>
#include <divcalc/zariski.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace divcalc;

namespace {
const SurfaceModel& f2() {
    static const SurfaceModel m = make_hirzebruch(2);
    return m;
}

DivisorClass cls(std::vector<Rat> v) { return DivisorClass(std::move(v)); }

DivisorClass random_effective(std::mt19937_64& rng, const SurfaceModel& m, int cap) {
    std::uniform_int_distribution<int> coeff(0, cap);
    DivisorClass d = DivisorClass::zero(m.rank());
    for (std::size_t g : m.effective_generators()) d = d + Rat(coeff(rng)) * m.curve(g).cls;
    return d;
}
}  // namespace

TEST_CASE("Zariski decomposition worked examples on F2") {
    {
        const auto zd = zariski_decompose(DivisorClass::from_ints({1, 1}), f2());
        CHECK(zd.p == cls({Rat(1, 2), Rat(1)}));
        REQUIRE(zd.support == std::vector<std::size_t>{0});
        CHECK(zd.coeffs == std::vector<Rat>{Rat(1, 2)});
    }
    {
        const auto zd = zariski_decompose(DivisorClass::from_ints({2, 1}), f2());
        CHECK(zd.p == cls({Rat(1, 2), Rat(1)}));
        CHECK(zd.coeffs == std::vector<Rat>{Rat(3, 2)});
    }
    {
        const auto nef = DivisorClass::from_ints({1, 2});
        const auto zd = zariski_decompose(nef, f2());
        CHECK(zd.p == nef);
        CHECK(zd.support.empty());
    }
    CHECK_THROWS_AS(zariski_decompose(DivisorClass::from_ints({0, -1}), f2()),
                    HypothesisViolation);
}

TEST_CASE("integral Zariski decomposition worked examples on F2") {
    {
        const auto izd = integral_zariski_decompose(DivisorClass::from_ints({1, 1}), f2());
        CHECK(izd.p_z == DivisorClass::from_ints({1, 1}));
        CHECK(izd.support.empty());
    }
    {
        const auto izd = integral_zariski_decompose(DivisorClass::from_ints({2, 1}), f2());
        CHECK(izd.p_z == DivisorClass::from_ints({1, 1}));
        REQUIRE(izd.support == std::vector<std::size_t>{0});
        CHECK(izd.coeffs == std::vector<Int>{Int(1)});
        CHECK(izd.n_z == DivisorClass::from_ints({1, 0}));
    }
    {
        const auto nef = DivisorClass::from_ints({1, 2});
        const auto izd = integral_zariski_decompose(nef, f2());
        CHECK(izd.p_z == nef);
        CHECK(izd.support.empty());
    }
    CHECK_THROWS_AS(integral_zariski_decompose(cls({Rat(1, 2), Rat(1)}), f2()),
                    ValidationError);
}

TEST_CASE("P^2 >= D^2 with equality only for nef classes") {
    std::mt19937_64 rng(42);
    for (const auto& m : {make_hirzebruch(2), make_hirzebruch(3), make_del_pezzo_blowup(3)}) {
        for (int iter = 0; iter < 60; ++iter) {
            const auto d = random_effective(rng, m, 5);
            const auto zd = zariski_decompose(d, m);
            const Rat p2 = m.pair(zd.p, zd.p);
            const Rat d2 = m.pair(d, d);
            CHECK(p2 >= d2);
            if (p2 == d2) CHECK(zd.n.is_zero());
            if (!zd.n.is_zero()) CHECK(p2 > d2);
        }
    }
}

TEST_CASE("iterative decomposition matches the brute-force oracle") {
    std::mt19937_64 rng(2024);
    for (const auto& m : {make_hirzebruch(2), make_del_pezzo_blowup(2), make_del_pezzo_blowup(3)}) {
        for (int iter = 0; iter < 40; ++iter) {
            const auto d = random_effective(rng, m, 4);
            const auto zd = zariski_decompose(d, m);
            const auto all = oracle::brute_force_zariski(d, m);
            REQUIRE(all.size() == 1);
            CHECK(all[0].p == zd.p);
            CHECK(all[0].support == zd.support);
            CHECK(all[0].coeffs == zd.coeffs);
        }
    }
}

TEST_CASE("integral decomposition is independent of the augmentation order") {
    std::mt19937_64 rng(31337);
    const auto dp3 = make_del_pezzo_blowup(3);
    for (const auto& m : {f2(), dp3}) {
        for (int iter = 0; iter < 25; ++iter) {
            const auto d = random_effective(rng, m, 5);
            const auto base = integral_zariski_decompose(d, m);
            for (int shuffle = 0; shuffle < 20; ++shuffle) {
                std::mt19937_64 pick_rng(rng());
                const auto chooser = [&pick_rng](const std::vector<std::size_t>& ids) {
                    std::uniform_int_distribution<std::size_t> u(0, ids.size() - 1);
                    return ids[u(pick_rng)];
                };
                const auto shuffled = integral_zariski_decompose(d, m, chooser);
                CHECK(shuffled == base);
            }
        }
    }
}

TEST_CASE("integral positive part is sandwiched between roundup and D") {
    std::mt19937_64 rng(555);
    const auto& m = f2();
    for (int iter = 0; iter < 50; ++iter) {
        const auto d = random_effective(rng, m, 6);
        const auto zd = zariski_decompose(d, m);
        const auto izd = integral_zariski_decompose(d, m);
        // coefficients of N_Z sit between 0 and floor(a_i) on the same support
        for (std::size_t k = 0; k < izd.support.size(); ++k) {
            const auto it = std::find(zd.support.begin(), zd.support.end(), izd.support[k]);
            REQUIRE(it != zd.support.end());
            const Rat a = zd.coeffs[static_cast<std::size_t>(it - zd.support.begin())];
            CHECK(Rat(izd.coeffs[k]) <= a);
            CHECK(izd.coeffs[k] >= 1);
        }
        // equivalently P_Z = P + M with 0 <= M <= N
        const auto mpart = izd.p_z - zd.p;
        const auto npart = zd.n;
        // M and N - M are nonnegative combinations of the support curves:
        // verify through the coefficients again, in class form
        DivisorClass m_expect = DivisorClass::zero(m.rank());
        for (std::size_t k = 0; k < zd.support.size(); ++k) {
            Rat nz_coeff = 0;
            for (std::size_t j = 0; j < izd.support.size(); ++j)
                if (izd.support[j] == zd.support[k]) nz_coeff = Rat(izd.coeffs[j]);
            m_expect = m_expect + (zd.coeffs[k] - nz_coeff) * m.curve(zd.support[k]).cls;
        }
        CHECK(mpart == m_expect);
        CHECK(izd.n_z + mpart == npart);
    }
}

TEST_CASE("Z-positivity examples on F2") {
    {
        const auto v = is_Z_positive(DivisorClass::from_ints({1, 1}), f2(), 10);
        CHECK(v.yes());
        CHECK(v.bound_limited);
        CHECK(v.bound_used == 10);
    }
    {
        const auto v = is_Z_positive(DivisorClass::from_ints({2, 1}), f2(), 10);
        CHECK(v.no());
        REQUIRE(v.witness_class.has_value());
        CHECK(*v.witness_class == DivisorClass::from_ints({1, 0}));
    }
    {
        const auto f0 = make_hirzebruch(0);
        const auto v = is_Z_positive(DivisorClass::from_ints({1, 1}), f0, 10);
        CHECK(v.yes());
        CHECK_FALSE(v.bound_limited);  // vacuous: no negative curves
    }
}

TEST_CASE("the integral positive part is Z-positive at every bound tried") {
    std::mt19937_64 rng(808);
    for (const auto& m : {make_hirzebruch(2), make_hirzebruch(4), make_del_pezzo_blowup(3)}) {
        for (int iter = 0; iter < 20; ++iter) {
            const auto d = random_effective(rng, m, 5);
            const auto izd = integral_zariski_decompose(d, m);
            for (long long bound : {2LL, 4LL, 6LL}) {
                CHECK(is_Z_positive(izd.p_z, m, bound).yes());
            }
        }
    }
}

TEST_CASE("bounded effective representation counts agree for D and P_Z") {
    // surrogate for the section-space equality along D = P_Z + N_Z
    const auto dp3 = make_del_pezzo_blowup(3);
    const auto gens = dp3.generator_classes();
    const auto anti_k = -dp3.canonical();
    std::vector<Rat> deg(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        deg[i] = dp3.pair(gens[i], anti_k);
        REQUIRE(deg[i] > 0);  // -K is ample, so degree bounds make the count exact
    }
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
                    b -= deg[idx];
                }
            };
        rec(0, d, dp3.pair(d, anti_k));
        return count;
    };
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 12; ++iter) {
        const auto d = random_effective(rng, dp3, 3);
        const auto izd = integral_zariski_decompose(d, dp3);
        CHECK(rep_count(d) == rep_count(izd.p_z));
    }
}
