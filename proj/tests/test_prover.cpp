#include <divcalc/prover.hpp>
#include <divcalc/surface_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace divcalc;

namespace {

const RuleNode* find_rule(const Certificate& c, const std::string& id) {
    for (const auto& r : c.rules)
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<std::pair<SurfaceModel, DivisorClass>> prover_corpus() {
    std::vector<std::pair<SurfaceModel, DivisorClass>> corpus;
    const auto f0 = make_hirzebruch(0);
    const auto f2 = make_hirzebruch(2);
    const auto dp3 = make_del_pezzo_blowup(3);
    const auto ab = make_abelian_shell();
    const auto k3 = make_k3_shell();
    std::mt19937_64 rng(2468);
    std::uniform_int_distribution<int> coeff(0, 4);
    auto push_random = [&](const SurfaceModel& m, int count) {
        for (int i = 0; i < count; ++i) {
            DivisorClass d = DivisorClass::zero(m.rank());
            for (std::size_t g : m.effective_generators())
                d = d + Rat(coeff(rng)) * m.curve(g).cls;
            corpus.emplace_back(m, d);
        }
    };
    push_random(f0, 25);
    push_random(f2, 30);
    push_random(dp3, 25);
    push_random(ab, 10);
    push_random(k3, 10);
    // a few rational inputs for the roundup rules
    corpus.emplace_back(f2, DivisorClass(std::vector<Rat>{Rat(3, 2), Rat(3)}));
    corpus.emplace_back(dp3, Rat(1, 2) * (-dp3.canonical()));
    return corpus;
}

}  // namespace

TEST_CASE("vanishing certificate fires the effective nef route on F0") {
    const auto f0 = make_hirzebruch(0);
    const auto cert = prove_h1_vanishing(DivisorClass::from_ints({1, 1}), f0);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    const auto* r1 = find_rule(cert, "R1");
    REQUIRE(r1 != nullptr);
    CHECK(r1->fired);
    CHECK_FALSE(r1->alternate);
}

TEST_CASE("del Pezzo anticanonical class cites the first rule with alternates") {
    const auto dp6 = make_del_pezzo_blowup(6);
    const auto cert = prove_h1_vanishing(-dp6.canonical(), dp6);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    const auto* r1 = find_rule(cert, "R1");
    REQUIRE(r1 != nullptr);
    CHECK(r1->fired);
    const auto* r3 = find_rule(cert, "R3");
    REQUIRE(r3 != nullptr);
    CHECK(r3->fired);
    CHECK(r3->alternate);
}

TEST_CASE("unprovable inputs produce unknown with per-rule failures") {
    const auto f2 = make_hirzebruch(2);
    const auto cert = prove_h1_vanishing(DivisorClass::from_ints({1, 0}), f2);
    CHECK(cert.conclusion == Conclusion::unknown);
    for (const auto& r : cert.rules) {
        CHECK_FALSE(r.fired);
        CHECK_FALSE(r.failure.empty());
    }
}

TEST_CASE("non-pseudoeffective inputs are gated with a reason") {
    const auto f2 = make_hirzebruch(2);
    const auto cert = prove_h1_vanishing(DivisorClass::from_ints({0, -1}), f2);
    CHECK(cert.conclusion == Conclusion::unknown);
    REQUIRE(cert.rules.size() == 1);
    CHECK(cert.rules[0].id == "input");
}

TEST_CASE("roundup rules conclude about the roundup") {
    const auto f2 = make_hirzebruch(2);
    // D = (3/2) C0 + 3F is nef (pairings 0 and 3/2) and big (D^2 = 9/2);
    // the representation (3/2, 3) over (C0, F) rounds up to 2C0 + 3F
    const auto d = DivisorClass(std::vector<Rat>{Rat(3, 2), Rat(3)});
    const auto cert = prove_h1_vanishing(d, f2);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    const auto* r4 = find_rule(cert, "R4");
    REQUIRE(r4 != nullptr);
    CHECK(r4->fired);
    CHECK(cert.subject == DivisorClass::from_ints({2, 3}));
    CHECK(cert.divisor == d);
}

TEST_CASE("abelian shell: big integral classes vanish through the K-trivial rule") {
    const auto ab = make_abelian_shell();
    const auto cert = prove_h1_vanishing(DivisorClass::from_ints({1, 1}), ab);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    const auto* r8 = find_rule(cert, "R8");
    REQUIRE(r8 != nullptr);
    CHECK(r8->fired);
    // R1 also fires (nef and D^2 = 2 > 0 = 4C_S) and sits earlier in the
    // default order, so it is cited and R8 is the alternate
    CHECK(r8->alternate);
    const auto* r1 = find_rule(cert, "R1");
    REQUIRE(r1 != nullptr);
    CHECK(r1->fired);
    CHECK_FALSE(r1->alternate);
}

TEST_CASE("Enokizono route fires on integral Z-positive classes with sections") {
    const auto f2 = make_hirzebruch(2);
    ProverConfig config;
    config.rule_order = {"R6"};
    const auto cert = prove_h1_vanishing(DivisorClass::from_ints({1, 2}), f2, config);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    const auto* r6 = find_rule(cert, "R6");
    REQUIRE(r6 != nullptr);
    CHECK(r6->fired);
    // D = 2C0 + F has N_Z = C0 != 0: not Z-positive, R6 must fail on it
    const auto not_zp = prove_h1_vanishing(DivisorClass::from_ints({2, 1}), f2, config);
    CHECK(not_zp.conclusion == Conclusion::unknown);
    CHECK(find_rule(not_zp, "R6")->failure == "z_positive(D)");
}

TEST_CASE("user-asserted seeds are assumptions behind a flag") {
    const auto f2 = make_hirzebruch(2);
    // 2C0 + 3F is big with D^2 = 4 > 0 but not nef (pairs -1 with C0)
    const auto d = DivisorClass::from_ints({2, 3});
    ProverConfig config;
    config.rule_order = {"R7"};
    const auto blocked = prove_h1_vanishing(d, f2, config);
    CHECK(blocked.conclusion == Conclusion::unknown);

    config.user_seed_exponent = 3;
    const auto cert = prove_h1_vanishing(d, f2, config);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    bool caveat = false;
    for (const auto& c : cert.caveats)
        if (c.find("assumption") != std::string::npos) caveat = true;
    CHECK(caveat);
}

TEST_CASE("relative verdicts are gated behind allow_relative with a caveat") {
    // an incomplete-cone variant of F2
    auto doc = surface_to_json(make_hirzebruch(2));
    doc["completeness"]["effective_cone_polyhedral"] = false;
    doc["completeness"]["negative_curves_complete"] = false;
    const auto open_model = load_surface(doc.dump());
    const auto d = DivisorClass::from_ints({1, 2});

    const auto blocked = prove_h1_vanishing(d, open_model);
    CHECK(blocked.conclusion == Conclusion::unknown);

    ProverConfig config;
    config.allow_relative = true;
    const auto cert = prove_h1_vanishing(d, open_model, config);
    CHECK(cert.conclusion == Conclusion::h1_vanishes);
    REQUIRE_FALSE(cert.caveats.empty());
    bool caveat = false;
    for (const auto& c : cert.caveats)
        if (c.find("relative") != std::string::npos) caveat = true;
    CHECK(caveat);
}

TEST_CASE("Miyaoka-Sakai certification") {
    const auto f2 = make_hirzebruch(2);
    {
        const auto cert = certify_miyaoka_sakai(DivisorClass::from_ints({2, 1}), f2);
        CHECK(cert.conclusion == Conclusion::miyaoka_sakai_divisor);
        REQUIRE(cert.rules.size() == 1);
        CHECK(cert.rules[0].fired);
    }
    {
        const auto p2 = make_projective_plane();
        const auto cert = certify_miyaoka_sakai(DivisorClass::from_ints({2}), p2);
        CHECK(cert.conclusion == Conclusion::miyaoka_sakai_divisor);
        // h0 bound through chi = 6
        bool saw = false;
        for (const auto& c : cert.rules[0].checks)
            if (c.name == "h0(P_Z) > h1_nilpotent") {
                CHECK(c.inputs["h0_lower"] == "6");
                saw = true;
            }
        CHECK(saw);
    }
    {
        // unknown h1_nilpotent: sub-check (iii) fails, conclusion unknown
        auto doc = surface_to_json(make_abelian_shell());
        doc["invariants"]["frobenius_split"] = nullptr;
        doc["invariants"]["h1_nilpotent"] = nullptr;
        const auto shell = load_surface(doc.dump());
        const auto cert = certify_miyaoka_sakai(DivisorClass::from_ints({1, 1}), shell);
        CHECK(cert.conclusion == Conclusion::unknown);
        CHECK(cert.rules[0].failure == "h1_nilpotent known");
    }
    {
        // multiples route: D = 2C0 + 3F has P = (3/2)C0 + 3F, so m = 2
        const auto cert =
            certify_miyaoka_sakai(DivisorClass::from_ints({2, 3}), f2, {}, true);
        CHECK(cert.conclusion == Conclusion::miyaoka_sakai_divisor);
        CHECK(cert.subject == DivisorClass::from_ints({4, 6}));
    }
}

TEST_CASE("soundness replay over the corpus") {
    const auto corpus = prover_corpus();
    ProverConfig config;
    config.search_bound = 4;
    int vanish = 0, ms = 0;
    for (const auto& [model, d] : corpus) {
        const auto cert = prove_h1_vanishing(d, model, config);
        CHECK(replay_certificate(cert, d, model, config));
        if (cert.conclusion != Conclusion::unknown) ++vanish;
        if (d.is_integral() && is_pseudoeffective(d, model).yes()) {
            const auto mcert = certify_miyaoka_sakai(d, model, config);
            CHECK(replay_certificate(mcert, d, model, config, true));
            if (mcert.conclusion != Conclusion::unknown) ++ms;
        }
    }
    CHECK(vanish > 20);
    CHECK(ms > 10);
}

TEST_CASE("rule order changes the citation, never the conclusion") {
    const auto corpus = prover_corpus();
    const std::vector<std::vector<std::string>> orders = {
        {"R1", "R3", "R4", "R8", "R5", "R6", "R2", "R7"},
        {"R7", "R2", "R6", "R5", "R8", "R4", "R3", "R1"},
        {"R6", "R1", "R8", "R2", "R3", "R7", "R4", "R5"},
    };
    for (const auto& [model, d] : corpus) {
        std::optional<Conclusion> base;
        for (const auto& order : orders) {
            ProverConfig config;
            config.rule_order = order;
            config.search_bound = 4;
            const auto cert = prove_h1_vanishing(d, model, config);
            if (!base) base = cert.conclusion;
            else CHECK(*base == cert.conclusion);
        }
    }
}

TEST_CASE("the effective nef route implies the connectedness route") {
    // whenever R1's hypotheses hold, the connectedness tier also certifies
    const auto corpus = prover_corpus();
    for (const auto& [model, d] : corpus) {
        if (!d.is_integral()) continue;
        const auto cs = correction_constant(model.invariants());
        if (!(is_nef(d, model).yes() && model.pair(d, d) > 4 * cs.value)) continue;
        const auto conn = is_numerically_connected(d, model, 4);
        CHECK(conn.yes());
    }
}

TEST_CASE("certificates serialize to the stable JSON contract") {
    const auto f0 = make_hirzebruch(0);
    const auto cert = prove_h1_vanishing(DivisorClass::from_ints({1, 1}), f0);
    const auto j = certificate_to_json(cert);
    CHECK(j.contains("conclusion"));
    CHECK(j.contains("rules"));
    CHECK(j.contains("caveats"));
    REQUIRE(j["rules"].is_array());
    for (const auto& r : j["rules"]) {
        CHECK(r.contains("id"));
        CHECK(r.contains("paper_ref"));
        CHECK(r.contains("checks"));
        for (const auto& c : r["checks"]) {
            CHECK(c.contains("name"));
            CHECK(c.contains("verdict"));
            CHECK(c.contains("inputs"));
        }
    }
}
