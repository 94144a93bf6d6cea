#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"
#include "proprep/audit.hpp"
#include "proprep/ear.hpp"
#include "proprep/generators.hpp"
#include "proprep/tgc.hpp"

#include <random>

using namespace proprep;
using namespace proprep::testing;

namespace {

struct SmallCase {
    Instance inst;
    std::vector<int> committee;
};

/// A battery of small instances with both algorithmic and adversarial
/// committees, for oracle cross-checks.
std::vector<SmallCase> small_cases() {
    std::vector<SmallCase> cases;
    cases.push_back({line_instance(), {0, 1}});
    cases.push_back({line_instance(), {0, 2}});
    cases.push_back({line_instance(), {1, 2}});
    // pseudo-metric cluster instances with zero distances
    cases.push_back({clusters_instance({0, 0, 1, 1}, {0, 1, 2}, 2, Rational(1)), {0, 2}});
    cases.push_back({clusters_instance({0, 0, 0, 1}, {0, 1}, 1, Rational(7)), {1}});
    for (unsigned long long seed = 1; seed <= 25; ++seed) {
        int n = 3 + static_cast<int>(seed % 7);   // up to 9
        int m = 3 + static_cast<int>(seed % 4);   // up to 6
        int k = 1 + static_cast<int>(seed % std::min(3, m - 1));
        Instance inst = gen_random(n, m, k, 2, seed % 2 ? Norm::l1 : Norm::linf, seed * 13);
        RankedProfile profile = derive_rankings(inst);
        cases.push_back({inst, ear_select(profile, k).committee()});
        cases.push_back({inst, tgc_select(inst).committee()});
        // adversarial: the lexicographically first committee
        std::vector<int> worst(k);
        for (int i = 0; i < k; ++i) worst[i] = i;
        cases.push_back({inst, worst});
    }
    return cases;
}

}  // namespace

TEST_CASE("proportional fairness of the line committee is exactly 1") {
    Instance inst = line_instance();
    AuditReport report = pf_gamma(inst, {0, 1});
    CHECK(report.measured == ExtRational(Rational(1)));
    REQUIRE(report.witness);
    CHECK(report.witness->targets == std::vector<int>{0});
    CHECK(report.witness->coalition == std::vector<int>{0, 1});
    CHECK(oracle::reevaluate_witness(inst, {0, 1}, report) == report.measured);
}

TEST_CASE("zero-distance representatives make fairness trivial") {
    // every voter co-located with a committee member
    Instance inst = clusters_instance({0, 0, 1, 1}, {0, 1, 2}, 2, Rational(3));
    AuditReport report = pf_gamma(inst, {0, 1});
    CHECK(report.measured <= ExtRational(Rational(1)));
}

TEST_CASE("an uncovered zero-distance alternative drives fairness to infinity") {
    // two voters on candidate c2's spot, committee = the remote c1
    Instance inst = clusters_instance({0, 0}, {1, 0}, 1, Rational(5));
    AuditReport report = pf_gamma(inst, {0});
    CHECK(report.measured.is_infinite());
    REQUIRE(report.witness);
    CHECK(oracle::reevaluate_witness(inst, {0}, report).is_infinite());
}

TEST_CASE("polynomial fairness audit equals brute force on the battery") {
    for (const auto& [inst, committee] : small_cases()) {
        AuditReport report = pf_gamma(inst, committee);
        CHECK(report.measured == oracle::brute_pf_gamma(inst, committee));
        if (report.witness)
            CHECK(oracle::reevaluate_witness(inst, committee, report) == report.measured);
    }
}

TEST_CASE("core measurement of the line committee at alpha 1 is exactly 1") {
    Instance inst = line_instance();
    AuditReport report = core_beta(inst, {0, 1}, Rational(1));
    CHECK(report.measured == ExtRational(Rational(1)));
    REQUIRE(report.witness);
    CHECK(oracle::reevaluate_witness(inst, {0, 1}, report) == report.measured);
}

TEST_CASE("exact ratio search equals brute-force core enumeration") {
    for (const auto& [inst, committee] : small_cases()) {
        for (const Rational& alpha : {Rational(1), Rational(3, 2), Rational(2)}) {
            AuditReport report = core_beta(inst, committee, alpha);
            CHECK(report.measured == oracle::brute_core_beta(inst, committee, alpha));
            if (report.witness)
                CHECK(oracle::reevaluate_witness(inst, committee, report) == report.measured);
        }
    }
}

TEST_CASE("core audit rejects alpha below one") {
    CHECK_THROWS_AS(core_beta(line_instance(), {0, 1}, Rational(1, 2)), Error);
}

TEST_CASE("representation audit of the line committee") {
    Instance inst = line_instance();
    AuditReport report = pr_gamma(inst, {0, 1}, Rational(1), 1, 2);
    CHECK(report.measured == ExtRational(Rational(1)));

    AuditReport strong = pr_strong_gamma(inst, {0, 1}, Rational(1), 2, 2);
    CHECK(strong.measured == ExtRational(Rational(1)));  // 42/42 at S = V
    REQUIRE(strong.witness);
    CHECK(strong.witness->t == 2);
    CHECK(oracle::reevaluate_witness(inst, {0, 1}, strong) == strong.measured);
}

TEST_CASE("representation audits equal the definition-literal brute force") {
    int checked = 0;
    for (const auto& [inst, committee] : small_cases()) {
        if (inst.n > 8) continue;  // keep the subset-of-subsets oracle fast
        for (const Rational& alpha : {Rational(1), Rational(2)}) {
            AuditReport plain = pr_gamma(inst, committee, alpha, 1, inst.k);
            AuditReport strong = pr_strong_gamma(inst, committee, alpha, 1, inst.k);
            CHECK(plain.measured ==
                  oracle::brute_pr_gamma(inst, committee, alpha, 1, inst.k, false));
            CHECK(strong.measured ==
                  oracle::brute_pr_gamma(inst, committee, alpha, 1, inst.k, true));
            CHECK(strong.measured >= plain.measured);
            if (plain.witness)
                CHECK(oracle::reevaluate_witness(inst, committee, plain) == plain.measured);
            if (strong.witness)
                CHECK(oracle::reevaluate_witness(inst, committee, strong) == strong.measured);
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("the t=1 representation audit is exactly the core audit") {
    for (const auto& [inst, committee] : small_cases()) {
        for (const Rational& alpha : {Rational(1), Rational(3, 2), Rational(7, 3)}) {
            CHECK(pr_gamma(inst, committee, alpha, 1, 1).measured ==
                  core_beta(inst, committee, alpha).measured);
        }
    }
}

TEST_CASE("measured parameters are non-increasing in alpha") {
    std::vector<Rational> alphas = {Rational(1), Rational(3, 2), Rational(2), Rational(3)};
    for (const auto& [inst, committee] : small_cases()) {
        if (inst.n > 8) continue;
        ExtRational prev_core, prev_pr;
        bool first = true;
        for (const Rational& alpha : alphas) {
            ExtRational c = core_beta(inst, committee, alpha).measured;
            ExtRational g = pr_gamma(inst, committee, alpha, 1, inst.k).measured;
            if (!first) {
                CHECK(c <= prev_core);
                CHECK(g <= prev_pr);
            }
            prev_core = c;
            prev_pr = g;
            first = false;
        }
    }
}

TEST_CASE("pr audits for several alphas share one enumeration") {
    Instance inst = line_instance();
    std::vector<Rational> alphas = {Rational(1), Rational(2)};
    auto [plain, strong] = pr_gamma_sweep(inst, {0, 1}, alphas, 1, 2);
    REQUIRE(plain.size() == 2);
    REQUIRE(strong.size() == 2);
    for (size_t ai = 0; ai < alphas.size(); ++ai) {
        CHECK(plain[ai].measured == pr_gamma(inst, {0, 1}, alphas[ai], 1, 2).measured);
        CHECK(strong[ai].measured ==
              pr_strong_gamma(inst, {0, 1}, alphas[ai], 1, 2).measured);
    }
}

TEST_CASE("the enumeration cap is an explicit error, never silent") {
    Instance inst = gen_random(6, 4, 2, 2, Norm::l1, 3);
    AuditOptions opts;
    opts.cap = 5;
    CHECK_THROWS_AS(pr_gamma(inst, {0, 1}, Rational(1), 1, 1, opts), Error);
    try {
        pr_gamma(inst, {0, 1}, Rational(1), 1, 1, opts);
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::enumeration_cap_exceeded);
    }
}

TEST_CASE("sampling mode is labeled and lower-bounds the exact audit") {
    Instance inst = gen_random(9, 5, 2, 2, Norm::l1, 17);
    AuditOptions exact;
    AuditOptions sampled;
    sampled.sample_count = 200;
    sampled.sample_seed = 5;
    AuditReport full = pr_gamma(inst, {0, 1}, Rational(1), 1, 2, exact);
    AuditReport partial = pr_gamma(inst, {0, 1}, Rational(1), 1, 2, sampled);
    CHECK(partial.lower_bound_only);
    CHECK_FALSE(full.lower_bound_only);
    CHECK(partial.measured <= full.measured);
}

TEST_CASE("coalition-representative audit on an everything-covering seat") {
    // k = 1, the seat covers everyone; S = V is the only coalition at alpha 1.
    Instance inst = full_from_positions({Rational(0), Rational(4)},
                                        {Rational(1), Rational(9)}, 1);
    CoverageRecord rec = tgc_select(inst);
    REQUIRE(rec.seats.size() == 1);
    CHECK(rec.seats[0].voters == std::vector<int>{0, 1});

    AuditReport report = cor_single_audit(inst, rec, Rational(1));
    // beta = d_sum(V, c1) / d_sum(V, c2) = (1+3)/(9+5)
    CHECK(report.measured == ExtRational(Rational(4, 14)));
    REQUIRE(report.witness);
    CHECK(oracle::reevaluate_witness(inst, rec.committee(), report, &rec) == report.measured);
}

TEST_CASE("line coverage keeps every coalition close to a covering representative") {
    Instance inst = line_instance();
    CoverageRecord rec = ear_select(derive_rankings(inst), 2);
    AuditReport report = cor_single_audit(inst, rec, Rational(1));
    CHECK_FALSE(report.measured.is_infinite());
    CHECK(report.measured <= ExtRational(Rational(1)));
    REQUIRE(report.witness);
    CHECK(oracle::reevaluate_witness(inst, rec.committee(), report, &rec) == report.measured);
}

TEST_CASE("the unaugmented monitor stays finite on rule output") {
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
        Instance inst = gen_random(4 + seed % 7, 4 + seed % 3, 2, 2, Norm::l1, seed * 57);
        RankedProfile profile = derive_rankings(inst);
        auto committee = ear_select(profile, 2).committee();
        AuditReport report = no_augmentation_monitor(inst, committee, 1, 2);
        CHECK_FALSE(report.measured.is_infinite());
        REQUIRE(report.monitor_ratio);
    }
}

TEST_CASE("coalitions without covering representatives measure infinite") {
    // Externally supplied coverage that leaves voter 1 uncovered: the
    // coalition {v2} has no covering representative and a positive target
    // column, so the measurement is +infinity with that witness.
    Instance inst = full_from_positions({Rational(0), Rational(10)},
                                        {Rational(0), Rational(10), Rational(11)}, 1);
    CoverageRecord rec;
    rec.kind = CoverageRecord::Kind::ear;
    rec.n = 2;
    rec.m = 3;
    rec.k = 1;
    rec.p = 1;
    CoverageRecord::Seat seat;
    seat.candidate = 0;
    seat.tau = 1;
    seat.voters = {0};
    rec.seats.push_back(seat);
    rec.uncovered = {1};

    AuditReport report = cor_single_audit(inst, rec, Rational(1));
    CHECK(report.measured.is_infinite());
    REQUIRE(report.witness);
    CHECK(report.witness->coalition == std::vector<int>{1});
    CHECK(oracle::reevaluate_witness(inst, rec.committee(), report, &rec).is_infinite());
}

TEST_CASE("stability of zero-distance coverage is at most 1") {
    Instance inst = clusters_instance({0, 1}, {0, 1, 2}, 2, Rational(6));
    CoverageRecord rec = ear_select(derive_rankings(inst), 2);
    AuditReport report = stability_rho(inst, rec, StabilityVariant::ordinal);
    CHECK(report.measured <= ExtRational(Rational(1)));
    CHECK(report.bound);
}

TEST_CASE("stability measurements respect the rule constants on random elections") {
    for (unsigned long long seed = 1; seed <= 25; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        int m = 3 + static_cast<int>(seed % 4);
        int k = 1 + static_cast<int>(seed % std::min(3, m - 1));
        Instance inst = gen_random(n, m, k, 2, Norm::l1, seed * 7);
        RankedProfile profile = derive_rankings(inst);

        CoverageRecord ear = ear_select(profile, k);
        AuditReport rho_ear = stability_rho(inst, ear, StabilityVariant::ordinal);
        REQUIRE(rho_ear.satisfied);
        CHECK(*rho_ear.satisfied);
        if (rho_ear.witness)
            CHECK(oracle::reevaluate_witness(inst, ear.committee(), rho_ear, &ear) ==
                  rho_ear.measured);

        CoverageRecord tgc = tgc_select(inst);
        AuditReport rho_tgc = stability_rho(inst, tgc, StabilityVariant::cardinal);
        REQUIRE(rho_tgc.satisfied);
        CHECK(*rho_tgc.satisfied);
        if (rho_tgc.witness)
            CHECK(oracle::reevaluate_witness(inst, tgc.committee(), rho_tgc, &tgc) ==
                  rho_tgc.measured);
    }
}

TEST_CASE("distortion of the line winners") {
    Instance inst = line_instance();
    CHECK(distortion(inst, 0) == ExtRational(Rational(1)));   // 21/21
    CHECK(distortion(inst, 1) == ExtRational(Rational(1)));   // the other optimum
    CHECK(distortion(inst, 2) == ExtRational(Rational(18)));  // 378/21
}

TEST_CASE("distortion conventions at zero column sums") {
    // all voters on c1; c2 remote: the winner c2 has infinite distortion
    Instance inst = clusters_instance({0, 0}, {0, 1}, 1, Rational(3));
    CHECK(distortion(inst, 1).is_infinite());
    CHECK(distortion(inst, 0) == ExtRational(Rational(1)));  // 0/0 convention
}

TEST_CASE("the unaugmented monitor reports gamma relative to n/k") {
    // three separated voters, each on its own selected candidate; the spare
    // candidate is remote. The binding constraint is S = V at t = k.
    Instance inst = clusters_instance({0, 1, 2}, {0, 1, 2, 3}, 3, Rational(1));
    const int P = inst.points();
    for (int x = 0; x < P; ++x) {  // move the spare candidate far away
        if (x == inst.candidate_point(3)) continue;
        inst.dist[static_cast<size_t>(x) * P + inst.candidate_point(3)] = Rational(100);
        inst.dist[static_cast<size_t>(inst.candidate_point(3)) * P + x] = Rational(100);
    }
    REQUIRE(validate_metric(inst).ok);

    AuditReport report = no_augmentation_monitor(inst, {0, 1, 2}, 1, 3);
    CHECK(report.measured == ExtRational(Rational(1)));
    REQUIRE(report.monitor_ratio);
    CHECK(*report.monitor_ratio == ExtRational(Rational(1)));  // gamma / (n/k) = 1
    CHECK_FALSE(report.bound);
}

TEST_CASE("coverage stability dominates outside-target fairness") {
    // d(v, R[S]) >= d(v, R) pointwise, so over the shared constraint family
    // (coalitions x non-committee targets) the stability measurement weakly
    // exceeds the fairness one. Committee members as targets belong only to
    // the fairness family, so full pf_gamma is not comparable.
    for (unsigned long long seed = 1; seed <= 15; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);
        int m = 4 + static_cast<int>(seed % 3);
        int k = 1 + static_cast<int>(seed % 3);
        Instance inst = gen_random(n, m, k, 2, Norm::l1, seed * 211);
        RankedProfile profile = derive_rankings(inst);
        for (CoverageRecord rec : {ear_select(profile, k), tgc_select(inst)}) {
            const auto committee = rec.committee();
            std::vector<bool> in_committee(m, false);
            for (int c : committee) in_committee[c] = true;
            const int p = rec.p;

            ExtRational pf_outside{Rational(0)};
            bool have = false;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                auto S = oracle::mask_members(mask, n);
                if (static_cast<int>(S.size()) < p) continue;
                for (int c = 0; c < m; ++c) {
                    if (in_committee[c]) continue;
                    bool first = true;
                    ExtRational factor;
                    for (int v : S) {
                        ExtRational r = audit_ratio(oracle::voter_cost(inst, committee, v),
                                                    inst.d_vc(v, c));
                        if (first || r < factor) factor = r;
                        first = false;
                    }
                    if (!have || factor > pf_outside) pf_outside = factor;
                    have = true;
                }
            }

            ExtRational rho =
                stability_rho(inst, rec, StabilityVariant::ordinal).measured;
            CHECK(rho >= pf_outside);
        }
    }
}

TEST_CASE("audits agree with brute force on zero-heavy pseudo-metrics") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 15; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);  // <= 8
        int m = 3 + static_cast<int>(rng() % 3);  // <= 5
        int clusters = 2 + static_cast<int>(rng() % 2);
        std::vector<int> vc(n), cc(m);
        for (int& c : vc) c = static_cast<int>(rng() % clusters);
        for (int& c : cc) c = static_cast<int>(rng() % clusters);
        int k = 1 + static_cast<int>(rng() % (m - 1));
        Instance inst = clusters_instance(vc, cc, k, Rational(1 + rng() % 5));

        std::vector<int> committee;
        for (int c = 0; c < m && static_cast<int>(committee.size()) < k; ++c)
            if (rng() % 2 || m - c == k - static_cast<int>(committee.size()))
                committee.push_back(c);

        CHECK(pf_gamma(inst, committee).measured == oracle::brute_pf_gamma(inst, committee));
        for (const Rational& alpha : {Rational(1), Rational(2)}) {
            CHECK(core_beta(inst, committee, alpha).measured ==
                  oracle::brute_core_beta(inst, committee, alpha));
            CHECK(pr_gamma(inst, committee, alpha, 1, k).measured ==
                  oracle::brute_pr_gamma(inst, committee, alpha, 1, k, false));
        }
    }
}

TEST_CASE("coalition representatives grow monotonically with the coalition") {
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
        Instance inst = gen_random(8, 5, 2, 2, Norm::l1, seed * 31);
        CoverageRecord rec = ear_select(derive_rankings(inst), 2);
        auto reps_of = [&](unsigned mask) {
            std::vector<int> reps;
            for (const auto& seat : rec.seats) {
                bool hit = false;
                for (int v : seat.voters) hit |= (mask >> v & 1u) != 0;
                if (hit) reps.push_back(seat.candidate);
            }
            return reps;
        };
        std::mt19937_64 rng(seed);
        for (int it = 0; it < 50; ++it) {
            unsigned small = static_cast<unsigned>(rng() % 256);
            unsigned big = small | static_cast<unsigned>(rng() % 256);
            auto rs = reps_of(small);
            auto rb = reps_of(big);
            for (int r : rs) CHECK(std::find(rb.begin(), rb.end(), r) != rb.end());
        }
    }
}

TEST_CASE("both single-winner paths stay within the distortion guarantee") {
    QuadBound cap = distortion_bound();
    for (unsigned long long seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random(5 + seed % 8, 3 + seed % 5, 2, 2, Norm::l1, seed * 101);
        RankedProfile profile = derive_rankings(inst);
        CHECK(cap.admits(distortion(inst, single_winner(profile))));
        CHECK(cap.admits(distortion(inst, single_winner_via_ear(profile))));
    }
}

TEST_CASE("audits validate the committee argument") {
    Instance inst = line_instance();
    CHECK_THROWS_AS(pf_gamma(inst, {0}), Error);        // wrong size
    CHECK_THROWS_AS(pf_gamma(inst, {0, 0}), Error);     // duplicate
    CHECK_THROWS_AS(pf_gamma(inst, {0, 7}), Error);     // out of range
    CHECK_THROWS_AS(distortion(inst, 9), Error);
}
