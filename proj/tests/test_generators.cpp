#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "proprep/generators.hpp"

using namespace proprep;

TEST_CASE("two-cluster family reproduces its closed-form parameters") {
    SUBCASE("alpha = 2") {
        Instance inst = gen_two_cluster(Rational(2));
        CHECK(inst.n == 14);  // q = 4, k = 7
        CHECK(inst.m == 14);
        CHECK(inst.k == 7);
        CHECK(hare_quota(inst.n, inst.k) == 2);
        CHECK(validate_metric(inst).ok);
        // paired encoding: voter i sits on candidate i
        CHECK(inst.d_vc(3, 3) == Rational(0));
        CHECK(inst.d_vc(0, 1) == Rational(1));
        CHECK(inst.d_vc(0, 7) == Rational(1000));
    }
    SUBCASE("alpha = 3/2") {
        Instance inst = gen_two_cluster(Rational(3, 2), Rational(1));
        CHECK(inst.n == 10);  // q = 3, k = 5
        CHECK(inst.k == 5);
        CHECK(validate_metric(inst).ok);  // two-valued metric stays metric at far = 1
    }
    CHECK_THROWS_AS(gen_two_cluster(Rational(1)), Error);
    CHECK_THROWS_AS(gen_two_cluster(Rational(2), Rational(1, 2)), Error);
}

TEST_CASE("diverging family reproduces its closed-form parameters") {
    SUBCASE("alpha = 4/3") {
        Instance inst = gen_diverging(Rational(4, 3));
        CHECK(inst.k == 3);
        CHECK(inst.n == 8);
        CHECK(inst.m == 4);
        CHECK(hare_quota(inst.n, inst.k) == 3);
        CHECK(validate_metric(inst).ok);
    }
    SUBCASE("alpha = 5/4") {
        Instance inst = gen_diverging(Rational(5, 4));
        CHECK(inst.k == 4);
        CHECK(inst.n == 15);
        CHECK(inst.m == 5);
        CHECK(hare_quota(inst.n, inst.k) == 4);
        // cluster structure: zero inside, one across
        CHECK(inst.d_vc(0, 0) == Rational(0));
        CHECK(inst.d_vc(0, 1) == Rational(1));
    }
    CHECK_THROWS_AS(gen_diverging(Rational(7, 5)), Error);  // 1/(alpha-1) = 5/2
    CHECK_THROWS_AS(gen_diverging(Rational(3, 2)), Error);  // open interval
    CHECK_THROWS_AS(gen_diverging(Rational(1)), Error);
}

TEST_CASE("refined family balances cluster sizes to sum to n") {
    Instance inst = gen_refined(24, 4);
    CHECK(inst.m == 5);
    CHECK(inst.n == 24);
    CHECK(validate_metric(inst).ok);
    // count voters co-located with each candidate: sizes in {4, 5}
    for (int c = 0; c < inst.m; ++c) {
        int size = 0;
        for (int v = 0; v < inst.n; ++v)
            if (inst.d_vc(v, c).is_zero()) ++size;
        CHECK((size == 4 || size == 5));
    }
    CHECK_THROWS_AS(gen_refined(10, 3), Error);  // k > n/4
}

TEST_CASE("separation election realizes the published table exactly") {
    SeparationElection sep = gen_separation(Rational(1, 100));
    const Instance& inst = sep.instance;
    const Rational eps(1, 100);
    const Rational delta = separation_delta_hat();

    CHECK(inst.n == 6);
    CHECK(inst.m == 6);
    CHECK(inst.k == 3);
    CHECK(inst.d_vc(0, 0) == Rational(3));
    CHECK(inst.d_vc(1, 1) == Rational(1));
    CHECK(inst.d_vc(2, 2) == delta);
    CHECK(inst.d_vc(1, 0) == Rational(3) + Rational(2) * delta);
    CHECK(inst.d_vc(2, 0) == Rational(2) + delta);
    CHECK(inst.d_vc(2, 1) == Rational(2) + delta + eps);
    CHECK(inst.d_vc(0, 1) == Rational(3) + eps);
    CHECK(inst.d_vc(0, 3) == Rational(100));  // across the clusters
    CHECK(inst.d_vc(3, 3) == Rational(1));
    CHECK(inst.d_vc(4, 4) == Rational(1));

    // generation re-verifies the metric and rankings; check again here
    CHECK(validate_metric(inst).ok);
    CHECK(consistent_with(sep.profile, inst));
    RankedProfile derived = derive_rankings(inst);
    CHECK(derived.order == sep.profile.order);
    CHECK(sep.profile.order[1] == std::vector<int>{1, 2, 0, 3, 4, 5});
    CHECK(sep.profile.order[5] == std::vector<int>{5, 3, 4, 0, 1, 2});

    // the rational surrogate sits within 1e-9 of (sqrt(5)-1)/2:
    // |2*delta + 1 - sqrt(5)| <= 2e-9  <=>  (2*delta+1)^2 within the bracket
    Rational x = Rational(2) * delta + Rational(1);
    Rational lo = x - Rational(2, 1000000000), hi = x + Rational(2, 1000000000);
    CHECK(lo * lo < Rational(5));
    CHECK(hi * hi > Rational(5));

    CHECK_THROWS_AS(gen_separation(Rational(1, 5)), Error);
    CHECK_THROWS_AS(gen_separation(Rational(0)), Error);
}

TEST_CASE("random lattice instances are deterministic and valid") {
    Instance a = gen_random(10, 6, 3, 2, Norm::l1, 42);
    Instance b = gen_random(10, 6, 3, 2, Norm::l1, 42);
    Instance c = gen_random(10, 6, 3, 2, Norm::l1, 43);
    CHECK(a.dist == b.dist);
    CHECK(a.dist != c.dist);
    CHECK(hare_quota(a.n, a.k) == 4);
    CHECK(validate_metric(a).ok);
    CHECK(validate_metric(gen_random(8, 5, 2, 3, Norm::linf, 7)).ok);

    // block variant draws the same points
    Instance block = gen_random_block(10, 6, 3, 2, Norm::l1, 42);
    CHECK_FALSE(block.full);
    for (int v = 0; v < a.n; ++v)
        for (int cand = 0; cand < a.m; ++cand)
            CHECK(block.d_vc(v, cand) == a.d_vc(v, cand));
    CHECK(validate_metric(block).partial);

    CHECK_THROWS_AS(gen_random(5, 3, 3, 2, Norm::l1, 1), Error);  // k >= m
}
