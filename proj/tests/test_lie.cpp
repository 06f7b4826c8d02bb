#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcg/lie.hpp"

#include <map>
#include <random>

using namespace dcg;

namespace {

WeightD7 rnd_weight(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-6, 6);
    std::uniform_int_distribution<int> half(0, 1);
    WeightD7 w;
    const bool halves = half(rng);
    for (int i = 0; i < 7; ++i)
        w.eps[i] = halves ? make_rat(2 * coord(rng) + 1, 2) : Rat(coord(rng));
    return w;
}

} // namespace

TEST_CASE("basic dimensions") {
    CHECK(euler_dim_d7(WeightD7{}) == 1);
    CHECK(euler_dim_d7(omega_d7(1)) == 14);
    CHECK(euler_dim_d7(omega_d7(6)) == 64);
    CHECK(euler_dim_d7(omega_d7(7)) == 64);
    CHECK(euler_dim_d7(omega_d7(2)) == 91); // the adjoint representation
    // fundamental exterior powers pin the root system: dim V(w_k) = C(14,k)
    CHECK(euler_dim_d7(omega_d7(3)) == Rat(binomial(14, 3)));
    CHECK(euler_dim_d7(omega_d7(4)) == Rat(binomial(14, 4)));
    CHECK(euler_dim_d7(omega_d7(5)) == Rat(binomial(14, 5)));
    // the two halves of the middle exterior power
    CHECK(euler_dim_d7(omega_d7(7) * Rat(2)) == Rat(binomial(14, 7) / 2));
    CHECK(euler_dim_d7(omega_d7(6) * Rat(2)) == Rat(binomial(14, 7) / 2));
    CHECK(weyl_dim_g2(0, 0) == 1);
    CHECK(weyl_dim_g2(1, 0) == 7);
    CHECK(weyl_dim_g2(0, 1) == 14);
    CHECK(weyl_dim_g2(2, 0) == 27);
    CHECK(weyl_dim_g2(1, 1) == 64);
    CHECK(weyl_dim_g2(0, 2) == 77);
    CHECK(weyl_dim_g2(3, 0) == 77);
    CHECK(weyl_dim_g2(WeightG2{2, 0}) == 27);
    CHECK_THROWS_AS(weyl_dim_g2(-1, 0), DomainError);
}

TEST_CASE("bbw resolution") {
    for (int k = 0; k <= 4; ++k) {
        const BBWResult r = bbw_resolve(omega_d7(7) * Rat(k));
        CHECK_FALSE(r.singular);
        CHECK(r.degree == 0);
        CHECK(r.dominant == omega_d7(7) * Rat(k));
    }
    const BBWResult w2 = bbw_resolve(omega_d7(2));
    CHECK_FALSE(w2.singular);
    CHECK(w2.degree == 0);

    // lambda_1 - omega7 is singular with witness eps6 + eps7
    WeightD7 lam;
    lam.eps = {Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
    const BBWResult r = bbw_resolve(lam - omega_d7(7));
    CHECK(r.singular);
    CHECK(r.witness == RootD7{6, 7, +1});
}

TEST_CASE("dot-action antisymmetry and singular detection") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const WeightD7 lam = rnd_weight(rng);
        CHECK(bbw_resolve(lam).singular == (euler_dim_d7(lam) == 0));
        const BBWResult r = bbw_resolve(lam);
        if (!r.singular) {
            const Rat expect =
                (r.degree % 2 ? Rat(-1) : Rat(1)) * euler_dim_d7(r.dominant);
            CHECK(euler_dim_d7(lam) == expect);
            // the resolved weight is dominant for D7
            const WeightD7 v = r.dominant + rho_d7();
            for (int i = 0; i < 6; ++i) CHECK(v.eps[i] >= v.eps[i + 1]);
            CHECK(v.eps[5] + v.eps[6] >= 0);
        }
        // simple-reflection antisymmetry at the first node
        WeightD7 v = lam + rho_d7();
        std::swap(v.eps[0], v.eps[1]);
        CHECK(euler_dim_d7(v - rho_d7()) == -euler_dim_d7(lam));
    }
}

TEST_CASE("postulation") {
    const H0Triple t0 = h0_dg(0);
    CHECK(t0.koszul == 1);
    CHECK(t0.closed_form == 1);
    CHECK(t0.g2_sum == 1);
    const H0Triple t1 = h0_dg(1);
    CHECK(t1.koszul == 50);
    const H0Triple t2 = h0_dg(2);
    CHECK(t2.koszul == 975);
    for (int k = 0; k <= 12; ++k) {
        const H0Triple t = h0_dg(k);
        CHECK(t.koszul == t.closed_form);
        CHECK(t.koszul == t.g2_sum);
    }
}

TEST_CASE("displayed dimension formulas equal the Weyl products") {
    for (int which = 0; which < 8; ++which)
        for (int k = 0; k <= 20; ++k)
            CHECK(displayed_dim_formula(which, k) == euler_dim_d7(theta_weight(which, k)));
}

TEST_CASE("degree from the Hilbert polynomial") {
    CHECK(hilbert_polynomial().degree() == 14);
    CHECK(degree_from_hilbert() == 4836);
    CHECK(4836 == 4 * 3 * 13 * 31);
}

TEST_CASE("rigidity weights are singular with the listed witnesses") {
    const RigidityReport rep = rigidity_suite();
    CHECK(rep.cases.size() == 17);
    for (const RigidityCase& c : rep.cases) {
        CHECK(c.singular);
        CHECK(c.witness_listed);
    }
    CHECK(rep.omega2_degree0);
}

TEST_CASE("G2 Weyl group from the reflection representation") {
    const G2WeylData w = g2_weyl();
    CHECK(w.order == 12);
    std::map<int, int> by_length;
    for (int l : w.length) by_length[l] += 1;
    CHECK(by_length[0] == 1);
    CHECK(by_length[6] == 1);
    for (int l = 1; l <= 5; ++l) CHECK(by_length[l] == 2);
    for (int i = 0; i < w.order; ++i) {
        if (w.length[i] == 0) CHECK(w.simple_length[i] == 0);
        else if (w.length[i] == 6) CHECK(w.simple_length[i] == 2);
        else CHECK(w.simple_length[i] == 1);
    }
}

TEST_CASE("betti data") {
    const BettiData d = betti_suite();
    CHECK(d.wonderful_sum == 144);
    CHECK(d.dg_sum == 36);
    CHECK(d.sg_chi == 420);
    CHECK(d.deg_q5xq5 == 1008);
    CHECK(d.chi_y == 36);
    CHECK(d.dg == d.dg_product);
    CHECK(pz_palindromic(d.wonderful));
    CHECK(pz_palindromic(d.dg));
    CHECK(pz_palindromic(d.sg));
}
