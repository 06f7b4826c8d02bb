#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcg/gamma.hpp"

using namespace dcg;
using gamma::GammaElement;
using gamma::Parts;

namespace {

GammaElement mono(Parts p, Rat c) { return GammaElement{{std::move(p), std::move(c)}}; }

} // namespace

TEST_CASE("one-row generating series") {
    CHECK(gamma::q_one_row(0) == mono({}, Rat(1)));
    CHECK(gamma::q_one_row(1) == mono({1}, Rat(2)));
    CHECK(gamma::q_one_row(2) == mono({1, 1}, Rat(2)));
    // Q_3 = 4/3 p1^3 + 2/3 p3
    GammaElement q3 = gamma::g_add(mono({1, 1, 1}, make_rat(4, 3)), mono({3}, make_rat(2, 3)));
    CHECK(gamma::q_one_row(3) == q3);
    // only odd power sums ever appear
    for (int r = 0; r <= 12; ++r)
        for (const auto& [m, c] : gamma::q_one_row(r))
            for (int part : m) CHECK(part % 2 == 1);
}

TEST_CASE("two-row rule and Pfaffian") {
    // Q_{(2,1)} = Q_2 Q_1 - 2 Q_3
    const GammaElement expect = gamma::g_add(
        gamma::g_mul(gamma::q_one_row(2), gamma::q_one_row(1)),
        gamma::g_scale(gamma::q_one_row(3), Rat(-2)));
    CHECK(gamma::q_lambda({2, 1}) == expect);
    CHECK(gamma::q_lambda({4}) == gamma::q_one_row(4));
    CHECK(gamma::q_lambda({}) == mono({}, Rat(1)));
    CHECK_THROWS_AS(gamma::q_lambda({2, 2}), DomainError);

    // degree-3 homogeneous element
    for (const auto& [m, c] : gamma::q_lambda({2, 1})) CHECK(gamma::weight(m) == 3);

    // Pfaffian route consistency: Q_{(3,2,1)} expands with a zero pad; its
    // P-expansion must be the single term 2^3 P_{(3,2,1)}.
    const auto exp321 = gamma::expand_in_P(gamma::q_lambda({3, 2, 1}), 6);
    REQUIRE(exp321.size() == 1);
    CHECK(exp321.begin()->first == Parts{3, 2, 1});
    CHECK(exp321.begin()->second == Rat(8));
}

TEST_CASE("expansion in the P basis") {
    // P_1 P_1 = P_2
    const GammaElement p1p1 = mono({1, 1}, Rat(1)); // P_1 = p_1
    const auto exp = gamma::expand_in_P(p1p1, 2);
    REQUIRE(exp.size() == 1);
    CHECK(exp.begin()->first == Parts{2});
    CHECK(exp.begin()->second == Rat(1));

    CHECK(gamma::expand_in_P({}, 5).empty());

    // single Q_lambda expands to 2^length
    for (int d = 1; d <= 9; ++d)
        for (const Parts& l : gamma::strict_partitions(d)) {
            const auto e = gamma::expand_in_P(gamma::q_lambda(l), d);
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == l);
            CHECK(e.begin()->second == Rat(pow_int(2, static_cast<unsigned>(l.size()))));
        }
}

TEST_CASE("products frozen by hand computation") {
    using M = std::map<Parts, Int>;
    CHECK(gamma::product_oracle({1}, {1}) == M{{{2}, 1}});
    CHECK(gamma::product_in_gamma({2}, {1}) == M{{{3}, 1}, {{2, 1}, 1}});
    CHECK(gamma::product_in_gamma({2}, {2}) == M{{{4}, 1}, {{3, 1}, 2}});
    CHECK(gamma::product_in_gamma({3}, {3}) == M{{{6}, 1}, {{5, 1}, 2}, {{4, 2}, 2}});
    CHECK(gamma::product_in_gamma({2, 1}, {2}) == M{{{4, 1}, 1}, {{3, 2}, 1}});
    CHECK(gamma::product_in_gamma({3, 1}, {2}) ==
          M{{{5, 1}, 1}, {{4, 2}, 2}, {{3, 2, 1}, 1}});
    // unit
    for (const Parts& nu : {Parts{}, Parts{3}, Parts{4, 2}})
        CHECK(gamma::product_in_gamma({}, nu) == M{{nu, 1}});
}

namespace {

// evaluate a Gamma element at concrete variables x1..xn via p_k = sum x_i^k
Rat eval_at(const GammaElement& f, const std::vector<long>& xs) {
    Rat total(0);
    for (const auto& [mono, c] : f) {
        Rat term = c;
        for (int k : mono) {
            Int pk(0);
            for (long x : xs) pk += pow_int(Int(x), static_cast<unsigned>(k));
            term *= Rat(pk);
        }
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("specializations pin the Pfaffian route") {
    // staircase values: Q_{(n,...,1)}(x_1..x_n) = 2^n prod x_i prod_{i<j} (x_i + x_j)
    CHECK(eval_at(gamma::q_lambda({1}), {5}) == 10);
    CHECK(eval_at(gamma::q_lambda({2, 1}), {1, 2}) == 4 * 1 * 2 * 3);
    CHECK(eval_at(gamma::q_lambda({3, 2, 1}), {1, 2, 3}) == 8 * 6 * (3 * 4 * 5));
    CHECK(eval_at(gamma::q_lambda({4, 3, 2, 1}), {1, 2, 3, 4}) ==
          16 * 24 * (3 * 4 * 5 * 5 * 6 * 7));

    // Schur Q vanishes when the length exceeds the number of variables
    CHECK(eval_at(gamma::q_lambda({3, 2, 1}), {1, 2}) == 0);
    CHECK(eval_at(gamma::q_lambda({4, 2, 1}), {1, 2}) == 0);
    CHECK(eval_at(gamma::q_lambda({5, 3, 2, 1}), {1, 2, 3}) == 0);
    CHECK(eval_at(gamma::q_lambda({2, 1}), {7}) == 0);

    // one-row values against the classical series (1+xt)/(1-xt) per variable:
    // at x = (1,2), Q_1..Q_4 are 6, 18, 42, 90
    CHECK(eval_at(gamma::q_one_row(1), {1, 2}) == 6);
    CHECK(eval_at(gamma::q_one_row(2), {1, 2}) == 18);
    CHECK(eval_at(gamma::q_one_row(3), {1, 2}) == 42);
    CHECK(eval_at(gamma::q_one_row(4), {1, 2}) == 90);
}

TEST_CASE("truncation deletes parts above six") {
    const auto full = gamma::product_in_gamma({6}, {6});
    const auto cut = gamma::product_oracle({6}, {6});
    bool truncated_something = false;
    for (const auto& [l, c] : full) {
        if (!l.empty() && l[0] > 6) truncated_something = true;
        else CHECK(cut.count(l) == 1);
    }
    CHECK(truncated_something);
    for (const auto& [l, c] : cut) CHECK(l[0] <= 6);
}

TEST_CASE("integrality on a weight-bounded sample") {
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b)
            for (const Parts& mu : gamma::strict_partitions(a))
                for (const Parts& nu : gamma::strict_partitions(b))
                    CHECK_NOTHROW(gamma::product_in_gamma(mu, nu));
}

TEST_CASE("ideal stability sample") {
    // every term of P_mu P_nu keeps a part >= 7 when mu_1 >= 7
    for (const Parts& mu : {Parts{7}, Parts{8}, Parts{7, 1}, Parts{9, 2}}) {
        for (int b = 0; b <= 4; ++b) {
            for (const Parts& nu : gamma::strict_partitions(b)) {
                for (const auto& [l, c] : gamma::product_in_gamma(mu, nu)) {
                    REQUIRE(!l.empty());
                    CHECK(l[0] >= 7);
                }
            }
        }
    }
}
