#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcg/dg.hpp"
#include "dcg/parse.hpp"

#include <random>
#include <set>

using namespace dcg;

namespace {

Rat rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 3);
    return make_rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("canonical data invariants") {
    const CanonicalData& cd = canonical_data();
    CHECK(to_string(cd.z) == "1+e1237+e4567+e123456");
    CHECK(cd.lz.size() == 14);
    CHECK(to_string(cd.lz[3]) == "e4-e12347");
    CHECK(cd.v7.dimension() == 7);
    CHECK(cd.v7p.dimension() == 7);
    CHECK(cd.n.dimension() == 2);
    CHECK(cd.n.is_isotropic());
    CHECK(to_string(cd.delta) == "1+e123");
    CHECK(to_string(cd.deltap) == "1+e456");
    CHECK(dz_dimension() == 50);
    CHECK(in_Dz(cd.z));
}

TEST_CASE("membership") {
    const CanonicalData& cd = canonical_data();
    CHECK(in_DG(lemma8_basis()[0]));
    CHECK(in_DG(parse_spinor("e14")));
    CHECK_FALSE(in_DG(ExteriorElement::blade(0)));
    CHECK_FALSE(in_DG(cd.z));
    CHECK_THROWS_AS(in_DG(ExteriorElement{}), ZeroSpinorError);
    CHECK(in_DG(open_orbit_witness()));
}

TEST_CASE("orbit types") {
    const auto ys = lemma8_basis();
    CHECK(orbit_type(ys[0]) == std::make_pair(3, 3));
    CHECK(orbit_type(ys[0] + ys[3]) == std::make_pair(2, 2));
    CHECK(orbit_type(parse_spinor("e14")) == std::make_pair(3, 3));
    CHECK(orbit_type(open_orbit_witness()) == std::make_pair(0, 0));
    CHECK_THROWS_AS(orbit_type(canonical_data().z), NotInDGError);

    const Subspace14 meet =
        annihilator(parse_spinor("e14")).intersect(canonical_data().v7);
    CHECK(meet == Subspace14({Vector14::e(1), Vector14::f(2), Vector14::f(3)}));
}

TEST_CASE("null-plane family") {
    std::mt19937_64 rng(17);
    CHECK_THROWS_AS(lemma8_family({Rat(0), Rat(0), Rat(0), Rat(0)}), ZeroSpinorError);

    // unit parameters
    for (int i = 0; i < 4; ++i) {
        std::array<Rat, 4> t{};
        t[i] = 1;
        const ExteriorElement y = lemma8_family(t);
        CHECK(in_DG(y));
        CHECK(f_intersection_dim(y) % 2 == 1);
        CHECK(orbit_type(y) == std::make_pair(3, 3));
    }
    CHECK(f_intersection_dim(lemma8_family({Rat(1), Rat(0), Rat(0), Rat(0)})) == 5);

    const std::array<Rat, 4> ones = {Rat(1), Rat(1), Rat(1), Rat(1)};
    CHECK(annihilator(lemma8_family(ones)) == lemma8_annihilator_span(ones));

    for (int trial = 0; trial < 6; ++trial) {
        std::array<Rat, 4> t = {rnd(rng), rnd(rng), rnd(rng), rnd(rng)};
        if (t[0] == 0) t[0] = 1;
        const ExteriorElement y = lemma8_family(t);
        CHECK(in_Dz(y));
        CHECK(in_DG(y));
        CHECK(annihilator(y) == lemma8_annihilator_span(t));
        CHECK(annihilator(y).is_isotropic());
        const auto type = orbit_type(y);
        if (t[0] * t[3] - t[1] * t[2] == 0) CHECK(type == std::make_pair(3, 3));
        else CHECK(type == std::make_pair(2, 2));
    }

    // t1 = 0: the printed annihilator span does not apply, but membership
    // and the rank dichotomy still do
    const std::array<Rat, 4> antidiag = {Rat(0), Rat(1), Rat(1), Rat(0)};
    CHECK(in_DG(lemma8_family(antidiag)));
    CHECK(orbit_type(lemma8_family(antidiag)) == std::make_pair(2, 2));
    const std::array<Rat, 4> col = {Rat(0), Rat(1), Rat(0), Rat(3)};
    CHECK(in_DG(lemma8_family(col)));
    CHECK(orbit_type(lemma8_family(col)) == std::make_pair(3, 3));
}

TEST_CASE("torus weights") {
    CHECK(blade_weight(0).is_zero());
    const Blade e14 = parse_spinor("e14").terms().begin()->first;
    CHECK(blade_weight(e14) == TorusWeight{1, 0, 1, 0});
    const Blade e123456 = parse_spinor("e123456").terms().begin()->first;
    CHECK(blade_weight(e123456).is_zero());
}

TEST_CASE("fixed points") {
    const FixedPointReport fp = fixed_points();
    CHECK(fp.points.size() == 36);
    CHECK(fp.points == expected_fixed_points());
    for (Blade b : fp.points) CHECK(in_DG(ExteriorElement::blade(b)));

    std::set<TorusWeight> ws;
    for (Blade b : fp.points) ws.insert(blade_weight(b));
    CHECK(ws.size() == 36);
    // exactly the mixed root sums: both components nonzero root vectors
    std::set<TorusWeight> expected_ws;
    const int roots[6][2] = {{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
    for (const auto& g : roots)
        for (const auto& gp : roots) expected_ws.insert({g[0], g[1], gp[0], gp[1]});
    CHECK(ws == expected_ws);

    CHECK(fp.rejected.size() == 12);
    for (const RejectedLine& l : fp.rejected) {
        CHECK(l.ann_dim != 7);
        const bool g_zero = l.weight.a1 == 0 && l.weight.a2 == 0;
        const bool gp_zero = l.weight.b1 == 0 && l.weight.b2 == 0;
        CHECK(g_zero != gp_zero); // exactly one component vanishes
    }

    CHECK(to_string(fp.w0.chart_base) == "1+e123456");
    CHECK(to_string(fp.w0.infinity) == "e1237+e4567");
    CHECK(fp.w0.equations_gcd == "1");
    CHECK(fp.w0.infinity_ann_dim == 1);
    CHECK(fp.w0.no_pure_spinor);
}

TEST_CASE("fixed point graph") {
    const FixedPointGraph g = fixed_point_graph();
    CHECK(g.vertices.size() == 36);
    auto blade_of = [](const char* s) {
        return parse_spinor(s).terms().begin()->first;
    };
    CHECK(g.adjacent(blade_of("e14"), blade_of("e1247")));
    CHECK_FALSE(g.adjacent(blade_of("e14"), blade_of("e25")));
    CHECK(g.adjacent(blade_of("e1247"), blade_of("e1257")));
    for (const auto& [a, b] : g.edges)
        CHECK_FALSE((blade_degree(a) == 2 && blade_degree(b) == 2));
}

TEST_CASE("character restriction") {
    const CharacterReport cr = restrict_character();
    CHECK(cr.equal);
    int total = 0;
    for (const auto& [w, m] : cr.actual) total += m;
    CHECK(total == 64);
    CHECK(cr.actual.at(TorusWeight{}) == 4);
    CHECK(cr.actual.at(TorusWeight{1, 0, 1, 0}) == 1);
}

TEST_CASE("scalar chart purity equations") {
    // on the W0 chart the equations are {s, s, 1}
    BasicExterior<PolyQ> x;
    const ExteriorElement u0 = parse_spinor("1+e123456");
    const ExteriorElement u1 = parse_spinor("e1237+e4567");
    for (const auto& [s, c] : u0.terms()) x.add_term(s, PolyQ(c));
    for (const auto& [s, c] : u1.terms()) x.add_term(s, PolyQ::variable() * c);
    const std::vector<PolyQ> eqs = scalar_chart_purity_equations(x);
    REQUIRE(eqs.size() == 3);
    PolyQ g;
    for (const PolyQ& e : eqs) g = PolyQ::gcd(g, e);
    CHECK(g.degree() == 0);

    // an exponential family has no purity obstruction in the chart
    BasicExterior<PolyQ> pure_x;
    pure_x.add_term(0, PolyQ(Rat(1)));
    const Blade e12 = parse_spinor("e12").terms().begin()->first;
    pure_x.add_term(e12, PolyQ::variable());
    CHECK(scalar_chart_purity_equations(pure_x).empty());
}
