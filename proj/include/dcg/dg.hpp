#pragma once

// Geometry of the 14-dimensional linear section of the spinor variety cut
// out by a fixed general spinor z: the 14 Clifford translates of z, the
// membership test, orbit types on the section, the torus fixed points, and
// the character restriction to the rank-2 x rank-2 subgroup.

#include "dcg/clifford.hpp"
#include "dcg/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dcg {

struct CanonicalData {
    ExteriorElement z;                 // 1 + e1237 + e4567 + e123456
    std::vector<ExteriorElement> lz;   // products e1.z..e7.z, f1.z..f7.z
    Subspace14 v7, v7p;                // the two orthogonal 7-dimensional summands
    Subspace14 n, np;                  // null planes inside them
    ExteriorElement delta, deltap;     // 1 + e123, 1 + e456
};

// Built once, with the structural invariants checked at construction:
// the 14 translates are independent, v7 and v7p are B-orthogonal
// complements, the null planes are isotropic and contained in them.
const CanonicalData& canonical_data();

// The 14 products u.z in canonical text form, in table order e1..e7, f1..f7.
std::vector<std::pair<std::string, std::string>> clifford_table();

// Dimension of the orthogonal of span(lz) inside the even part (= 50).
int dz_dimension();

// True if all 14 pairings <u.z, y> vanish (y even).
bool in_Dz(const ExteriorElement& y);

// Membership: y is a pure spinor orthogonal to all 14 translates.
bool in_DG(const ExteriorElement& y);

// Orbit type (k, k') = dims of annihilator(y) cap v7 / v7p; y must pass in_DG.
std::pair<int, int> orbit_type(const ExteriorElement& y);

// y(t) = t1 y1 + t2 y2 + t3 y3 + t4 y4 in the null-plane tensor family.
ExteriorElement lemma8_family(const std::array<Rat, 4>& t);

// The printed annihilator span for t1 != 0:
// <e1+e2, f1-f2, e4+e5, f4-f5, p3, p6, p7>.
Subspace14 lemma8_annihilator_span(const std::array<Rat, 4>& t);

// The four basis spinors y1..y4 of the family.
std::array<ExteriorElement, 4> lemma8_basis();

// A point of the open orbit: the pure spinor whose annihilator is the
// diagonal null graph <e1+e4, e2+e5, e3+e6, f1-f4, f2-f5, f3-f6, e7>,
// computed by exact linear solve. Its orbit type is (0,0).
ExteriorElement open_orbit_witness();

// Torus weight in coordinates (a1, a2 | b1, b2) for a1*alpha1 + a2*alpha2 +
// b1*alpha1' + b2*alpha2', with alpha3 = -alpha1 - alpha2 built in.
struct TorusWeight {
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    bool operator<(const TorusWeight& o) const {
        return std::tie(a1, a2, b1, b2) < std::tie(o.a1, o.a2, o.b1, o.b2);
    }
    bool operator==(const TorusWeight& o) const {
        return a1 == o.a1 && a2 == o.a2 && b1 == o.b1 && b2 == o.b2;
    }
    TorusWeight operator+(const TorusWeight& o) const {
        return {a1 + o.a1, a2 + o.a2, b1 + o.b1, b2 + o.b2};
    }
    bool is_zero() const { return a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0; }
    std::string str() const;
};

TorusWeight blade_weight(Blade s);

// A weight space that meets the section in a non-pure line.
struct RejectedLine {
    TorusWeight weight;
    ExteriorElement spinor;
    int ann_dim = 0;
};

// Exact analysis of the two-dimensional zero-weight space W0.
struct W0Report {
    ExteriorElement chart_base;          // scalar-part-1 basis vector
    ExteriorElement infinity;            // the complementary basis vector
    std::vector<std::string> equations;  // purity equations on the chart, in s
    std::string equations_gcd;           // "1" certifies an empty solution set
    bool chart_empty = false;            // no pure spinor with nonzero scalar
    int infinity_ann_dim = 0;            // annihilator dimension at [0:1]
    bool no_pure_spinor = false;
};

struct FixedPointReport {
    std::vector<Blade> points;          // the fixed points, sorted canonically
    std::vector<RejectedLine> rejected; // the 12 mixed-weight lines, all non-pure
    W0Report w0;
};

// Scans the weight decomposition of the even part, intersects each weight
// space with the orthogonal of span(lz) and tests membership of the result.
FixedPointReport fixed_points();

// The expected fixed-point set: e_{ij}, e_{ii'j7}, e_{ijj'7}, e_{ii'jj'}
// with i < i' in {1,2,3} and j < j' in {4,5,6}.
std::vector<Blade> expected_fixed_points();

struct FixedPointGraph {
    std::vector<Blade> vertices;
    std::vector<std::pair<Blade, Blade>> edges; // vertex pairs, a < b

    bool adjacent(Blade a, Blade b) const;
};

// T-stable lines between fixed points: a 2-blade meets a 4-blade when its
// index pair is contained in the 4-set; two 4-blades meet when their index
// sets share exactly three elements.
FixedPointGraph fixed_point_graph();

struct CharacterReport {
    std::map<TorusWeight, int> actual;   // multiplicities over the 64 blades
    std::map<TorusWeight, int> expected; // V7 (x) V7' + V7 + V7' + C
    bool equal = false;
};

CharacterReport restrict_character();

// Purity equations for a one-parameter family x(s) with constant scalar
// part 1: a pure spinor in the chart must satisfy x4 = x2^x2/2 and
// x6 = x2^x2^x2/6; returns the coefficient polynomials of the difference.
std::vector<PolyQ> scalar_chart_purity_equations(const BasicExterior<PolyQ>& x);

} // namespace dcg
