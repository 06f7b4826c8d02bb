#pragma once

// Root-system computations for D7 and G2.
//
// D7 weights live in epsilon-coordinates (7 rationals, all integral or all
// half-integral), rho = (6,5,4,3,2,1,0), positive roots eps_i +- eps_j for
// i < j. The signed Weyl dimension ("euler_dim") is the plain product
// formula, valid for every weight: it vanishes exactly on singular weights
// and changes sign under the dot action, so Koszul-style alternating sums
// can use it without case analysis.
//
// The G2 Weyl group is built from the rank-2 reflection representation in
// root coordinates (integer matrices); lengths and simple lengths are
// computed by action on the six positive roots, not from a table.

#include "dcg/errors.hpp"
#include "dcg/poly.hpp"
#include "dcg/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace dcg {

struct WeightD7 {
    std::array<Rat, 7> eps{};

    WeightD7 operator+(const WeightD7& o) const;
    WeightD7 operator-(const WeightD7& o) const;
    WeightD7 operator*(const Rat& s) const;
    bool operator==(const WeightD7& o) const { return eps == o.eps; }

    std::string str() const;
};

WeightD7 rho_d7();
WeightD7 omega_d7(int i); // fundamental weights, i in 1..7

// Positive root eps_i + sign * eps_j, i < j, sign in {+1, -1}.
struct RootD7 {
    int i = 0, j = 0, sign = +1;
    std::string str() const;
    bool operator==(const RootD7& o) const { return i == o.i && j == o.j && sign == o.sign; }
};

const std::vector<RootD7>& positive_roots_d7(); // fixed enumeration order

Rat root_pairing(const WeightD7& v, const RootD7& r);

// Product over positive roots of <lambda+rho, a> / <rho, a>; zero iff
// lambda + rho is singular, negative for weights resolved in odd degree.
Rat euler_dim_d7(const WeightD7& lambda);

// All positive roots orthogonal to lambda + rho.
std::vector<RootD7> zero_pairing_roots(const WeightD7& lambda);

struct BBWResult {
    bool singular = false;
    RootD7 witness;       // first orthogonal root in enumeration order, if singular
    int degree = 0;       // cohomology degree l(w), if regular
    WeightD7 dominant;    // w(lambda+rho) - rho, if regular
};

BBWResult bbw_resolve(const WeightD7& lambda);

// Weight of G2 in fundamental-weight coordinates: i w1 + j w2.
struct WeightG2 {
    int i = 0, j = 0;
};

// Weyl dimension of the G2 module with highest weight i w1 + j w2.
Int weyl_dim_g2(int i, int j);
inline Int weyl_dim_g2(const WeightG2& w) { return weyl_dim_g2(w.i, w.j); }

// The three Koszul weight families theta_i(k), i = 0..7.
WeightD7 theta_weight(int i, int k);

// The eight displayed closed-form dimension polynomials matching
// theta_0..theta_7; exact evaluation at integer k.
Rat displayed_dim_formula(int which, int k);

struct H0Triple {
    Int koszul;      // alternating sum over the Koszul resolution
    Int closed_form; // degree-14 Hilbert polynomial
    Int g2_sum;      // sum of squared G2 dimensions over m + i + 2j = k
};

H0Triple h0_dg(int k);

// The Hilbert polynomial h^0(k) as an exact polynomial in k (degree 14).
PolyQ hilbert_polynomial();

// 14! times the leading coefficient of the Hilbert polynomial (= 4836).
Int degree_from_hilbert();

struct RigidityCase {
    std::string name;      // e.g. "lambda_3 - 3*w7"
    WeightD7 weight;
    RootD7 listed_witness;  // the tabulated (i,j), as eps_i + eps_j
    bool singular = false;
    bool witness_listed = false; // tabulated witness among the zero-pairing roots
};

// The acyclicity checks: every listed weight singular with the listed
// witness, plus the k = 0 case resolving in degree 0. Throws CheckFailure
// naming the weight if any case is not singular.
struct RigidityReport {
    std::vector<RigidityCase> cases;
    bool omega2_degree0 = false;
};
RigidityReport rigidity_suite();

// G2 Weyl group data computed from the reflection representation.
struct G2WeylData {
    int order = 0;
    std::vector<int> length;        // l(w) per element
    std::vector<int> simple_length; // m(w) per element
};
G2WeylData g2_weyl();

// Poincare polynomials in the variable T = t^2 (entry i is b_{2i}).
struct BettiData {
    PolyZ wonderful;  // from the l(u)+l(v)+m(v) count over W x W
    PolyZ dg;         // via the blowup relation
    PolyZ dg_product; // the closed product formula
    PolyZ sg;         // 26-dimensional incidence variety
    Int wonderful_sum;
    Int dg_sum;
    Int sg_chi;
    Int deg_q5xq5;    // 4 * C(10,5)
    Int chi_y;        // (a+2)^2 for a = 4
};

// Computes everything above and checks each sequence against its expected
// value; throws CheckFailure naming the sequence and index on mismatch.
BettiData betti_suite();

} // namespace dcg
