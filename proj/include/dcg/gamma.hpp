#pragma once

// The subring Gamma of symmetric functions generated by the odd power sums
// p1, p3, p5, ..., with Schur Q-functions realized by exact power-series
// arithmetic:
//
//   sum_r Q_r t^r = exp(2 sum_{k odd} p_k t^k / k),
//
// two-row rule Q_{(a,b)} = Q_a Q_b + 2 sum_{i=1..b} (-1)^i Q_{a+i} Q_{b-i},
// and Pfaffians of the two-row matrix for longer partitions. P_l = 2^{-l(l)}
// Q_l. This module is the independent multiplication oracle for the Schubert
// ring: it never sees the Pieri rule it is used to validate.

#include "dcg/errors.hpp"
#include "dcg/rational.hpp"

#include <map>
#include <vector>

namespace dcg {
namespace gamma {

// Partition as strictly or weakly decreasing positive ints, depending on use.
using Parts = std::vector<int>;

// Monomial in odd power sums: weakly decreasing odd parts; degree = sum.
using GammaElement = std::map<Parts, Rat>;

int weight(const Parts& p);
bool is_strict(const Parts& p);

GammaElement g_add(const GammaElement& a, const GammaElement& b);
GammaElement g_scale(const GammaElement& a, const Rat& s);
GammaElement g_mul(const GammaElement& a, const GammaElement& b);

// Q_r in p-coordinates, r >= 0 (cached).
const GammaElement& q_one_row(int r);

// Schur Q-function of a strict partition, via the two-row/Pfaffian route.
GammaElement q_lambda(const Parts& lambda);

// All strict partitions of d (parts unbounded), in a fixed canonical order.
const std::vector<Parts>& strict_partitions(int d);

// Expand a homogeneous f of degree d in the P-basis: f = sum c_l P_l.
// Throws OracleIntegrityError if the linear system is inconsistent.
std::map<Parts, Rat> expand_in_P(const GammaElement& f, int d);

// P_mu . P_nu in the P-basis over all strict partitions (no truncation).
// Coefficients are checked to be nonnegative integers.
std::map<Parts, Int> product_in_gamma(const Parts& mu, const Parts& nu);

// Same, with every term having a part >= 7 deleted (the Chow-ring quotient).
std::map<Parts, Int> product_oracle(const Parts& mu, const Parts& nu);

} // namespace gamma
} // namespace dcg
