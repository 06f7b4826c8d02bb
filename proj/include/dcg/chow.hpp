#pragma once

// Chow ring of the 21-dimensional spinor variety in the Schubert basis:
// classes tau_mu indexed by strict partitions inside the staircase
// (6,5,4,3,2,1), graded by |mu|, with the class of a part >= 7 set to zero.
//
// Multiplication by the hyperplane class tau_1 follows the multiplicity-free
// Pieri rule. Multiplication by a general special class tau_p uses the
// power-of-two Pieri rule; the exponent convention shipped here (number of
// connected components of the shifted skew diagram, minus one, over
// horizontal strips of the ordinary diagrams) is calibrated against the
// symmetric-function oracle on every admissible product - see
// pieri_calibration(). General products delegate to the oracle and are
// memoized.

#include "dcg/errors.hpp"
#include "dcg/gamma.hpp"
#include "dcg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace dcg {

struct StrictPartition {
    std::vector<int> parts; // strictly decreasing, each in 1..6

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p);

    int grade() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator<(const StrictPartition& o) const { return parts < o.parts; }
    bool operator==(const StrictPartition& o) const { return parts == o.parts; }

    // staircase complement: the parts of {1..6} not in this partition
    StrictPartition complement() const;

    std::string str() const; // "tau[6,1]" style body: "[6,1]"
};

// Homogeneous integer combination of Schubert classes.
class ChowClass {
public:
    ChowClass() = default; // zero of grade 0
    explicit ChowClass(int grade) : grade_(grade) {}
    static ChowClass basis(const StrictPartition& mu, Int coeff = 1);

    int grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<StrictPartition, Int>& terms() const { return terms_; }
    Int coeff(const StrictPartition& mu) const;

    void add_term(const StrictPartition& mu, const Int& c);
    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const Int& s) const;
    bool operator==(const ChowClass& o) const;

    std::string str() const;

private:
    int grade_ = 0;
    std::map<StrictPartition, Int> terms_;
};

// tau_p for p in 1..6; tau() is the unit class.
ChowClass tau(int p);
ChowClass tau(std::initializer_list<int> parts);
ChowClass tau_unit();

// All 64 staircase partitions, ordered by (grade, lex).
const std::vector<StrictPartition>& staircase_partitions();

// Multiplication by tau_1 (multiplicity-free Pieri). Accepts any grade;
// products past the top grade truncate to zero.
ChowClass pieri1(const ChowClass& c);

// Multiplication by the special class tau_p, p in 1..6, by the calibrated
// power-of-two Pieri rule. grade(c) + p must be at most 21.
ChowClass pieri_special(const ChowClass& c, int p);

// The rule itself on a single basis class, exposed for the calibration test.
ChowClass pieri_special_rule(const StrictPartition& mu, int p);

// General product, delegated to the symmetric-function oracle and cached.
ChowClass multiply(const ChowClass& x, const ChowClass& y);

// Coefficient of the point class tau_{654321}; input must have grade 21.
Int integrate(const ChowClass& c);

// tau_61 + tau_52 + tau_43 + tau_421, the codimension-7 fundamental class.
ChowClass class_DG();

// Verifies the two closed-form expressions for class_DG: the Chern-class
// expansion sum_i c_i(U) tau_1^{7-i} under the calibrated convention
// (c_i(U) = (-1)^i 2 tau_i for i = 1..6, c_7(U) = 0, the survivor of the two
// sign conventions), and the special-class polynomial
// 2 t1 t3^2 + 2 t1^2 t5 - 6 t1^4 t3 + 3 t1^7.
struct ChernCheckResult {
    std::string surviving_convention; // description of the sign convention
    bool chern_matches = false;
    bool rejected_convention_fails = false;
    bool polynomial_matches = false;
};
ChernCheckResult chern_expansion_check();

// Exhaustive Pieri-vs-oracle agreement for all staircase mu and p = 1..6
// with |mu| + p <= 21. Returns the number of products checked; throws
// CheckFailure on the first disagreement.
int pieri_calibration();

// deg of the degree-14 subvariety with fundamental class class_DG(),
// via 14 applications of pieri1 and integration. Equals 4836.
Int deg_DG();

} // namespace dcg
