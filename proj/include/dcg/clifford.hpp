#pragma once

// Exact exterior-algebra and Clifford-module arithmetic on L*E for a fixed
// 7-dimensional space E. The 14-dimensional split quadratic space is
// V14 = E + F with B(e_i, f_j) = delta_ij / 2; e_i acts on L*E by left wedge
// and f_i by contraction, so u.(v.x) + v.(u.x) = 2 B(u,v) x.
//
// Spinors of the half-spin representation are the even elements (64
// coordinates). The duality pairing against odd elements is
//   pairing(x, y) = top coefficient of alpha(x) ^ y,
// where alpha scales the degree-k component by (-1)^{k(k-1)/2}. The sign
// twist alpha is the one convention the source material leaves open; it is
// pinned here by the adjointness identity pair_dual(z, u.y) = pairing(u.z, y)
// and by the downstream 36-point fixed-point count. If that count ever
// breaks, suspect alpha first.

#include "dcg/errors.hpp"
#include "dcg/linalg.hpp"
#include "dcg/rational.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dcg {

// Subset of {1..7} as a bitmask, bit i-1 for index i. Blade 0 is the scalar 1.
using Blade = std::uint8_t;
inline constexpr Blade kFullBlade = 0x7f;
inline constexpr int kDim = 7;

inline int blade_degree(Blade s) { return std::popcount(static_cast<unsigned>(s)); }
inline bool blade_has(Blade s, int index) { return (s >> (index - 1)) & 1; }

// Sign picked up moving e_index from the left past the indices of s below it.
inline int insertion_sign(int index, Blade s) {
    const unsigned below = static_cast<unsigned>(s) & ((1u << (index - 1)) - 1u);
    return (std::popcount(below) & 1) ? -1 : 1;
}

// "1" for the scalar blade, otherwise e followed by ascending indices.
std::string blade_str(Blade s);

// Orders blades by degree, then lexicographically on the index tuple.
bool blade_before(Blade a, Blade b);

inline bool coeff_is_zero(const Rat& c) { return c == 0; }

// Element of L*E with coefficients in C; zero coefficients are never stored.
template <class C>
class BasicExterior {
public:
    BasicExterior() = default;

    static BasicExterior blade(Blade s, C coeff = C(1)) {
        BasicExterior x;
        x.add_term(s, std::move(coeff));
        return x;
    }
    static BasicExterior scalar(C coeff) { return blade(0, std::move(coeff)); }

    const std::map<Blade, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(Blade s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Blade s, C c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(s, std::move(c));
            return;
        }
        it->second = it->second + c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    BasicExterior operator+(const BasicExterior& o) const {
        BasicExterior r = *this;
        for (const auto& [s, c] : o.terms_) r.add_term(s, c);
        return r;
    }
    BasicExterior operator-(const BasicExterior& o) const {
        BasicExterior r = *this;
        for (const auto& [s, c] : o.terms_) r.add_term(s, C(0) - c);
        return r;
    }
    BasicExterior operator*(const C& s) const {
        BasicExterior r;
        for (const auto& [b, c] : terms_) r.add_term(b, c * s);
        return r;
    }
    bool operator==(const BasicExterior& o) const { return terms_ == o.terms_; }

    // e_index ^ x
    BasicExterior wedge_index(int index) const {
        BasicExterior r;
        for (const auto& [s, c] : terms_) {
            if (blade_has(s, index)) continue;
            C val = c;
            if (insertion_sign(index, s) < 0) val = C(0) - val;
            r.add_term(static_cast<Blade>(s | (1 << (index - 1))), std::move(val));
        }
        return r;
    }

    // iota_index(x), contraction against the dual basis vector of e_index.
    BasicExterior contract_index(int index) const {
        BasicExterior r;
        for (const auto& [s, c] : terms_) {
            if (!blade_has(s, index)) continue;
            C val = c;
            if (insertion_sign(index, s) < 0) val = C(0) - val;
            r.add_term(static_cast<Blade>(s & ~(1 << (index - 1))), std::move(val));
        }
        return r;
    }

    BasicExterior wedge(const BasicExterior& o) const {
        BasicExterior r;
        for (const auto& [s, c] : terms_) {
            for (const auto& [t, d] : o.terms_) {
                if (s & t) continue;
                C prod = c * d;
                if (merge_sign(s, t) < 0) prod = C(0) - prod;
                r.add_term(static_cast<Blade>(s | t), std::move(prod));
            }
        }
        return r;
    }

    // Component of the given degree.
    BasicExterior component(int degree) const {
        BasicExterior r;
        for (const auto& [s, c] : terms_)
            if (blade_degree(s) == degree) r.add_term(s, c);
        return r;
    }

    // 0 or 1 if all blades share that parity, nullopt for mixed or zero.
    std::optional<int> parity() const {
        std::optional<int> p;
        for (const auto& [s, c] : terms_) {
            const int q = blade_degree(s) & 1;
            if (!p) p = q;
            else if (*p != q) return std::nullopt;
        }
        return p;
    }

    // Sign of sorting the index word (s ascending)(t ascending), s and t disjoint.
    static int merge_sign(Blade s, Blade t) {
        int inversions = 0;
        for (int i = 1; i <= kDim; ++i)
            if (blade_has(t, i))
                inversions += std::popcount(static_cast<unsigned>(s) >> i);
        return (inversions & 1) ? -1 : 1;
    }

private:
    std::map<Blade, C> terms_;
};

using ExteriorElement = BasicExterior<Rat>;

// Canonical text form: terms ordered by (degree, lex), e.g. "e5-e12357".
std::string to_string(const ExteriorElement& x);

// Vector in V14 = E + F: sum a_i e_i + sum b_i f_i.
struct Vector14 {
    std::array<Rat, 7> a{}; // e-coefficients
    std::array<Rat, 7> b{}; // f-coefficients

    static Vector14 e(int i);
    static Vector14 f(int i);
    Vector14 operator+(const Vector14& o) const;
    Vector14 operator-(const Vector14& o) const;
    Vector14 operator*(const Rat& s) const;
    bool operator==(const Vector14& o) const { return a == o.a && b == o.b; }
    bool is_zero() const;

    RatVec coords() const;                  // (a1..a7, b1..b7)
    static Vector14 from_coords(const RatVec& v);
};

std::string to_string(const Vector14& v);

// Subspace of V14, stored as an RREF basis in (a|b) coordinates.
class Subspace14 {
public:
    Subspace14() = default;
    explicit Subspace14(const std::vector<Vector14>& vectors);

    int dimension() const { return static_cast<int>(rows_.size()); }
    std::vector<Vector14> basis() const;
    bool contains(const Vector14& v) const;
    bool operator==(const Subspace14& o) const { return rows_ == o.rows_; }

    static Subspace14 from_rows(RatMat rows); // rows already in V14 coordinates
    const RatMat& rows() const { return rows_; }

    Subspace14 intersect(const Subspace14& o) const;
    bool is_isotropic() const; // B vanishes on all basis pairs

private:
    RatMat rows_; // RREF, no zero rows
};

// Clifford product v.x (total; the result parity is opposite to x's).
ExteriorElement clifford_mul(const Vector14& v, const ExteriorElement& x);

// Polarized Clifford form: u.(v.x) + v.(u.x) = 2 B(u,v) x.
Rat clifford_form_B(const Vector14& u, const Vector14& v);

// alpha sign on degree k: (-1)^{k(k-1)/2}.
inline int alpha_sign(int degree) {
    return ((degree * (degree - 1) / 2) & 1) ? -1 : 1;
}

// Duality pairing <x, y> for x odd, y even: top coefficient of alpha(x)^y.
Rat pairing(const ExteriorElement& odd, const ExteriorElement& even);

// Same bilinear form with the even element in the alpha slot; satisfies
// pair_dual(z, u.y) = pairing(u.z, y) for all u in V14 (the adjointness that
// pins alpha) and pair_dual(y, x) = -pairing(x, y).
Rat pair_dual(const ExteriorElement& even, const ExteriorElement& odd);

// Kernel of v -> v.x, computed as an exact nullspace. x must be nonzero.
Subspace14 annihilator(const ExteriorElement& x);

// A nonzero even spinor is pure when its annihilator has dimension 7.
bool is_pure(const ExteriorElement& x);

// dim(annihilator(x) cap <f1..f7>); defined only for pure x.
int f_intersection_dim(const ExteriorElement& x);

} // namespace dcg
