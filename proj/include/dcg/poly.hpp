#pragma once

// Small dense univariate polynomials: PolyQ over the rationals (used for
// symbolic one-parameter purity equations and the Hilbert polynomial) and
// PolyZ over the integers (Poincare polynomials).

#include "dcg/rational.hpp"

#include <string>
#include <vector>

namespace dcg {

class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(Rat c) { if (c != 0) coeffs_ = {std::move(c)}; }
    explicit PolyQ(std::vector<Rat> cs) : coeffs_(std::move(cs)) { trim(); }

    static PolyQ variable() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rat(0);
    }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    PolyQ operator+(const PolyQ& o) const {
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return PolyQ(std::move(c));
    }
    PolyQ operator-(const PolyQ& o) const {
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
        return PolyQ(std::move(c));
    }
    PolyQ operator*(const PolyQ& o) const {
        if (is_zero() || o.is_zero()) return PolyQ();
        std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        return PolyQ(std::move(c));
    }
    PolyQ operator*(const Rat& s) const {
        std::vector<Rat> c = coeffs_;
        for (Rat& q : c) q *= s;
        return PolyQ(std::move(c));
    }
    bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }

    // Remainder of *this modulo d (d nonzero).
    PolyQ mod(const PolyQ& d) const;

    // Monic gcd; gcd(0,0) = 0.
    static PolyQ gcd(PolyQ a, PolyQ b);

    std::string str(const std::string& var = "s") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

inline bool coeff_is_zero(const PolyQ& p) { return p.is_zero(); }

using PolyZ = std::vector<Int>; // coefficient i of t^i; no trailing-zero guarantee

PolyZ pz_mul(const PolyZ& a, const PolyZ& b);
PolyZ pz_add(const PolyZ& a, const PolyZ& b);
// 1 + t^step + t^{2 step} + ... + t^{(terms-1) step}
PolyZ pz_geometric(int step, int terms);
Int pz_sum(const PolyZ& a);
bool pz_palindromic(const PolyZ& a);

} // namespace dcg
