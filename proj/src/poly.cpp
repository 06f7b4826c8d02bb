#include "dcg/poly.hpp"

#include <cassert>

namespace dcg {

PolyQ PolyQ::mod(const PolyQ& d) const {
    assert(!d.is_zero());
    PolyQ r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const Rat f = r.leading() / d.leading();
        const int shift = r.degree() - d.degree();
        std::vector<Rat> c = r.coeffs_;
        for (int i = 0; i <= d.degree(); ++i) c[i + shift] -= f * d.coeffs_[i];
        r = PolyQ(std::move(c));
    }
    return r;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) {
        const Rat inv = Rat(1) / a.leading();
        a = a * inv;
    }
    return a;
}

std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (a == 1) && i > 0;
        if (!unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyZ pz_mul(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty()) return {};
    PolyZ c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

PolyZ pz_add(const PolyZ& a, const PolyZ& b) {
    PolyZ c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

PolyZ pz_geometric(int step, int terms) {
    PolyZ p(static_cast<std::size_t>(step) * (terms - 1) + 1, Int(0));
    for (int i = 0; i < terms; ++i) p[static_cast<std::size_t>(i) * step] = 1;
    return p;
}

Int pz_sum(const PolyZ& a) {
    Int s = 0;
    for (const Int& c : a) s += c;
    return s;
}

bool pz_palindromic(const PolyZ& a) {
    std::size_t hi = a.size();
    while (hi > 0 && a[hi - 1] == 0) --hi;
    for (std::size_t i = 0; i < hi; ++i)
        if (a[i] != a[hi - 1 - i]) return false;
    return true;
}

} // namespace dcg
