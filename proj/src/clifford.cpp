#include "dcg/clifford.hpp"

#include <algorithm>
#include <sstream>

namespace dcg {

std::string blade_str(Blade s) {
    if (s == 0) return "1";
    std::string out = "e";
    for (int i = 1; i <= kDim; ++i)
        if (blade_has(s, i)) out += static_cast<char>('0' + i);
    return out;
}

bool blade_before(Blade a, Blade b) {
    const int da = blade_degree(a), db = blade_degree(b);
    if (da != db) return da < db;
    // same degree: ascending index tuples compare like the bit patterns read
    // from the low end, so build the tuples explicitly
    for (int i = 1; i <= kDim; ++i) {
        const bool ia = blade_has(a, i), ib = blade_has(b, i);
        if (ia != ib) return ia; // the one containing the smaller index first
    }
    return false;
}

std::string to_string(const ExteriorElement& x) {
    if (x.is_zero()) return "0";
    std::vector<Blade> blades;
    for (const auto& [s, c] : x.terms()) blades.push_back(s);
    std::sort(blades.begin(), blades.end(), blade_before);
    std::string out;
    for (Blade s : blades) {
        const Rat c = x.coeff(s);
        const bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (a != 1 || s == 0) {
            out += a.get_str();
            if (s != 0) out += "*";
        }
        if (s != 0) out += blade_str(s);
    }
    return out;
}

Vector14 Vector14::e(int i) {
    Vector14 v;
    v.a[i - 1] = 1;
    return v;
}

Vector14 Vector14::f(int i) {
    Vector14 v;
    v.b[i - 1] = 1;
    return v;
}

Vector14 Vector14::operator+(const Vector14& o) const {
    Vector14 r;
    for (int i = 0; i < 7; ++i) { r.a[i] = a[i] + o.a[i]; r.b[i] = b[i] + o.b[i]; }
    return r;
}

Vector14 Vector14::operator-(const Vector14& o) const {
    Vector14 r;
    for (int i = 0; i < 7; ++i) { r.a[i] = a[i] - o.a[i]; r.b[i] = b[i] - o.b[i]; }
    return r;
}

Vector14 Vector14::operator*(const Rat& s) const {
    Vector14 r;
    for (int i = 0; i < 7; ++i) { r.a[i] = a[i] * s; r.b[i] = b[i] * s; }
    return r;
}

bool Vector14::is_zero() const {
    for (int i = 0; i < 7; ++i)
        if (a[i] != 0 || b[i] != 0) return false;
    return true;
}

RatVec Vector14::coords() const {
    RatVec v(14);
    for (int i = 0; i < 7; ++i) { v[i] = a[i]; v[7 + i] = b[i]; }
    return v;
}

Vector14 Vector14::from_coords(const RatVec& v) {
    Vector14 r;
    for (int i = 0; i < 7; ++i) { r.a[i] = v[i]; r.b[i] = v[7 + i]; }
    return r;
}

std::string to_string(const Vector14& v) {
    std::string out;
    auto emit = [&out](const Rat& c, char sym, int i) {
        if (c == 0) return;
        const bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (a != 1) { out += a.get_str(); out += "*"; }
        out += sym;
        out += static_cast<char>('0' + i);
    };
    for (int i = 0; i < 7; ++i) emit(v.a[i], 'e', i + 1);
    for (int i = 0; i < 7; ++i) emit(v.b[i], 'f', i + 1);
    return out.empty() ? "0" : out;
}

Subspace14::Subspace14(const std::vector<Vector14>& vectors) {
    for (const Vector14& v : vectors) rows_.push_back(v.coords());
    rref(rows_);
}

Subspace14 Subspace14::from_rows(RatMat rows) {
    Subspace14 s;
    s.rows_ = std::move(rows);
    for (auto& r : s.rows_) r.resize(14, Rat(0));
    rref(s.rows_);
    return s;
}

std::vector<Vector14> Subspace14::basis() const {
    std::vector<Vector14> out;
    out.reserve(rows_.size());
    for (const RatVec& r : rows_) out.push_back(Vector14::from_coords(r));
    return out;
}

bool Subspace14::contains(const Vector14& v) const {
    RatMat m = rows_;
    m.push_back(v.coords());
    return rank(std::move(m)) == dimension();
}

Subspace14 Subspace14::intersect(const Subspace14& o) const {
    Subspace14 s;
    s.rows_ = intersect_row_spaces(rows_, o.rows_, 14);
    return s;
}

bool Subspace14::is_isotropic() const {
    const std::vector<Vector14> vs = basis();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i; j < vs.size(); ++j)
            if (clifford_form_B(vs[i], vs[j]) != 0) return false;
    return true;
}

ExteriorElement clifford_mul(const Vector14& v, const ExteriorElement& x) {
    ExteriorElement r;
    for (int i = 1; i <= kDim; ++i) {
        if (v.a[i - 1] != 0) r = r + x.wedge_index(i) * v.a[i - 1];
        if (v.b[i - 1] != 0) r = r + x.contract_index(i) * v.b[i - 1];
    }
    return r;
}

Rat clifford_form_B(const Vector14& u, const Vector14& v) {
    Rat s(0);
    for (int i = 0; i < 7; ++i) s += u.a[i] * v.b[i] + u.b[i] * v.a[i];
    return s / 2;
}

Rat pairing(const ExteriorElement& odd, const ExteriorElement& even) {
    if (odd.is_zero() || even.is_zero()) return Rat(0);
    if (odd.parity() != std::optional<int>(1))
        throw ParityError("pairing: first argument must be odd");
    if (even.parity() != std::optional<int>(0))
        throw ParityError("pairing: second argument must be even");
    Rat total(0);
    for (const auto& [s, c] : odd.terms()) {
        const Blade comp = static_cast<Blade>(kFullBlade ^ s);
        const Rat d = even.coeff(comp);
        if (d == 0) continue;
        const int sign = alpha_sign(blade_degree(s)) * ExteriorElement::merge_sign(s, comp);
        total += (sign > 0) ? c * d : Rat(-(c * d));
    }
    return total;
}

Rat pair_dual(const ExteriorElement& even, const ExteriorElement& odd) {
    if (even.is_zero() || odd.is_zero()) return Rat(0);
    if (even.parity() != std::optional<int>(0))
        throw ParityError("pair_dual: first argument must be even");
    if (odd.parity() != std::optional<int>(1))
        throw ParityError("pair_dual: second argument must be odd");
    Rat total(0);
    for (const auto& [s, c] : even.terms()) {
        const Blade comp = static_cast<Blade>(kFullBlade ^ s);
        const Rat d = odd.coeff(comp);
        if (d == 0) continue;
        const int sign = alpha_sign(blade_degree(s)) * ExteriorElement::merge_sign(s, comp);
        total += (sign > 0) ? c * d : Rat(-(c * d));
    }
    return total;
}

Subspace14 annihilator(const ExteriorElement& x) {
    if (x.is_zero()) throw ZeroSpinorError("annihilator of the zero spinor");
    // columns: images of e1..e7, f1..f7; rows: all 128 blades
    RatMat m(128, RatVec(14, Rat(0)));
    for (int i = 1; i <= kDim; ++i) {
        const ExteriorElement we = x.wedge_index(i);
        for (const auto& [s, c] : we.terms()) m[s][i - 1] = c;
        const ExteriorElement co = x.contract_index(i);
        for (const auto& [s, c] : co.terms()) m[s][7 + i - 1] = c;
    }
    return Subspace14::from_rows(nullspace(m, 14));
}

bool is_pure(const ExteriorElement& x) {
    if (x.is_zero()) throw ZeroSpinorError("is_pure of the zero spinor");
    if (x.parity() != std::optional<int>(0))
        throw ParityError("is_pure: spinor must be even");
    return annihilator(x).dimension() == 7;
}

int f_intersection_dim(const ExteriorElement& x) {
    if (!is_pure(x)) throw NotPureError("f_intersection_dim: spinor is not pure");
    std::vector<Vector14> fs;
    for (int i = 1; i <= 7; ++i) fs.push_back(Vector14::f(i));
    return annihilator(x).intersect(Subspace14(fs)).dimension();
}

} // namespace dcg
