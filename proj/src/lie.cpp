#include "dcg/lie.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace dcg {

WeightD7 WeightD7::operator+(const WeightD7& o) const {
    WeightD7 r;
    for (int i = 0; i < 7; ++i) r.eps[i] = eps[i] + o.eps[i];
    return r;
}

WeightD7 WeightD7::operator-(const WeightD7& o) const {
    WeightD7 r;
    for (int i = 0; i < 7; ++i) r.eps[i] = eps[i] - o.eps[i];
    return r;
}

WeightD7 WeightD7::operator*(const Rat& s) const {
    WeightD7 r;
    for (int i = 0; i < 7; ++i) r.eps[i] = eps[i] * s;
    return r;
}

std::string WeightD7::str() const {
    std::string s = "(";
    for (int i = 0; i < 7; ++i) {
        if (i) s += ",";
        s += eps[i].get_str();
    }
    return s + ")";
}

WeightD7 rho_d7() {
    WeightD7 r;
    for (int i = 0; i < 7; ++i) r.eps[i] = 6 - i;
    return r;
}

WeightD7 omega_d7(int i) {
    if (i < 1 || i > 7) throw DomainError("omega_d7: index outside 1..7");
    WeightD7 w;
    if (i <= 5) {
        for (int k = 0; k < i; ++k) w.eps[k] = 1;
    } else {
        for (int k = 0; k < 7; ++k) w.eps[k] = make_rat(1, 2);
        if (i == 6) w.eps[6] = make_rat(-1, 2);
    }
    return w;
}

std::string RootD7::str() const {
    std::ostringstream os;
    os << "e" << i << (sign > 0 ? "+" : "-") << "e" << j;
    return os.str();
}

const std::vector<RootD7>& positive_roots_d7() {
    static const std::vector<RootD7> roots = [] {
        std::vector<RootD7> r;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j) {
                r.push_back({i, j, -1});
                r.push_back({i, j, +1});
            }
        return r;
    }();
    return roots;
}

Rat root_pairing(const WeightD7& v, const RootD7& r) {
    return r.sign > 0 ? Rat(v.eps[r.i - 1] + v.eps[r.j - 1])
                      : Rat(v.eps[r.i - 1] - v.eps[r.j - 1]);
}

Rat euler_dim_d7(const WeightD7& lambda) {
    const WeightD7 v = lambda + rho_d7();
    const WeightD7 rho = rho_d7();
    Rat num(1), den(1);
    for (const RootD7& a : positive_roots_d7()) {
        num *= root_pairing(v, a);
        if (num == 0) return Rat(0);
        den *= root_pairing(rho, a);
    }
    return num / den;
}

std::vector<RootD7> zero_pairing_roots(const WeightD7& lambda) {
    const WeightD7 v = lambda + rho_d7();
    std::vector<RootD7> out;
    for (const RootD7& a : positive_roots_d7())
        if (root_pairing(v, a) == 0) out.push_back(a);
    return out;
}

BBWResult bbw_resolve(const WeightD7& lambda) {
    BBWResult res;
    const WeightD7 v = lambda + rho_d7();
    for (const RootD7& a : positive_roots_d7()) {
        if (root_pairing(v, a) == 0) {
            res.singular = true;
            res.witness = a;
            return res;
        }
    }
    // l(w) = number of positive roots with negative pairing
    for (const RootD7& a : positive_roots_d7())
        if (root_pairing(v, a) < 0) ++res.degree;
    // dominant representative: sort absolute values descending; the Weyl
    // group of type D only flips signs in pairs, so an odd count of
    // negatives leaves the smallest-absolute-value coordinate negative
    // (a zero coordinate absorbs the flip invisibly).
    std::array<Rat, 7> abs_vals;
    int negatives = 0;
    for (int i = 0; i < 7; ++i) {
        abs_vals[i] = v.eps[i] < 0 ? Rat(-v.eps[i]) : v.eps[i];
        if (v.eps[i] < 0) ++negatives;
    }
    std::sort(abs_vals.begin(), abs_vals.end(), std::greater<Rat>());
    if (negatives % 2) abs_vals[6] = -abs_vals[6];
    WeightD7 dom;
    dom.eps = abs_vals;
    res.dominant = dom - rho_d7();
    return res;
}

namespace {

// G2 root coordinates: x*alpha + y*beta with alpha short, beta long;
// <alpha,alpha> = 2, <beta,beta> = 6, <alpha,beta> = -3.
long g2_form(long ux, long uy, long vx, long vy) {
    return 2 * ux * vx - 3 * (ux * vy + uy * vx) + 6 * uy * vy;
}

const std::array<std::array<long, 2>, 6> kG2PositiveRoots = {{
    {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2},
}};

} // namespace

Int weyl_dim_g2(int i, int j) {
    if (i < 0 || j < 0) throw DomainError("weyl_dim_g2: negative weight coordinate");
    // omega1 = 2a + b, omega2 = 3a + 2b; lambda + rho with rho = 5a + 3b
    const long vx = 2L * (i + 1) + 3L * (j + 1);
    const long vy = (i + 1) + 2L * (j + 1);
    const long rx = 5, ry = 3;
    Rat dim(1);
    for (const auto& g : kG2PositiveRoots) {
        dim *= make_rat(g2_form(vx, vy, g[0], g[1]), g2_form(rx, ry, g[0], g[1]));
    }
    if (!is_integer(dim) || dim <= 0)
        throw CheckFailure("weyl_dim_g2: non-integral dimension");
    return dim.get_num();
}

WeightD7 theta_weight(int i, int k) {
    if (i < 0 || i > 7) throw DomainError("theta_weight: index outside 0..7");
    const int twist = (i <= 5) ? (k - i) : (k - 5);
    WeightD7 w = omega_d7(7) * Rat(twist);
    if (i >= 1 && i <= 6) w = w + omega_d7(i);
    return w;
}

namespace {

struct DimFormula {
    // numerator factors (k + shift)^exp and an integer denominator
    std::vector<std::pair<int, int>> factors;
    Int denominator;
};

const std::array<DimFormula, 8>& displayed_formulas() {
    static const std::array<DimFormula, 8> fs = [] {
        auto den = [](std::initializer_list<long> xs) {
            Int d = 1;
            for (long x : xs) d *= x;
            return d;
        };
        std::array<DimFormula, 8> a;
        a[0] = {{{1,1},{2,1},{3,2},{4,2},{5,3},{6,3},{7,3},{8,2},{9,2},{10,1},{11,1}},
                den({1,2,9,16,125,216,343,64,81,10,11})};
        a[1] = {{{0,1},{1,1},{2,2},{3,2},{4,3},{5,2},{6,3},{7,2},{8,2},{9,1},{10,1},{11,1}},
                den({9,16,125,36,49,64,81,10,11,12})};
        a[2] = {{{-1,1},{0,1},{1,2},{2,2},{3,2},{4,2},{5,3},{6,2},{7,2},{8,2},{9,1},{11,1}},
                den({2,9,16,25,36,49,64,81,100,11})};
        a[3] = {{{-2,1},{-1,1},{0,2},{1,1},{2,2},{3,2},{4,3},{5,3},{6,2},{7,1},{8,1},{9,1},{10,1}},
                den({2,9,25,36,49,512,81,10,11,12})};
        a[4] = {{{-3,1},{-2,1},{-1,1},{0,1},{1,2},{2,3},{3,3},{4,2},{5,2},{6,1},{7,2},{8,1},{9,1}},
                den({2,3,4,25,216,49,64,81,10,11,12})};
        a[5] = {{{-4,1},{-2,1},{-1,2},{0,2},{1,2},{2,3},{3,2},{4,2},{5,2},{6,2},{7,1},{8,1}},
                den({2,3,4,25,36,49,64,81,100,11,12})};
        a[6] = {{{-4,1},{-3,1},{-2,1},{-1,2},{0,2},{1,3},{2,2},{3,3},{4,2},{5,2},{6,1},{7,1}},
                den({2,3,16,25,216,49,8,81,100,11,12})};
        a[7] = {{{-4,1},{-3,1},{-2,2},{-1,2},{0,3},{1,3},{2,3},{3,2},{4,2},{5,1},{6,1}},
                den({1,2,9,16,125,216,343,64,81,10,11})};
        return a;
    }();
    return fs;
}

} // namespace

Rat displayed_dim_formula(int which, int k) {
    if (which < 0 || which > 7) throw DomainError("displayed_dim_formula: index outside 0..7");
    const DimFormula& f = displayed_formulas()[which];
    Rat num(1);
    for (const auto& [shift, exp] : f.factors)
        for (int e = 0; e < exp; ++e) num *= (k + shift);
    return num / Rat(f.denominator);
}

H0Triple h0_dg(int k) {
    if (k < 0) throw DomainError("h0_dg: negative twist");
    H0Triple t;

    Rat koszul(0);
    for (int i = 0; i <= 7; ++i) {
        const Rat term = euler_dim_d7(theta_weight(i, k));
        koszul += (i % 2) ? -term : term;
    }
    if (!is_integer(koszul)) throw CheckFailure("h0_dg: non-integral Koszul sum");
    t.koszul = koszul.get_num();

    const Rat closed = hilbert_polynomial().eval(Rat(k));
    if (!is_integer(closed)) throw CheckFailure("h0_dg: non-integral closed form");
    t.closed_form = closed.get_num();

    // sum over m + i + 2j = k with m >= 0 picking up the slack
    Int g2(0);
    for (int j = 0; 2 * j <= k; ++j)
        for (int i = 0; i + 2 * j <= k; ++i) {
            const Int d = weyl_dim_g2(i, j);
            g2 += d * d;
        }
    t.g2_sum = g2;
    return t;
}

PolyQ hilbert_polynomial() {
    static const PolyQ h = [] {
        // (k+1)(k+2)(k+3)^2(k+4)^2(k+5)(k+6) / (2^10 3^5 5^2 7^2 11) * P(k)
        const PolyQ k = PolyQ::variable();
        auto lin = [&](int c) { return k + PolyQ(Rat(c)); };
        PolyQ pre = lin(1) * lin(2) * lin(3) * lin(3) * lin(4) * lin(4) * lin(5) * lin(6);
        PolyQ p;
        const long coeffs[7] = {388080, 634858, 438545, 163184, 34441, 3906, 186};
        std::vector<Rat> pc(7);
        for (int i = 0; i < 7; ++i) pc[i] = coeffs[i];
        p = PolyQ(pc);
        Int den = pow_int(2, 10) * pow_int(3, 5) * 25 * 49 * 11;
        return pre * p * make_rat(Int(1), den);
    }();
    return h;
}

Int degree_from_hilbert() {
    const PolyQ h = hilbert_polynomial();
    if (h.degree() != 14) throw CheckFailure("degree_from_hilbert: Hilbert polynomial degree");
    const Rat lead = h.leading() * Rat(factorial(14));
    if (!is_integer(lead)) throw CheckFailure("degree_from_hilbert: non-integral degree");
    return lead.get_num();
}

RigidityReport rigidity_suite() {
    RigidityReport rep;
    auto eps_sum = [](int from, int to) {
        WeightD7 w;
        for (int i = from; i <= to; ++i) w.eps[i - 1] = 1;
        return w;
    };
    auto make_case = [&](const std::string& name, WeightD7 lam, int k, int wi, int wj) {
        RigidityCase c;
        c.name = name;
        c.weight = lam - omega_d7(7) * Rat(k);
        c.listed_witness = RootD7{wi, wj, +1};
        const BBWResult r = bbw_resolve(c.weight);
        c.singular = r.singular;
        const std::vector<RootD7> zeros = zero_pairing_roots(c.weight);
        c.witness_listed =
            std::find(zeros.begin(), zeros.end(), c.listed_witness) != zeros.end();
        if (!c.singular)
            throw CheckFailure("rigidity_suite: weight " + name + " = " + c.weight.str() +
                               " is not singular");
        rep.cases.push_back(c);
    };

    // lambda_k = eps_1 + ... + eps_{k+2}, k = 1..5
    const std::array<std::pair<int, int>, 5> lam_wit = {{{6, 7}, {5, 7}, {5, 7}, {4, 7}, {5, 6}}};
    for (int k = 1; k <= 5; ++k)
        make_case("lambda_" + std::to_string(k), eps_sum(1, k + 2), k,
                  lam_wit[k - 1].first, lam_wit[k - 1].second);

    // mu_k = 2 eps_1 + eps_2 + ... + eps_{k+1}, k = 1..6
    const std::array<std::pair<int, int>, 6> mu_wit = {{{6, 7}, {5, 7}, {5, 6}, {4, 7}, {3, 7}, {3, 7}}};
    for (int k = 1; k <= 6; ++k) {
        WeightD7 w = eps_sum(1, k + 1);
        w.eps[0] = 2;
        make_case("mu_" + std::to_string(k), w, k, mu_wit[k - 1].first, mu_wit[k - 1].second);
    }

    // nu_k = 2 eps_1 + 2 eps_2 + eps_3 + ... + eps_k, k = 2..7
    const std::array<std::pair<int, int>, 6> nu_wit = {{{5, 7}, {5, 6}, {4, 7}, {3, 7}, {4, 6}, {3, 6}}};
    for (int k = 2; k <= 7; ++k) {
        WeightD7 w = eps_sum(1, k);
        w.eps[0] = 2;
        w.eps[1] = 2;
        make_case("nu_" + std::to_string(k), w, k, nu_wit[k - 2].first, nu_wit[k - 2].second);
    }

    const BBWResult w2 = bbw_resolve(omega_d7(2));
    rep.omega2_degree0 = !w2.singular && w2.degree == 0;
    return rep;
}

namespace {

using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

std::array<long, 2> mat_apply(const Mat2& m, const std::array<long, 2>& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

bool is_negative_root(const std::array<long, 2>& v) {
    for (const auto& g : kG2PositiveRoots)
        if (v[0] == -g[0] && v[1] == -g[1]) return true;
    return false;
}

} // namespace

G2WeylData g2_weyl() {
    // s_alpha: x a + y b -> (3y - x) a + y b; s_beta: x a + y b -> x a + (x - y) b
    const Mat2 sa = {{{-1, 3}, {0, 1}}};
    const Mat2 sb = {{{1, 0}, {1, -1}}};
    const Mat2 id = {{{1, 0}, {0, 1}}};
    std::vector<Mat2> elems = {id};
    auto contains = [&](const Mat2& m) {
        return std::find(elems.begin(), elems.end(), m) != elems.end();
    };
    for (std::size_t head = 0; head < elems.size(); ++head) {
        const Mat2 cur = elems[head]; // copy: elems may reallocate
        for (const Mat2& gen : {sa, sb}) {
            const Mat2 next = mat_mul(gen, cur);
            if (!contains(next)) elems.push_back(next);
        }
    }
    G2WeylData data;
    data.order = static_cast<int>(elems.size());
    for (const Mat2& w : elems) {
        int len = 0, mlen = 0;
        for (std::size_t g = 0; g < kG2PositiveRoots.size(); ++g) {
            const auto img = mat_apply(w, {kG2PositiveRoots[g][0], kG2PositiveRoots[g][1]});
            if (is_negative_root(img)) {
                ++len;
                if (g < 2) ++mlen; // alpha and beta are the first two entries
            }
        }
        data.length.push_back(len);
        data.simple_length.push_back(mlen);
    }
    return data;
}

namespace {

void check_sequence(const PolyZ& got, const std::vector<long>& expected,
                    const std::string& name) {
    const std::size_t n = expected.size();
    for (std::size_t i = 0; i < std::max(n, got.size()); ++i) {
        const Int g = i < got.size() ? got[i] : Int(0);
        const Int e = i < n ? Int(expected[i]) : Int(0);
        if (g != e)
            throw CheckFailure("betti_suite: " + name + " mismatch at index " +
                               std::to_string(i) + ": got " + g.get_str() +
                               ", expected " + e.get_str());
    }
}

} // namespace

BettiData betti_suite() {
    BettiData d;

    // (a) wonderful compactification: b_{2i} = #{(u,v) : l(u)+l(v)+m(v) = i}
    const G2WeylData w = g2_weyl();
    if (w.order != 12) throw CheckFailure("betti_suite: |W(G2)| != 12");
    PolyZ lgen(7, Int(0)), ggen(9, Int(0));
    for (int i = 0; i < w.order; ++i) {
        lgen[w.length[i]] += 1;
        ggen[w.length[i] + w.simple_length[i]] += 1;
    }
    d.wonderful = pz_mul(lgen, ggen);
    check_sequence(d.wonderful,
                   {1, 2, 4, 8, 12, 16, 19, 20, 19, 16, 12, 8, 4, 2, 1}, "wonderful");
    d.wonderful_sum = pz_sum(d.wonderful);
    if (d.wonderful_sum != 144)
        throw CheckFailure("betti_suite: wonderful Betti sum is not 144");

    // (b) blowup relation: wonderful = DG + (T + T^2 + T^3) * P(Q5)^2
    const PolyZ q5 = pz_geometric(1, 6);
    const PolyZ bundle = pz_mul(PolyZ{Int(0), Int(1), Int(1), Int(1)}, pz_mul(q5, q5));
    PolyZ dg(d.wonderful.size(), Int(0));
    for (std::size_t i = 0; i < dg.size(); ++i)
        dg[i] = d.wonderful[i] - (i < bundle.size() ? bundle[i] : Int(0));
    d.dg = dg;
    d.dg_product = pz_mul(pz_geometric(1, 6), [] {
        PolyZ p(10, Int(0));
        for (int e : {0, 3, 4, 5, 6, 9}) p[e] = 1;
        return p;
    }());
    check_sequence(d.dg, {1, 1, 1, 2, 3, 4, 4, 4, 4, 4, 3, 2, 1, 1, 1}, "dg");
    check_sequence(d.dg_product, {1, 1, 1, 2, 3, 4, 4, 4, 4, 4, 3, 2, 1, 1, 1},
                   "dg_product");
    d.dg_sum = pz_sum(d.dg);
    if (d.dg_sum != 36) throw CheckFailure("betti_suite: DG Betti sum is not 36");

    // (c) the 26-dimensional variety of isotropic 4-planes
    const PolyZ sg_a = pz_geometric(1, 5);      // (1 - t^10)/(1 - t^2)
    const PolyZ sg_b = pz_mul(PolyZ{Int(1), Int(0), Int(0), Int(1)},
                              PolyZ{Int(1), Int(0), Int(0), Int(1)}); // (1+t^6)^2
    PolyZ inner = pz_mul(pz_geometric(2, 4), [] { // (1 - t^16)/(1 - t^4) * (...)
        PolyZ p(11, Int(0));
        for (int e : {0, 4, 5, 6, 10}) p[e] = 1;
        return p;
    }());
    PolyZ t16(9, Int(0));
    t16[8] = 1;
    inner = pz_add(inner, t16);
    d.sg = pz_mul(sg_a, pz_mul(sg_b, inner));
    check_sequence(d.sg,
                   {1, 1, 2, 4, 6, 8, 12, 16, 20, 25, 29, 33, 35, 36,
                    35, 33, 29, 25, 20, 16, 12, 8, 6, 4, 2, 1, 1}, "sg");
    d.sg_chi = pz_sum(d.sg);
    if (d.sg_chi != 420) throw CheckFailure("betti_suite: chi(SG) is not 420");

    if (!pz_palindromic(d.wonderful) || !pz_palindromic(d.dg) || !pz_palindromic(d.sg))
        throw CheckFailure("betti_suite: non-palindromic Poincare polynomial");
    for (const PolyZ* p : {&d.wonderful, &d.dg, &d.sg})
        for (const Int& c : *p)
            if (c < 0) throw CheckFailure("betti_suite: negative Betti number");

    // (d) degree and Euler-characteristic numerology
    d.deg_q5xq5 = Int(4) * binomial(10, 5);
    if (d.deg_q5xq5 != 1008) throw CheckFailure("betti_suite: deg(Q5 x Q5) is not 1008");
    d.chi_y = Int(4 + 2) * Int(4 + 2);
    if (d.chi_y != 36) throw CheckFailure("betti_suite: chi numerology is not 36");
    return d;
}

} // namespace dcg
