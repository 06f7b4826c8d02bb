#include "dcg/dg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dcg {

namespace {

ExteriorElement blade_elem(std::initializer_list<int> indices, Rat c = Rat(1)) {
    Blade s = 0;
    for (int i : indices) s |= static_cast<Blade>(1u << (i - 1));
    return ExteriorElement::blade(s, std::move(c));
}

std::vector<Vector14> clifford_basis() {
    std::vector<Vector14> basis;
    for (int i = 1; i <= 7; ++i) basis.push_back(Vector14::e(i));
    for (int i = 1; i <= 7; ++i) basis.push_back(Vector14::f(i));
    return basis;
}

} // namespace

const CanonicalData& canonical_data() {
    static const CanonicalData data = [] {
        CanonicalData d;
        d.z = blade_elem({}) + blade_elem({1, 2, 3, 7}) + blade_elem({4, 5, 6, 7}) +
              blade_elem({1, 2, 3, 4, 5, 6});
        for (const Vector14& u : clifford_basis()) d.lz.push_back(clifford_mul(u, d.z));

        // independence of the 14 translates
        RatMat m;
        for (const ExteriorElement& x : d.lz) {
            RatVec row(128, Rat(0));
            for (const auto& [s, c] : x.terms()) row[s] = c;
            m.push_back(std::move(row));
        }
        if (rank(std::move(m)) != 14)
            throw CheckFailure("canonical_data: the 14 Clifford translates are dependent");

        const Vector14 e7mf7 = Vector14::e(7) - Vector14::f(7);
        const Vector14 e7pf7 = Vector14::e(7) + Vector14::f(7);
        d.v7 = Subspace14({Vector14::e(1), Vector14::e(2), Vector14::e(3),
                           Vector14::f(1), Vector14::f(2), Vector14::f(3), e7mf7});
        d.v7p = Subspace14({Vector14::e(4), Vector14::e(5), Vector14::e(6),
                            Vector14::f(4), Vector14::f(5), Vector14::f(6), e7pf7});
        if (d.v7.dimension() != 7 || d.v7p.dimension() != 7)
            throw CheckFailure("canonical_data: summand dimensions");
        for (const Vector14& u : d.v7.basis())
            for (const Vector14& v : d.v7p.basis())
                if (clifford_form_B(u, v) != 0)
                    throw CheckFailure("canonical_data: summands are not B-orthogonal");
        if (d.v7.intersect(d.v7p).dimension() != 0)
            throw CheckFailure("canonical_data: summands overlap");

        d.n = Subspace14({Vector14::e(1) + Vector14::e(2), Vector14::f(1) - Vector14::f(2)});
        d.np = Subspace14({Vector14::e(4) + Vector14::e(5), Vector14::f(4) - Vector14::f(5)});
        if (!d.n.is_isotropic() || !d.np.is_isotropic())
            throw CheckFailure("canonical_data: null planes are not isotropic");
        if (d.n.intersect(d.v7).dimension() != 2 || d.np.intersect(d.v7p).dimension() != 2)
            throw CheckFailure("canonical_data: null planes not inside the summands");

        d.delta = blade_elem({}) + blade_elem({1, 2, 3});
        d.deltap = blade_elem({}) + blade_elem({4, 5, 6});
        return d;
    }();
    return data;
}

std::vector<std::pair<std::string, std::string>> clifford_table() {
    const CanonicalData& cd = canonical_data();
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 0; i < 14; ++i) {
        const std::string name =
            (i < 7 ? "e" + std::to_string(i + 1) : "f" + std::to_string(i - 6)) + ".z";
        rows.emplace_back(name, to_string(cd.lz[i]));
    }
    return rows;
}

namespace {

// 14 x n matrix of pairings of the translates against the given even spinors.
RatMat lz_pairing_matrix(const std::vector<ExteriorElement>& columns) {
    const CanonicalData& cd = canonical_data();
    RatMat m(14, RatVec(columns.size(), Rat(0)));
    for (int r = 0; r < 14; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            m[r][c] = pairing(cd.lz[r], columns[c]);
    return m;
}

} // namespace

int dz_dimension() {
    std::vector<ExteriorElement> blades;
    for (unsigned s = 0; s < 128; ++s)
        if (blade_degree(static_cast<Blade>(s)) % 2 == 0)
            blades.push_back(ExteriorElement::blade(static_cast<Blade>(s)));
    const RatMat m = lz_pairing_matrix(blades);
    return 64 - rank(m);
}

bool in_Dz(const ExteriorElement& y) {
    const CanonicalData& cd = canonical_data();
    for (const ExteriorElement& l : cd.lz)
        if (pairing(l, y) != 0) return false;
    return true;
}

bool in_DG(const ExteriorElement& y) {
    if (y.is_zero()) throw ZeroSpinorError("in_DG of the zero spinor");
    return is_pure(y) && in_Dz(y);
}

std::pair<int, int> orbit_type(const ExteriorElement& y) {
    if (!in_DG(y)) throw NotInDGError("orbit_type: spinor is not in the section");
    const CanonicalData& cd = canonical_data();
    const Subspace14 ann = annihilator(y);
    return {ann.intersect(cd.v7).dimension(), ann.intersect(cd.v7p).dimension()};
}

std::array<ExteriorElement, 4> lemma8_basis() {
    const ExteriorElement pair1 = blade_elem({1}) + blade_elem({2});
    const ExteriorElement pair2 = blade_elem({4}) + blade_elem({5});
    const ExteriorElement y1 = pair1.wedge(pair2);
    return {y1, y1.wedge(blade_elem({6})).wedge(blade_elem({7})),
            y1.wedge(blade_elem({3})).wedge(blade_elem({7})),
            y1.wedge(blade_elem({3})).wedge(blade_elem({6}))};
}

ExteriorElement lemma8_family(const std::array<Rat, 4>& t) {
    if (t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0)
        throw ZeroSpinorError("lemma8_family: all parameters zero");
    const auto ys = lemma8_basis();
    ExteriorElement y;
    for (int i = 0; i < 4; ++i) y = y + ys[i] * t[i];
    return y;
}

Subspace14 lemma8_annihilator_span(const std::array<Rat, 4>& t) {
    const Rat t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3];
    const Vector14 p3 = Vector14::e(6) * t4 + Vector14::e(7) * t3 - Vector14::f(3) * t1;
    const Vector14 p6 = Vector14::e(3) * t4 - Vector14::e(7) * t2 + Vector14::f(6) * t1;
    const Vector14 p7 = Vector14::e(3) * t3 + Vector14::e(6) * t2 + Vector14::f(7) * t1;
    return Subspace14({Vector14::e(1) + Vector14::e(2), Vector14::f(1) - Vector14::f(2),
                       Vector14::e(4) + Vector14::e(5), Vector14::f(4) - Vector14::f(5),
                       p3, p6, p7});
}

ExteriorElement open_orbit_witness() {
    static const ExteriorElement witness = [] {
        const std::vector<Vector14> graph = {
            Vector14::e(1) + Vector14::e(4), Vector14::e(2) + Vector14::e(5),
            Vector14::e(3) + Vector14::e(6), Vector14::f(1) - Vector14::f(4),
            Vector14::f(2) - Vector14::f(5), Vector14::f(3) - Vector14::f(6),
            Vector14::e(7)};
        std::vector<Blade> even;
        for (unsigned s = 0; s < 128; ++s)
            if (blade_degree(static_cast<Blade>(s)) % 2 == 0)
                even.push_back(static_cast<Blade>(s));
        RatMat m;
        for (const Vector14& v : graph) {
            RatMat block(128, RatVec(64, Rat(0)));
            for (int c = 0; c < 64; ++c) {
                const ExteriorElement img = clifford_mul(v, ExteriorElement::blade(even[c]));
                for (const auto& [s, q] : img.terms()) block[s][c] = q;
            }
            for (auto& row : block) m.push_back(std::move(row));
        }
        const RatMat ker = nullspace(m, 64);
        if (ker.size() != 1)
            throw CheckFailure("open_orbit_witness: annihilated line is not unique");
        ExteriorElement y;
        for (int c = 0; c < 64; ++c) y.add_term(even[c], ker[0][c]);
        if (!(annihilator(y) == Subspace14(graph)))
            throw CheckFailure("open_orbit_witness: annihilator mismatch");
        return y;
    }();
    return witness;
}

std::string TorusWeight::str() const {
    std::ostringstream os;
    os << "(" << a1 << "," << a2 << "|" << b1 << "," << b2 << ")";
    return os.str();
}

TorusWeight blade_weight(Blade s) {
    // e1,e2,e3 -> alpha1, alpha2, -alpha1-alpha2; e4,e5,e6 the primed copy;
    // e7 has weight zero.
    static const TorusWeight gen[7] = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {-1, -1, 0, 0},
        {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, -1},
        {0, 0, 0, 0},
    };
    TorusWeight w;
    for (int i = 1; i <= 7; ++i)
        if (blade_has(s, i)) w = w + gen[i - 1];
    return w;
}

std::vector<PolyQ> scalar_chart_purity_equations(const BasicExterior<PolyQ>& x) {
    const PolyQ one(Rat(1));
    if (!(x.coeff(0) == one))
        throw DomainError("scalar_chart_purity_equations: scalar part must be 1");
    const BasicExterior<PolyQ> w2 = x.component(2);
    const BasicExterior<PolyQ> sq = w2.wedge(w2);
    const BasicExterior<PolyQ> cube = sq.wedge(w2);
    const BasicExterior<PolyQ> d4 = x.component(4) - sq * PolyQ(make_rat(1, 2));
    const BasicExterior<PolyQ> d6 = x.component(6) - cube * PolyQ(make_rat(1, 6));
    std::vector<PolyQ> eqs;
    for (const auto& [s, c] : d4.terms()) eqs.push_back(c);
    for (const auto& [s, c] : d6.terms()) eqs.push_back(c);
    return eqs;
}

namespace {

W0Report analyze_w0(const ExteriorElement& u0, const ExteriorElement& u1) {
    W0Report rep;
    rep.chart_base = u0;
    rep.infinity = u1;

    // chart {scalar coordinate != 0}: x(s) = u0 + s u1 with scalar part 1
    BasicExterior<PolyQ> x;
    for (const auto& [s, c] : u0.terms()) x.add_term(s, PolyQ(c));
    const PolyQ svar = PolyQ::variable();
    for (const auto& [s, c] : u1.terms()) x.add_term(s, svar * c);
    const std::vector<PolyQ> eqs = scalar_chart_purity_equations(x);

    PolyQ g;
    for (const PolyQ& e : eqs) {
        rep.equations.push_back(e.str());
        g = PolyQ::gcd(g, e);
    }
    rep.equations_gcd = g.str();
    rep.chart_empty = !g.is_zero() && g.degree() == 0;

    // the single remaining point [0:1]
    rep.infinity_ann_dim = annihilator(u1).dimension();
    rep.no_pure_spinor = rep.chart_empty && rep.infinity_ann_dim != 7;
    return rep;
}

} // namespace

FixedPointReport fixed_points() {
    FixedPointReport rep;

    std::map<TorusWeight, std::vector<Blade>> spaces;
    for (unsigned s = 0; s < 128; ++s) {
        const Blade b = static_cast<Blade>(s);
        if (blade_degree(b) % 2 == 0) spaces[blade_weight(b)].push_back(b);
    }

    for (const auto& [w, blades] : spaces) {
        std::vector<ExteriorElement> cols;
        for (Blade b : blades) cols.push_back(ExteriorElement::blade(b));
        const RatMat constraints = lz_pairing_matrix(cols);
        const RatMat kernel = nullspace(constraints, static_cast<int>(blades.size()));

        if (w.is_zero()) {
            // W0 = <1 + e123456, e1237 + e4567>; solve purity on it exactly
            if (kernel.size() != 2)
                throw CheckFailure("fixed_points: zero-weight intersection is not a plane");
            ExteriorElement u0, u1;
            for (std::size_t r = 0; r < 2; ++r) {
                ExteriorElement v;
                for (std::size_t c = 0; c < blades.size(); ++c)
                    v.add_term(blades[c], kernel[r][c]);
                if (v.coeff(0) != 0) {
                    const Rat inv = Rat(1) / v.coeff(0);
                    u0 = v * inv;
                } else {
                    u1 = v;
                }
            }
            if (u0.is_zero() || u1.is_zero())
                throw CheckFailure("fixed_points: unexpected zero-weight basis");
            rep.w0 = analyze_w0(u0, u1);
            continue;
        }

        if (kernel.empty()) continue; // weight space entirely outside the section
        if (kernel.size() != 1)
            throw CheckFailure("fixed_points: nonzero weight meets the section in a plane");
        ExteriorElement candidate;
        for (std::size_t c = 0; c < blades.size(); ++c)
            candidate.add_term(blades[c], kernel[0][c]);

        if (in_DG(candidate)) {
            if (candidate.terms().size() != 1)
                throw CheckFailure("fixed_points: fixed point is not a coordinate blade");
            rep.points.push_back(candidate.terms().begin()->first);
        } else {
            RejectedLine line;
            line.weight = w;
            line.spinor = candidate;
            line.ann_dim = annihilator(candidate).dimension();
            rep.rejected.push_back(std::move(line));
        }
    }

    std::sort(rep.points.begin(), rep.points.end(), blade_before);
    return rep;
}

std::vector<Blade> expected_fixed_points() {
    std::vector<Blade> out;
    auto blade_of = [](std::initializer_list<int> idx) {
        Blade s = 0;
        for (int i : idx) s |= static_cast<Blade>(1u << (i - 1));
        return s;
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) out.push_back(blade_of({i, j}));
    for (int i = 1; i <= 3; ++i)
        for (int ip = i + 1; ip <= 3; ++ip)
            for (int j = 4; j <= 6; ++j) out.push_back(blade_of({i, ip, j, 7}));
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j)
            for (int jp = j + 1; jp <= 6; ++jp) out.push_back(blade_of({i, j, jp, 7}));
    for (int i = 1; i <= 3; ++i)
        for (int ip = i + 1; ip <= 3; ++ip)
            for (int j = 4; j <= 6; ++j)
                for (int jp = j + 1; jp <= 6; ++jp) out.push_back(blade_of({i, ip, j, jp}));
    std::sort(out.begin(), out.end(), blade_before);
    return out;
}

bool FixedPointGraph::adjacent(Blade a, Blade b) const {
    const auto key = blade_before(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
    return std::find(edges.begin(), edges.end(), key) != edges.end();
}

FixedPointGraph fixed_point_graph() {
    FixedPointGraph g;
    g.vertices = fixed_points().points;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const Blade a = g.vertices[i], b = g.vertices[j];
            const int da = blade_degree(a), db = blade_degree(b);
            bool edge = false;
            if (da == 2 && db == 4) edge = (a & b) == a;
            else if (da == 4 && db == 2) edge = (a & b) == b;
            else if (da == 4 && db == 4) edge = blade_degree(a & b) == 3;
            if (edge) g.edges.emplace_back(blade_before(a, b) ? std::make_pair(a, b)
                                                              : std::make_pair(b, a));
        }
    }
    return g;
}

CharacterReport restrict_character() {
    CharacterReport rep;
    for (unsigned s = 0; s < 128; ++s) {
        const Blade b = static_cast<Blade>(s);
        if (blade_degree(b) % 2 == 0) rep.actual[blade_weight(b)] += 1;
    }
    // weights of V7: 0, +-alpha_i; same for the primed copy
    std::vector<TorusWeight> v7w = {{0, 0, 0, 0}, {1, 0, 0, 0},  {0, 1, 0, 0},
                                    {-1, -1, 0, 0}, {-1, 0, 0, 0}, {0, -1, 0, 0},
                                    {1, 1, 0, 0}};
    std::vector<TorusWeight> v7pw;
    for (const TorusWeight& w : v7w) v7pw.push_back({w.b1, w.b2, w.a1, w.a2}); // swap copies
    for (const TorusWeight& u : v7w)
        for (const TorusWeight& v : v7pw) rep.expected[u + v] += 1;
    for (const TorusWeight& u : v7w) rep.expected[u] += 1;
    for (const TorusWeight& v : v7pw) rep.expected[v] += 1;
    rep.expected[TorusWeight{}] += 1;
    rep.equal = (rep.actual == rep.expected);
    return rep;
}

} // namespace dcg
