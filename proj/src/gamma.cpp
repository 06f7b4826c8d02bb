#include "dcg/gamma.hpp"

#include "dcg/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dcg {
namespace gamma {

namespace {

std::mutex g_cache_mutex;

std::string parts_str(const Parts& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// weakly decreasing merge of two sorted-descending part lists
Parts merge_parts(const Parts& a, const Parts& b) {
    Parts m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m),
               std::greater<int>());
    return m;
}

void add_scaled(GammaElement& dst, const GammaElement& src, const Rat& s) {
    for (const auto& [m, c] : src) {
        Rat& slot = dst[m];
        slot += c * s;
        if (slot == 0) dst.erase(m);
    }
}

// partitions of d into odd parts, canonical order
std::vector<Parts> odd_partitions(int d) {
    std::vector<Parts> out;
    Parts cur;
    // parts descending, all odd
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) { out.push_back(cur); return; }
        int start = std::min(remaining, maxpart);
        if (start % 2 == 0) --start;
        for (int p = start; p >= 1; p -= 2) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

std::vector<Parts> strict_partitions_impl(int d) {
    std::vector<Parts> out;
    Parts cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) { out.push_back(cur); return; }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

} // namespace

int weight(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_strict(const Parts& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] <= p[i + 1]) return false;
    return p.empty() || p.back() > 0;
}

GammaElement g_add(const GammaElement& a, const GammaElement& b) {
    GammaElement r = a;
    add_scaled(r, b, Rat(1));
    return r;
}

GammaElement g_scale(const GammaElement& a, const Rat& s) {
    if (s == 0) return {};
    GammaElement r;
    for (const auto& [m, c] : a) r[m] = c * s;
    return r;
}

GammaElement g_mul(const GammaElement& a, const GammaElement& b) {
    GammaElement r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Parts key = merge_parts(ma, mb);
            Rat& slot = r[key];
            slot += ca * cb;
            if (slot == 0) r.erase(key);
        }
    }
    return r;
}

const GammaElement& q_one_row(int r) {
    if (r < 0) throw DomainError("q_one_row: negative row");
    // deque: references must stay valid while the cache grows
    static std::deque<GammaElement> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (cache.empty()) cache.push_back(GammaElement{{Parts{}, Rat(1)}}); // Q_0 = 1
    while (static_cast<int>(cache.size()) <= r) {
        const int n = static_cast<int>(cache.size());
        // n Q_n = sum_{k odd <= n} 2 p_k Q_{n-k}
        GammaElement acc;
        for (int k = 1; k <= n; k += 2) {
            GammaElement shifted;
            for (const auto& [m, c] : cache[n - k])
                shifted[merge_parts(m, Parts{k})] = c * 2;
            add_scaled(acc, shifted, Rat(1));
        }
        cache.push_back(g_scale(acc, make_rat(1, n)));
    }
    return cache[r];
}

namespace {

// Q_{(a,b)} with a > b >= 0; Q_{(a,0)} = Q_a.
GammaElement q_two_row(int a, int b) {
    if (b == 0) return q_one_row(a);
    GammaElement acc = g_mul(q_one_row(a), q_one_row(b));
    for (int i = 1; i <= b; ++i) {
        const Rat sign = (i % 2) ? Rat(-2) : Rat(2);
        add_scaled(acc, g_mul(q_one_row(a + i), q_one_row(b - i)), sign);
    }
    return acc;
}

GammaElement pfaffian(const std::vector<std::vector<GammaElement>>& m,
                      std::vector<int> idx) {
    if (idx.empty()) return GammaElement{{Parts{}, Rat(1)}};
    GammaElement acc;
    const int i0 = idx[0];
    for (std::size_t j = 1; j < idx.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        const Rat sign = (j % 2) ? Rat(1) : Rat(-1); // (-1)^j with j 1-based here
        add_scaled(acc, g_mul(m[i0][idx[j]], pfaffian(m, rest)), sign);
    }
    return acc;
}

} // namespace

GammaElement q_lambda(const Parts& lambda) {
    if (!is_strict(lambda)) throw DomainError("q_lambda: partition is not strict");
    static std::map<Parts, GammaElement> cache;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    GammaElement result;
    if (lambda.empty()) {
        result = GammaElement{{Parts{}, Rat(1)}};
    } else if (lambda.size() == 1) {
        result = q_one_row(lambda[0]);
    } else if (lambda.size() == 2) {
        result = q_two_row(lambda[0], lambda[1]);
    } else {
        Parts padded = lambda;
        if (padded.size() % 2) padded.push_back(0);
        const int n = static_cast<int>(padded.size());
        std::vector<std::vector<GammaElement>> m(n, std::vector<GammaElement>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                m[i][j] = q_two_row(padded[i], padded[j]);
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        result = pfaffian(m, idx);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache.emplace(lambda, std::move(result)).first->second;
}

const std::vector<Parts>& strict_partitions(int d) {
    static std::map<int, std::vector<Parts>> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, strict_partitions_impl(d)).first;
    return it->second;
}

namespace {

// Per-degree change-of-basis data: inverse of the (monomials x Q_lambda)
// matrix, so expansion in the Q-basis is one matrix-vector product.
struct DegreeBasis {
    std::vector<Parts> strict;        // column order
    std::map<Parts, int> monomial_index;
    RatMat inverse;                   // strict x monomials
};

const DegreeBasis& degree_basis(int d) {
    static std::map<int, DegreeBasis> cache;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    DegreeBasis db;
    db.strict = strict_partitions_impl(d);
    const std::vector<Parts> monos = odd_partitions(d);
    if (monos.size() != db.strict.size())
        throw OracleIntegrityError("degree_basis: Euler count mismatch at degree " +
                                   std::to_string(d));
    for (std::size_t i = 0; i < monos.size(); ++i) db.monomial_index[monos[i]] = static_cast<int>(i);
    const int n = static_cast<int>(monos.size());

    // A[mono][lambda], augmented with the identity, then Gauss-Jordan.
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (int j = 0; j < n; ++j) {
        const GammaElement q = q_lambda(db.strict[j]);
        for (const auto& [m, c] : q) {
            auto it = db.monomial_index.find(m);
            if (it == db.monomial_index.end())
                throw OracleIntegrityError("degree_basis: stray monomial in Q_lambda");
            aug[it->second][j] = c;
        }
    }
    for (int i = 0; i < n; ++i) aug[i][n + i] = 1;
    const std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw OracleIntegrityError("degree_basis: Q_lambda not a basis at degree " +
                                   std::to_string(d));
    db.inverse.assign(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) db.inverse[i][j] = aug[i][n + j];

    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache.emplace(d, std::move(db)).first->second;
}

} // namespace

std::map<Parts, Rat> expand_in_P(const GammaElement& f, int d) {
    for (const auto& [m, c] : f)
        if (weight(m) != d)
            throw DomainError("expand_in_P: element is not homogeneous of degree " +
                              std::to_string(d));
    std::map<Parts, Rat> out;
    if (f.empty()) return out;
    const DegreeBasis& db = degree_basis(d);
    const int n = static_cast<int>(db.strict.size());
    RatVec v(n, Rat(0));
    for (const auto& [m, c] : f) {
        auto it = db.monomial_index.find(m);
        if (it == db.monomial_index.end())
            throw OracleIntegrityError("expand_in_P: monomial outside Gamma_d");
        v[it->second] = c;
    }
    // Q-coefficients, then rescale: Q_l = 2^{l(l)} P_l.
    for (int i = 0; i < n; ++i) {
        Rat c(0);
        for (int j = 0; j < n; ++j)
            if (db.inverse[i][j] != 0 && v[j] != 0) c += db.inverse[i][j] * v[j];
        if (c == 0) continue;
        const unsigned len = static_cast<unsigned>(db.strict[i].size());
        out[db.strict[i]] = c * Rat(pow_int(2, len));
    }
    // Residual check: reconstruct f from the Q-expansion.
    GammaElement recon;
    for (const auto& [l, c] : out) {
        const unsigned len = static_cast<unsigned>(l.size());
        add_scaled(recon, q_lambda(l), c / Rat(pow_int(2, len)));
    }
    GammaElement diff = g_add(recon, g_scale(f, Rat(-1)));
    if (!diff.empty())
        throw OracleIntegrityError("expand_in_P: nonzero residual at degree " +
                                   std::to_string(d));
    return out;
}

std::map<Parts, Int> product_in_gamma(const Parts& mu, const Parts& nu) {
    if (!is_strict(mu) || !is_strict(nu))
        throw DomainError("product_in_gamma: arguments must be strict");
    const GammaElement prod = g_mul(q_lambda(mu), q_lambda(nu));
    const int d = weight(mu) + weight(nu);
    // Q_mu Q_nu = sum a_l Q_l  =>  P_mu P_nu = sum a_l 2^{l(l)-l(mu)-l(nu)} P_l
    std::map<Parts, Rat> qexp = expand_in_P(prod, d); // P-coefficients of Q_mu Q_nu
    const Rat scale = make_rat(Int(1), pow_int(2, static_cast<unsigned>(mu.size() + nu.size())));
    std::map<Parts, Int> out;
    for (const auto& [l, c] : qexp) {
        const Rat v = c * scale;
        if (!is_integer(v) || v < 0)
            throw OracleIntegrityError("product_in_gamma: non-integral or negative "
                                       "structure constant at " + parts_str(l) +
                                       " in P_" + parts_str(mu) + " * P_" + parts_str(nu));
        if (v != 0) out[l] = v.get_num();
    }
    return out;
}

std::map<Parts, Int> product_oracle(const Parts& mu, const Parts& nu) {
    std::map<Parts, Int> full = product_in_gamma(mu, nu);
    std::map<Parts, Int> out;
    for (const auto& [l, c] : full)
        if (l.empty() || l[0] <= 6) out[l] = c;
    return out;
}

} // namespace gamma
} // namespace dcg
