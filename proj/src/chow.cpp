#include "dcg/chow.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace dcg {

namespace {

constexpr int kTopGrade = 21;

gamma::Parts to_parts(const StrictPartition& mu) { return mu.parts; }

StrictPartition from_parts(const gamma::Parts& p) { return StrictPartition(p); }

} // namespace

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || parts[i] > 6)
            throw DomainError("StrictPartition: part " + std::to_string(parts[i]) +
                              " outside 1..6");
        if (i > 0 && parts[i] >= parts[i - 1])
            throw DomainError("StrictPartition: parts must strictly decrease");
    }
}

int StrictPartition::grade() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

StrictPartition StrictPartition::complement() const {
    std::vector<int> c;
    for (int p = 6; p >= 1; --p)
        if (std::find(parts.begin(), parts.end(), p) == parts.end()) c.push_back(p);
    return StrictPartition(std::move(c));
}

std::string StrictPartition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

ChowClass ChowClass::basis(const StrictPartition& mu, Int coeff) {
    ChowClass c(mu.grade());
    c.add_term(mu, coeff);
    return c;
}

Int ChowClass::coeff(const StrictPartition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Int(0) : it->second;
}

void ChowClass::add_term(const StrictPartition& mu, const Int& c) {
    if (c == 0) return;
    if (terms_.empty()) grade_ = mu.grade();
    else if (mu.grade() != grade_)
        throw GradeError("ChowClass: mixing grades " + std::to_string(grade_) +
                         " and " + std::to_string(mu.grade()));
    Int& slot = terms_[mu];
    slot += c;
    if (slot == 0) terms_.erase(mu);
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    if (!is_zero() && !o.is_zero() && grade_ != o.grade_)
        throw GradeError("ChowClass: sum of different grades");
    ChowClass r = is_zero() ? o : *this;
    if (!is_zero())
        for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    return *this + o * Int(-1);
}

ChowClass ChowClass::operator*(const Int& s) const {
    ChowClass r(grade_);
    if (s == 0) return r;
    for (const auto& [mu, c] : terms_) r.add_term(mu, c * s);
    return r;
}

bool ChowClass::operator==(const ChowClass& o) const {
    if (is_zero() || o.is_zero()) return terms_ == o.terms_;
    return grade_ == o.grade_ && terms_ == o.terms_;
}

std::string ChowClass::str() const {
    if (terms_.empty()) return "0";
    // order by lex on parts (map order) is stable; print with signs
    std::string out;
    for (const auto& [mu, c] : terms_) {
        const bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (a != 1) { out += a.get_str(); out += "*"; }
        out += "tau" + mu.str();
    }
    return out;
}

ChowClass tau(int p) {
    if (p < 1 || p > 6) throw DomainError("tau: special class index outside 1..6");
    return ChowClass::basis(StrictPartition({p}));
}

ChowClass tau(std::initializer_list<int> parts) {
    return ChowClass::basis(StrictPartition(std::vector<int>(parts)));
}

ChowClass tau_unit() { return ChowClass::basis(StrictPartition{}); }

const std::vector<StrictPartition>& staircase_partitions() {
    static const std::vector<StrictPartition> all = [] {
        std::vector<StrictPartition> v;
        for (unsigned mask = 0; mask < 64; ++mask) {
            std::vector<int> parts;
            for (int p = 6; p >= 1; --p)
                if (mask & (1u << (p - 1))) parts.push_back(p);
            v.push_back(StrictPartition(parts));
        }
        std::sort(v.begin(), v.end(), [](const StrictPartition& a, const StrictPartition& b) {
            if (a.grade() != b.grade()) return a.grade() < b.grade();
            return a.parts < b.parts;
        });
        return v;
    }();
    return all;
}

ChowClass pieri1(const ChowClass& c) {
    ChowClass r(c.grade() + 1);
    for (const auto& [mu, coeff] : c.terms()) {
        // add one to some part, or append a part equal to one
        for (std::size_t i = 0; i < mu.parts.size(); ++i) {
            std::vector<int> nu = mu.parts;
            nu[i] += 1;
            if (nu[i] > 6) continue; // part 7 is zero in the quotient
            if (i > 0 && nu[i] >= nu[i - 1]) continue;
            r.add_term(StrictPartition(nu), coeff);
        }
        if (mu.parts.empty() || mu.parts.back() > 1) {
            std::vector<int> nu = mu.parts;
            nu.push_back(1);
            r.add_term(StrictPartition(nu), coeff);
        }
    }
    return r;
}

namespace {

// Horizontal strip on the ordinary Young diagrams: nu contains mu and the
// skew has at most one box per column, i.e. the interlacing
// nu_1 >= mu_1 >= nu_2 >= mu_2 >= ...
bool is_horizontal_strip(const std::vector<int>& mu, const std::vector<int>& nu) {
    auto mu_at = [&](std::size_t i) { return i < mu.size() ? mu[i] : 0; };
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] < mu_at(i)) return false;
        if (i + 1 < nu.size() && nu[i + 1] > mu_at(i)) return false;
    }
    return mu.size() <= nu.size();
}

// Connected components of the shifted skew diagram nu/mu, where row i
// (1-based) of a strict partition occupies shifted columns i .. lambda_i+i-1.
int shifted_components(const std::vector<int>& mu, const std::vector<int>& nu) {
    auto mu_at = [&](std::size_t i) { return i < mu.size() ? mu[i] : 0; };
    std::set<std::pair<int, int>> boxes; // (row, shifted column)
    for (std::size_t i = 0; i < nu.size(); ++i) {
        const int row = static_cast<int>(i) + 1;
        for (int c = mu_at(i) + row; c <= nu[i] + row - 1; ++c)
            boxes.insert({row, c});
    }
    int components = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& b : boxes) {
        if (seen.count(b)) continue;
        ++components;
        std::vector<std::pair<int, int>> stack{b};
        seen.insert(b);
        while (!stack.empty()) {
            auto [r, c] = stack.back();
            stack.pop_back();
            const std::pair<int, int> nbrs[4] = {{r, c - 1}, {r, c + 1}, {r - 1, c}, {r + 1, c}};
            for (const auto& nb : nbrs) {
                if (boxes.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
    }
    return components;
}

// strict nu containing mu with |nu| = |mu| + p, parts unbounded above
void enumerate_strict_covers(const std::vector<int>& mu, int p,
                             const std::function<void(const std::vector<int>&)>& emit) {
    const int target = std::accumulate(mu.begin(), mu.end(), 0) + p;
    std::vector<int> nu;
    auto rec = [&](auto&& self, std::size_t row, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            // remaining rows of mu must already be exhausted
            if (row >= mu.size()) emit(nu);
            return;
        }
        const int lo = row < mu.size() ? mu[row] : 1;
        for (int part = std::min(remaining, maxpart); part >= lo; --part) {
            nu.push_back(part);
            self(self, row + 1, remaining - part, part - 1);
            nu.pop_back();
        }
    };
    rec(rec, 0, target, target);
}

} // namespace

ChowClass pieri_special_rule(const StrictPartition& mu, int p) {
    ChowClass r(mu.grade() + p);
    enumerate_strict_covers(mu.parts, p, [&](const std::vector<int>& nu) {
        if (!nu.empty() && nu[0] > 6) return; // quotient: part >= 7 dies
        if (!is_horizontal_strip(mu.parts, nu)) return;
        const int comps = shifted_components(mu.parts, nu);
        r.add_term(StrictPartition(nu), pow_int(2, static_cast<unsigned>(comps - 1)));
    });
    return r;
}

ChowClass pieri_special(const ChowClass& c, int p) {
    if (p < 1 || p > 6) throw DomainError("pieri_special: p outside 1..6");
    if (c.grade() + p > kTopGrade && !c.is_zero())
        throw GradeError("pieri_special: grade overflow");
    ChowClass r(c.grade() + p);
    for (const auto& [mu, coeff] : c.terms()) {
        const ChowClass part = pieri_special_rule(mu, p);
        for (const auto& [nu, k] : part.terms()) r.add_term(nu, k * coeff);
    }
#ifndef NDEBUG
    {
        // cross-check against the oracle, term by term
        ChowClass check(c.grade() + p);
        for (const auto& [mu, coeff] : c.terms()) {
            const auto prod = gamma::product_oracle(to_parts(mu), {p});
            for (const auto& [l, k] : prod) check.add_term(from_parts(l), k * coeff);
        }
        assert(check == r && "pieri_special disagrees with the oracle");
    }
#endif
    return r;
}

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<gamma::Parts, gamma::Parts>, std::map<gamma::Parts, Int>> g_product_memo;

const std::map<gamma::Parts, Int>& memoized_product(const gamma::Parts& a,
                                                    const gamma::Parts& b) {
    const auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_product_memo.find(key);
        if (it != g_product_memo.end()) return it->second;
    }
    auto value = gamma::product_oracle(key.first, key.second);
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_product_memo.emplace(key, std::move(value)).first->second;
}

} // namespace

ChowClass multiply(const ChowClass& x, const ChowClass& y) {
    if (x.is_zero() || y.is_zero()) return ChowClass(x.grade() + y.grade());
    if (x.grade() + y.grade() > kTopGrade)
        throw GradeError("multiply: grade overflow");
    // special-class factor: use the Pieri engine (cross-checked in debug)
    if (y.terms().size() == 1) {
        const auto& [nu, c] = *y.terms().begin();
        if (nu.length() == 1) return pieri_special(x, nu.parts[0]) * c;
        if (nu.length() == 0) return x * c;
    }
    if (x.terms().size() == 1) {
        const auto& [mu, c] = *x.terms().begin();
        if (mu.length() == 1) return pieri_special(y, mu.parts[0]) * c;
        if (mu.length() == 0) return y * c;
    }
    ChowClass r(x.grade() + y.grade());
    for (const auto& [mu, cx] : x.terms()) {
        for (const auto& [nu, cy] : y.terms()) {
            const auto& prod = memoized_product(to_parts(mu), to_parts(nu));
            for (const auto& [l, k] : prod) r.add_term(from_parts(l), k * cx * cy);
        }
    }
    return r;
}

Int integrate(const ChowClass& c) {
    if (!c.is_zero() && c.grade() != kTopGrade)
        throw GradeError("integrate: class must have grade 21");
    return c.coeff(StrictPartition({6, 5, 4, 3, 2, 1}));
}

ChowClass class_DG() {
    return tau({6, 1}) + tau({5, 2}) + tau({4, 3}) + tau({4, 2, 1});
}

namespace {

ChowClass chern_expansion(int sign_parity) {
    // sum_{i=0}^{7} c_i(U) tau_1^{7-i}, with c_i(U) = s^i 2 tau_i for
    // i = 1..6, c_0 = 1, c_7(U) = 0 (the dual tautological bundle has a
    // nowhere-vanishing section from any non-isotropic vector).
    std::vector<ChowClass> h(8); // tau_1 powers
    h[0] = tau_unit();
    for (int i = 1; i <= 7; ++i) h[i] = pieri1(h[i - 1]);
    ChowClass total = h[7];
    for (int i = 1; i <= 6; ++i) {
        const int s = (sign_parity && i % 2) ? -2 : 2;
        ChowClass term = tau(i);
        for (int j = 0; j < 7 - i; ++j) term = pieri1(term);
        total = total + term * Int(s);
    }
    return total;
}

} // namespace

ChernCheckResult chern_expansion_check() {
    ChernCheckResult res;
    const ChowClass target = class_DG();
    const ChowClass alternating = chern_expansion(1); // c_i(U) = (-1)^i 2 tau_i
    const ChowClass plain = chern_expansion(0);       // c_i(U) = 2 tau_i
    res.chern_matches = (alternating == target);
    res.rejected_convention_fails = !(plain == target);
    res.surviving_convention = "c_i(U) = (-1)^i * 2*tau_i (i=1..6), c_7(U) = 0";

    // 2 t1 t3^2 + 2 t1^2 t5 - 6 t1^4 t3 + 3 t1^7
    const ChowClass t1 = tau(1), t3 = tau(3), t5 = tau(5);
    const ChowClass t1_2 = multiply(t1, t1);
    const ChowClass t1_4 = multiply(t1_2, t1_2);
    const ChowClass t1_7 = multiply(t1_4, multiply(t1_2, t1));
    const ChowClass poly = multiply(t1, multiply(t3, t3)) * Int(2)
                         + multiply(t1_2, t5) * Int(2)
                         - multiply(t1_4, t3) * Int(6)
                         + t1_7 * Int(3);
    res.polynomial_matches = (poly == target);
    return res;
}

int pieri_calibration() {
    int checked = 0;
    for (const StrictPartition& mu : staircase_partitions()) {
        for (int p = 1; p <= 6; ++p) {
            if (mu.grade() + p > kTopGrade) continue;
            const ChowClass rule = pieri_special_rule(mu, p);
            ChowClass oracle(mu.grade() + p);
            for (const auto& [l, k] : gamma::product_oracle(to_parts(mu), {p}))
                oracle.add_term(from_parts(l), k);
            if (!(rule == oracle))
                throw CheckFailure("pieri_calibration: rule disagrees with oracle on tau" +
                                   mu.str() + " * tau_" + std::to_string(p) +
                                   ": rule " + rule.str() + " vs oracle " + oracle.str());
            ++checked;
        }
    }
    return checked;
}

Int deg_DG() {
    ChowClass c = class_DG();
    for (int i = 0; i < 14; ++i) c = pieri1(c);
    return integrate(c);
}

} // namespace dcg
