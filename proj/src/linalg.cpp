#include "dcg/linalg.hpp"

#include <cassert>

namespace dcg {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r) {
            if (m[r][col] != 0) { piv = r; break; }
        }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        const Rat lead = m[row][col];
        for (int c = col; c < ncols; ++c) m[row][c] /= lead;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    // drop zero rows
    while (!m.empty()) {
        bool zero = true;
        for (const Rat& q : m.back())
            if (q != 0) { zero = false; break; }
        if (!zero) break;
        m.pop_back();
    }
    return pivots;
}

int rank(RatMat m) {
    return static_cast<int>(rref(m).size());
}

RatMat nullspace(const RatMat& m, int ncols) {
    RatMat a = m;
    for (auto& r : a) r.resize(ncols, Rat(0));
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;

    RatMat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
    assert(m.size() == b.size());
    const int nrows = static_cast<int>(m.size());
    const int ncols = nrows > 0 ? static_cast<int>(m[0].size()) : 0;
    RatMat aug = m;
    for (int r = 0; r < nrows; ++r) aug[r].push_back(b[r]);
    std::vector<int> pivots = rref(aug);
    RatVec x(ncols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == ncols) return std::nullopt; // pivot in the rhs column
        x[pivots[i]] = aug[i][ncols];
    }
    return x;
}

RatMat intersect_row_spaces(const RatMat& a, const RatMat& b, int ncols) {
    // v in A cap B  <=>  v = x.A = y.B; solve [A^T | -B^T] kernel.
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    if (na == 0 || nb == 0) return {};
    RatMat sys(ncols, RatVec(na + nb, Rat(0)));
    for (int c = 0; c < ncols; ++c) {
        for (int i = 0; i < na; ++i) sys[c][i] = a[i][c];
        for (int j = 0; j < nb; ++j) sys[c][na + j] = -b[j][c];
    }
    RatMat ker = nullspace(sys, na + nb);
    RatMat result;
    for (const RatVec& k : ker) {
        RatVec v(ncols, Rat(0));
        for (int i = 0; i < na; ++i)
            for (int c = 0; c < ncols; ++c) v[c] += k[i] * a[i][c];
        result.push_back(std::move(v));
    }
    rref(result);
    return result;
}

} // namespace dcg
