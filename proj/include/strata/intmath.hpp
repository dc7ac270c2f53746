#pragma once

// Exact integer linear algebra used throughout: extended gcd, Smith normal
// form with unimodular transforms, row-style Hermite normal form, kernel
// bases, and Diophantine solving. Matrices are dense vectors of rows; all
// sizes in this project are tiny, so simple elimination is enough.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace strata {

using Int = long long;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

// Returns g = gcd(a, b) >= 0 and Bezout coefficients with a*x + b*y = g.
inline Int exgcd(Int a, Int b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return std::abs(a);
    }
    Int x1, y1;
    Int g = exgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Int gcd_vec(const Vec& v) {
    Int g = 0;
    for (Int a : v) g = std::gcd(g, a);
    return g;
}

inline Mat identity_mat(int n) {
    Mat e(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) e[i][i] = 1;
    return e;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    Vec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

struct SmithForm {
    Mat u;  // rows x rows, unimodular
    Mat s;  // diagonalized matrix, u * input * v == s
    Mat v;  // cols x cols, unimodular
    int rank = 0;
};

// Smith normal form by alternating row/column Euclidean elimination with a
// divisibility fix-up, keeping both transform matrices.
inline SmithForm smith_normal_form(Mat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithForm f;
    f.u = identity_mat(rows);
    f.v = identity_mat(cols);

    auto swap_rows = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(f.u[i], f.u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (int t = 0; t < rows; ++t) std::swap(a[t][i], a[t][j]);
        for (int t = 0; t < cols; ++t) std::swap(f.v[t][i], f.v[t][j]);
    };
    auto add_row = [&](int dst, int src, Int q) {  // row dst += q * row src
        for (int t = 0; t < cols; ++t) a[dst][t] += q * a[src][t];
        for (int t = 0; t < rows; ++t) f.u[dst][t] += q * f.u[src][t];
    };
    auto add_col = [&](int dst, int src, Int q) {  // col dst += q * col src
        for (int t = 0; t < rows; ++t) a[t][dst] += q * a[t][src];
        for (int t = 0; t < cols; ++t) f.v[t][dst] += q * f.v[t][src];
    };
    auto negate_row = [&](int i) {
        for (int t = 0; t < cols; ++t) a[i][t] = -a[i][t];
        for (int t = 0; t < rows; ++t) f.u[i][t] = -f.u[i][t];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of smallest magnitude as pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    add_row(i, t, -(a[i][t] / a[t][t]));
                    if (a[i][t] != 0) {  // remainder left, continue Euclid
                        swap_rows(i, t);
                        clean = false;
                    }
                }
            for (int j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    add_col(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0) {
                        swap_cols(j, t);
                        clean = false;
                    }
                }
            if (clean) {
                // enforce divisibility of the remaining block by the pivot
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            add_row(t, i, 1);
                            clean = false;
                        }
            }
        }
        if (a[t][t] < 0) negate_row(t);
        ++t;
    }
    f.rank = t;
    f.s = std::move(a);
    return f;
}

// Row-style Hermite normal form: staircase shape, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped. This is
// the canonical basis of the row lattice, so equal lattices give equal
// output.
inline Mat hermite_normal_form(Mat rows) {
    if (rows.empty()) return rows;
    int cols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int col = 0; col < cols && r < static_cast<int>(rows.size()); ++col) {
        // Euclid on the entries of this column at or below row r
        while (true) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 &&
                    (piv < 0 || std::abs(rows[i][col]) < std::abs(rows[piv][col])))
                    piv = i;
            if (piv < 0) break;
            std::swap(rows[r], rows[piv]);
            bool done = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0) {
                    Int q = rows[i][col] / rows[r][col];
                    for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                    if (rows[i][col] != 0) done = false;
                }
            if (done) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (int j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][col], rows[r][col]);
            if (q != 0)
                for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r, Vec(cols, 0));
    return rows;
}

// Basis of { x : a x = 0 } as Hermite-reduced rows; empty when the kernel is
// trivial.
inline Mat kernel_basis(const Mat& a) {
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    if (cols == 0) return {};
    SmithForm f = smith_normal_form(a);
    Mat basis;
    for (int j = f.rank; j < cols; ++j) {
        Vec row(cols);
        for (int i = 0; i < cols; ++i) row[i] = f.v[i][j];
        basis.push_back(std::move(row));
    }
    return hermite_normal_form(std::move(basis));
}

// One particular solution of a x = b, or nullopt when none exists.
inline std::optional<Vec> solve_diophantine(const Mat& a, const Vec& b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithForm f = smith_normal_form(a);
    Vec c = mat_vec(f.u, b);
    Vec z(cols, 0);
    for (int i = 0; i < rows; ++i) {
        Int d = (i < cols) ? f.s[i][i] : 0;
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            z[i] = c[i] / d;
        }
    }
    return mat_vec(f.v, z);
}

// Canonical coset representative of x modulo the lattice spanned by
// Hermite-reduced rows: the pivot coordinates end up in [0, pivot).
inline Vec reduce_mod_lattice(Vec x, const Mat& hnf_rows) {
    for (const Vec& row : hnf_rows) {
        size_t piv = 0;
        while (piv < row.size() && row[piv] == 0) ++piv;
        if (piv == row.size()) continue;
        Int q = floor_div(x[piv], row[piv]);
        if (q != 0)
            for (size_t j = 0; j < x.size(); ++j) x[j] -= q * row[j];
    }
    return x;
}

}  // namespace strata
