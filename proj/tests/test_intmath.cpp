#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "strata/intmath.hpp"

using namespace strata;

namespace {

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat c(a.size(), Vec(b.empty() ? 0 : b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Int det(Mat a) {  // fraction-free elimination, fine for tiny matrices
    int n = static_cast<int>(a.size());
    Int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0 &&
                (piv < 0 || std::abs(a[i][col]) < std::abs(a[piv][col])))
                piv = i;
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i)
            while (a[i][col] != 0) {
                Int q = a[i][col] / a[col][col];
                for (int j = 0; j < n; ++j) a[i][j] -= q * a[col][j];
                if (a[i][col] != 0) {
                    std::swap(a[i], a[col]);
                    sign = -sign;
                }
            }
    }
    Int d = sign;
    for (int i = 0; i < n; ++i) d *= a[i][i];
    return d;
}

}  // namespace

TEST_CASE("floor division and floor modulus") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(mod_floor(-7, 4) == 1);
    CHECK(mod_floor(7, 4) == 3);
    CHECK(mod_floor(-8, 4) == 0);
}

TEST_CASE("extended gcd produces Bezout coefficients") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> d(-200, 200);
    for (int t = 0; t < 500; ++t) {
        Int a = d(rng), b = d(rng), x, y;
        Int g = exgcd(a, b, x, y);
        CHECK(g == std::gcd(a, b));
        CHECK(a * x + b * y == g);
    }
}

TEST_CASE("smith normal form diagonalizes with unimodular transforms") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Int> d(-6, 6);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
        int rows = dim(rng), cols = dim(rng);
        Mat a(rows, Vec(cols));
        for (auto& row : a)
            for (auto& x : row) x = d(rng);
        SmithForm f = smith_normal_form(a);
        CHECK(std::abs(det(f.u)) == 1);
        CHECK(std::abs(det(f.v)) == 1);
        Mat lhs = mat_mul(mat_mul(f.u, a), f.v);
        CHECK(lhs == f.s);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j) CHECK(f.s[i][j] == 0);
        for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
            if (f.s[i + 1][i + 1] != 0) {
                REQUIRE(f.s[i][i] != 0);
                CHECK(f.s[i + 1][i + 1] % f.s[i][i] == 0);
            }
            CHECK(f.s[i][i] >= 0);
        }
    }
}

TEST_CASE("kernel bases of weight rows") {
    CHECK(kernel_basis({{1, 1}}) == Mat{{1, -1}});
    CHECK(kernel_basis({{2, 3}}) == Mat{{3, -2}});
    CHECK(kernel_basis({{1}}) == Mat{});
    CHECK(kernel_basis({{1, 1, 1}}) == Mat{{1, 0, -1}, {0, 1, -1}});
    // every kernel vector is annihilated
    Mat b = kernel_basis({{4, 6, 10}});
    REQUIRE(b.size() == 2);
    for (const Vec& v : b) CHECK(4 * v[0] + 6 * v[1] + 10 * v[2] == 0);
}

TEST_CASE("hermite normal form is a lattice invariant") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<Int> d(-5, 5);
    for (int t = 0; t < 200; ++t) {
        Mat a(3, Vec(4));
        for (auto& row : a)
            for (auto& x : row) x = d(rng);
        Mat h = hermite_normal_form(a);
        // shuffled, sign-flipped, and row-combined generators give the same HNF
        Mat b = a;
        std::shuffle(b.begin(), b.end(), rng);
        for (auto& row : b)
            if (d(rng) > 0)
                for (auto& x : row) x = -x;
        for (size_t j = 0; j < b[0].size(); ++j) b[0][j] += 2 * b[1][j];
        CHECK(hermite_normal_form(b) == h);
    }
}

TEST_CASE("diophantine solve") {
    auto s = solve_diophantine({{2, 3}}, {1});
    REQUIRE(s.has_value());
    CHECK(2 * (*s)[0] + 3 * (*s)[1] == 1);
    CHECK_FALSE(solve_diophantine({{2, 4}}, {3}).has_value());
    auto t = solve_diophantine({{1, 0, -1}, {0, 2, 2}}, {3, 4});
    REQUIRE(t.has_value());
    CHECK((*t)[0] - (*t)[2] == 3);
    CHECK(2 * (*t)[1] + 2 * (*t)[2] == 4);
}

TEST_CASE("coset reduction lands pivot coordinates in [0, pivot)") {
    Mat h = hermite_normal_form({{2, 0, 1}, {0, 3, 2}});
    std::mt19937 rng(17);
    std::uniform_int_distribution<Int> d(-20, 20);
    for (int t = 0; t < 100; ++t) {
        Vec x = {d(rng), d(rng), d(rng)};
        Vec r = reduce_mod_lattice(x, h);
        CHECK(r[0] >= 0);
        CHECK(r[0] < 2);
        CHECK(r[1] >= 0);
        CHECK(r[1] < 3);
        // difference stays in the lattice
        Vec diff = {x[0] - r[0], x[1] - r[1], x[2] - r[2]};
        Mat stacked = h;
        stacked.push_back(diff);
        CHECK(hermite_normal_form(stacked) == h);
    }
}
