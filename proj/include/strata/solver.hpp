#pragma once

// Solver for the characteristic-class equation system attached to a Howe
// signature J = (k|m) over a manifold model M and a bundle sector c2:
//
//   degree 2:  sum_i mt_i * alpha_i^(2)            = bockstein_g(xi)  in H^2(M,Z)
//   degree 4:  sum_i m_i * alpha_i^(4) + Q_m(alpha) = c2              in H^4(M,Z)
//
// with mt = m/g the reduced multiplicities, xi in H^1(M,Z_g), and
//
//   Q_a(alpha) = sum_i a_i(a_i-1)/2 * alpha_i^2
//              + sum_{i<j} a_i a_j * alpha_i alpha_j      (cup products).
//
// Degree-4 slots alpha_i^(4) exist only for indices with k_i >= 2 and only
// when dim M == 4 (H^4 vanishes below). Solutions (J; alpha, xi) label the
// orbit types; quotienting by the permutations that preserve the pairs
// (k_i, m_i) yields the stratum catalog.
//
// Method, per solve:
//   * xi ranges over the finite group H^1(M,Z_g); its Bockstein image is
//     pure torsion, so the free part of the degree-2 equation is the
//     homogeneous system sum_i mt_i x_i = 0, solved once by a Smith/Hermite
//     kernel basis; the torsion part is solved per invariant factor by
//     modular enumeration.
//   * the degree-4 equation, when slots exist, is solvable at a given
//     alpha^(2) iff G = gcd{m_i : k_i >= 2} divides c2 - Q_m(alpha^(2));
//     its solutions form a coset of the rank (r*-1) kernel lattice of the
//     restricted weight row. Solvability across the whole free lattice is
//     decided exactly by scanning Q mod G (Q(x + G v) = Q(x) mod G).
//   * without degree-4 slots the closed condition Q_m(alpha^(2)) == c2
//     remains. Infinitude is then reported only when certified by an
//     affine line of solutions (a kernel direction v with Q(v) = 0 that is
//     B-orthogonal to a base solution); emptiness is certified by a
//     finite image scan of Q modulo small moduli where possible.
//
// Listings are deterministic: labels are emitted in canonical sorted order,
// and free coordinates are enumerated within sup-norm `bound` (an internal
// scan budget guards against huge boxes; truncation is never silent, see
// SolutionSet::exact_within_bound and ::note).

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/cohomology.hpp"
#include "strata/howe.hpp"
#include "strata/intmath.hpp"

namespace strata {

struct BundleSector {
    CohClass4 c2;
};

struct OrbitTypeLabel {
    HoweSignature j;
    std::vector<CohClass2> alpha2;  // length r
    Vec alpha4;                     // length r, 0 where k_i == 1 or dim M < 4
    CohClass1ModG xi;               // modulus g(J)

    bool operator==(const OrbitTypeLabel&) const = default;
};

enum class SolutionKind { Empty, Finite, InfiniteFamily };

inline const char* to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::Empty: return "empty";
        case SolutionKind::Finite: return "finite";
        default: return "infinite";
    }
}

// One free integer direction of a solution family: a shift of the free
// parts of alpha^(2) (rows indexed like J) and/or of alpha^(4).
struct FamilyDirection {
    Mat d_alpha2_free;  // r x b2
    Vec d_alpha4;       // length r
};

struct LatticeFamily {
    OrbitTypeLabel base;                  // one verified solution
    std::vector<FamilyDirection> dirs;    // independent free directions
    // When true, every integer combination of dirs added to base solves the
    // system (family_label never fails); when false the degree-4
    // divisibility can exclude individual points, which family_label
    // reports by returning nullopt.
    bool exact = true;
};

struct SolutionSet {
    SolutionKind kind = SolutionKind::Empty;
    // All solutions when Finite; the solutions with free coordinates of
    // sup-norm <= bound when InfiniteFamily. Sorted canonically.
    std::vector<OrbitTypeLabel> labels;
    std::optional<LatticeFamily> family;  // present iff kind == InfiniteFamily
    int family_rank = 0;
    // False when the internal scan budget stopped the bounded listing (or,
    // for a quadratic sector without degree-4 slots, when emptiness could
    // not be certified); the note explains.
    bool exact_within_bound = true;
    std::string note;
};

namespace solver_detail {

inline constexpr Int kScanBudget = 300000;        // free-lattice points per solve
inline constexpr Int kTorsionEnumCap = 1000000;   // tuples per torsion factor
inline constexpr Int kModScanCap = 300000;        // residue points per certificate scan
inline constexpr size_t kInfiniteRepCap = 512;    // listed labels per infinite family

}  // namespace solver_detail

// Weighted degree-2 sum  sum_i a_i alpha_i  in H^2(M,Z).
inline CohClass2 e2(const HoweSignature& j, const Vec& weights,
                    const std::vector<CohClass2>& alpha2, const ManifoldModel& m) {
    if (weights.size() != static_cast<size_t>(j.r()) || alpha2.size() != weights.size())
        throw std::invalid_argument("e2: length mismatch");
    CohClass2 acc = zero2(m);
    for (int i = 0; i < j.r(); ++i) acc = add2(m, acc, scale2(m, weights[i], alpha2[i]));
    return acc;
}

// Degree-4 component  sum_i m_i alpha_i^(4) + Q_m(alpha^(2))  in H^4(M,Z).
inline CohClass4 e4(const HoweSignature& j, const std::vector<CohClass2>& alpha2,
                    const Vec& alpha4, const ManifoldModel& m) {
    if (alpha2.size() != static_cast<size_t>(j.r()) || alpha4.size() != alpha2.size())
        throw std::invalid_argument("e4: length mismatch");
    for (int i = 0; i < j.r(); ++i)
        if (j.k[i] == 1 && alpha4[i] != 0)
            throw std::invalid_argument("e4: alpha4 must vanish where k_i == 1");
    Int total = 0;
    for (int i = 0; i < j.r(); ++i) {
        total += j.m[i] * alpha4[i];
        total += (j.m[i] * (j.m[i] - 1) / 2) * cup22(m, alpha2[i], alpha2[i]).coeff;
        for (int l = i + 1; l < j.r(); ++l)
            total += j.m[i] * j.m[l] * cup22(m, alpha2[i], alpha2[l]).coeff;
    }
    return CohClass4{total};
}

// Checks both equations exactly, plus the redundant identity
// sum_i m_i alpha_i^(2) = g * sum_i mt_i alpha_i^(2) = 0.
inline bool verify_label(const OrbitTypeLabel& L, const ManifoldModel& m,
                         const BundleSector& sector) {
    L.j.validate();
    SignatureDerived d = derived_data(L.j);
    size_t r = static_cast<size_t>(L.j.r());
    if (L.alpha2.size() != r || L.alpha4.size() != r)
        throw std::invalid_argument("verify_label: alpha length mismatch");
    for (const CohClass2& a : L.alpha2)
        if (a.free.size() != static_cast<size_t>(m.b2) ||
            a.tors.size() != static_cast<size_t>(m.torsion_count()))
            throw std::invalid_argument("verify_label: alpha2 coordinate mismatch");
    Vec orders = xi_component_orders(m, d.g);
    if (L.xi.g != d.g || L.xi.comps.size() != orders.size())
        throw std::invalid_argument("verify_label: xi does not live in H^1(M,Z_g)");
    if (m.dim < 4) {
        if (sector.c2.coeff != 0) return false;
        for (Int y : L.alpha4)
            if (y != 0) return false;
    }
    for (int i = 0; i < L.j.r(); ++i)
        if (L.j.k[i] == 1 && L.alpha4[i] != 0) return false;

    if (e2(L.j, d.m_tilde, L.alpha2, m) != bockstein(m, d.g, L.xi)) return false;
    if (e4(L.j, L.alpha2, L.alpha4, m).coeff != sector.c2.coeff) return false;
    CohClass2 em = e2(L.j, L.j.m, L.alpha2, m);
    return em.is_zero();
}

namespace solver_detail {

// Flat alpha encoding used for canonical comparison: free coordinates,
// torsion coordinates, degree-4 coefficient, per index.
inline Vec alpha_key(const OrbitTypeLabel& L, int i) {
    Vec key = L.alpha2[i].free;
    key.insert(key.end(), L.alpha2[i].tors.begin(), L.alpha2[i].tors.end());
    key.push_back(L.alpha4[i]);
    return key;
}

inline Vec label_key(const OrbitTypeLabel& L) {
    Vec key = L.xi.comps;
    for (int i = 0; i < L.j.r(); ++i) {
        Vec a = alpha_key(L, i);
        key.insert(key.end(), a.begin(), a.end());
    }
    return key;
}

inline bool label_less(const OrbitTypeLabel& a, const OrbitTypeLabel& b) {
    return label_key(a) < label_key(b);
}

// Lattice points x = sum lambda_i basis[i] with |x|_inf <= bound, exact via
// staircase pruning on the pivot columns. `offset` shifts the coset.
inline void affine_points_in_box(const Mat& basis, const Vec& offset, Int bound,
                                 std::vector<Vec>& out, Int cap, bool& complete) {
    size_t cols = offset.size();
    Vec x = offset;
    auto rec = [&](auto&& self, size_t row) -> void {
        if (static_cast<Int>(out.size()) > cap) {
            complete = false;
            return;
        }
        if (row == basis.size()) {
            for (Int v : x)
                if (std::abs(v) > bound) return;
            out.push_back(x);
            return;
        }
        size_t piv = 0;
        while (piv < cols && basis[row][piv] == 0) ++piv;
        Int p = basis[row][piv];
        // |x[piv] + lambda * p| <= bound, p > 0 by Hermite form
        Int lo = -floor_div(bound + x[piv], p);
        Int hi = floor_div(bound - x[piv], p);
        for (Int lam = lo; lam <= hi; ++lam) {
            for (size_t c = 0; c < cols; ++c) x[c] += lam * basis[row][c];
            self(self, row + 1);
            for (size_t c = 0; c < cols; ++c) x[c] -= lam * basis[row][c];
            if (!complete && static_cast<Int>(out.size()) > cap) return;
        }
    };
    rec(rec, 0);
    if (static_cast<Int>(out.size()) > cap) {
        out.resize(cap);
        complete = false;
    }
}

// Free configuration: the free parts of alpha^(2) as an r x b2 matrix whose
// columns lie in the kernel of the reduced weight row.
struct FreeScan {
    std::vector<Mat> configs;  // each r x b2
    bool complete = true;
};

inline Int config_q(const HoweSignature& j, const ManifoldModel& m, const Mat& x) {
    Int q = 0;
    auto cup_rows = [&](const Vec& a, const Vec& b) {
        Int c = 0;
        for (Int f = 0; f < m.b2; ++f)
            for (Int f2 = 0; f2 < m.b2; ++f2) c += a[f] * m.intersection_form[f][f2] * b[f2];
        return c;
    };
    if (m.dim < 4) return 0;
    for (int i = 0; i < j.r(); ++i) {
        q += (j.m[i] * (j.m[i] - 1) / 2) * cup_rows(x[i], x[i]);
        for (int l = i + 1; l < j.r(); ++l) q += j.m[i] * j.m[l] * cup_rows(x[i], x[l]);
    }
    return q;
}

// Enumerates column tuples over the per-column point list by increasing
// sup-norm shell, so truncation keeps the smallest representatives.
inline FreeScan scan_free_configs(const HoweSignature& j, const ManifoldModel& m,
                                  const Mat& kernel, Int bound) {
    FreeScan scan;
    int r = j.r();
    if (m.b2 == 0 || kernel.empty()) {
        scan.configs.push_back(Mat(r, Vec(m.b2, 0)));
        return scan;
    }
    std::vector<Vec> points;  // kernel points within the box, r-vectors
    bool points_complete = true;
    affine_points_in_box(kernel, Vec(r, 0), bound, points, kScanBudget, points_complete);
    if (!points_complete) scan.complete = false;
    auto shell = [](const Vec& v) {
        Int s = 0;
        for (Int x : v) s = std::max(s, std::abs(x));
        return s;
    };
    std::sort(points.begin(), points.end(), [&](const Vec& a, const Vec& b) {
        return std::make_pair(shell(a), a) < std::make_pair(shell(b), b);
    });
    Int budget = kScanBudget;
    std::vector<size_t> pick(m.b2, 0);
    Int s = 0;
    for (; s <= bound && budget > 0; ++s) {
        // tuples whose maximal shell is exactly s
        size_t limit = points.size();
        while (limit > 0 && shell(points[limit - 1]) > s) --limit;
        if (limit == 0) continue;
        auto rec = [&](auto&& self, Int col, bool hit) -> void {
            if (budget <= 0) {
                scan.complete = false;
                return;
            }
            if (col == m.b2) {
                if (!hit && s > 0) return;
                --budget;
                Mat x(r, Vec(m.b2, 0));
                for (Int f = 0; f < m.b2; ++f)
                    for (int i = 0; i < r; ++i) x[i][f] = points[pick[f]][i];
                scan.configs.push_back(std::move(x));
                return;
            }
            for (size_t idx = 0; idx < limit; ++idx) {
                pick[col] = idx;
                self(self, col + 1, hit || shell(points[idx]) == s);
                if (budget <= 0) return;
            }
        };
        rec(rec, 0, false);
    }
    if (s <= bound) scan.complete = false;  // budget ended with shells pending
    return scan;
}

}  // namespace solver_detail

// Canonical representative of the permutation class of a label: index pairs
// (k_i, m_i) sorted descending as in canonicalize(), ties broken by the
// encoded alpha key ascending; xi is untouched.
inline OrbitTypeLabel canonical_label(const OrbitTypeLabel& L) {
    int r = L.j.r();
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto ka = std::make_pair(L.j.k[a], L.j.m[a]);
        auto kb = std::make_pair(L.j.k[b], L.j.m[b]);
        if (ka != kb) return ka > kb;
        return solver_detail::alpha_key(L, a) < solver_detail::alpha_key(L, b);
    });
    OrbitTypeLabel out = L;
    for (int i = 0; i < r; ++i) {
        out.j.k[i] = L.j.k[idx[i]];
        out.j.m[i] = L.j.m[idx[i]];
        out.alpha2[i] = L.alpha2[idx[i]];
        out.alpha4[i] = L.alpha4[idx[i]];
    }
    return out;
}

// Deduplicated canonical representatives of a list of labels.
inline std::vector<OrbitTypeLabel> quotient_classes(const std::vector<OrbitTypeLabel>& labels) {
    std::vector<OrbitTypeLabel> out;
    out.reserve(labels.size());
    for (const OrbitTypeLabel& L : labels) out.push_back(canonical_label(L));
    std::sort(out.begin(), out.end(), solver_detail::label_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Same quotient applied to a whole solution set (labels and family base).
inline SolutionSet quotient_classes(SolutionSet s) {
    s.labels = quotient_classes(s.labels);
    if (s.family) s.family->base = canonical_label(s.family->base);
    return s;
}

// Reconstructs the family member at integer coefficients `coeffs` (one per
// direction). Returns nullopt when the degree-4 divisibility fails there.
inline std::optional<OrbitTypeLabel> family_label(const LatticeFamily& family,
                                                  const ManifoldModel& m,
                                                  const BundleSector& sector,
                                                  const Vec& coeffs) {
    if (coeffs.size() != family.dirs.size())
        throw std::invalid_argument("family_label: coefficient count mismatch");
    OrbitTypeLabel L = family.base;
    const HoweSignature& j = L.j;
    for (size_t t = 0; t < family.dirs.size(); ++t)
        for (int i = 0; i < j.r(); ++i)
            for (Int f = 0; f < m.b2; ++f)
                L.alpha2[i].free[f] += coeffs[t] * family.dirs[t].d_alpha2_free[i][f];

    std::vector<int> slots;
    for (int i = 0; i < j.r(); ++i)
        if (j.k[i] > 1) slots.push_back(i);
    if (m.dim == 4 && !slots.empty()) {
        Vec alpha4_zero(j.r(), 0);
        Int q = e4(j, L.alpha2, alpha4_zero, m).coeff;
        Int rhs = sector.c2.coeff - q;
        Vec weights(slots.size());
        for (size_t t = 0; t < slots.size(); ++t) weights[t] = j.m[slots[t]];
        auto part = solve_diophantine({weights}, {rhs});
        if (!part) return std::nullopt;
        Vec y = reduce_mod_lattice(*part, kernel_basis({weights}));
        L.alpha4.assign(j.r(), 0);
        for (size_t t = 0; t < slots.size(); ++t) L.alpha4[slots[t]] = y[t];
        for (size_t t = 0; t < family.dirs.size(); ++t)
            for (int i = 0; i < j.r(); ++i)
                L.alpha4[i] += coeffs[t] * family.dirs[t].d_alpha4[i];
    } else {
        Vec alpha4_zero(j.r(), 0);
        if (e4(j, L.alpha2, alpha4_zero, m).coeff != sector.c2.coeff) return std::nullopt;
        L.alpha4.assign(j.r(), 0);
    }
    if (!verify_label(L, m, sector))
        throw std::logic_error("family_label: reconstructed point fails verification");
    return L;
}

inline SolutionSet solve_system(const HoweSignature& j, const ManifoldModel& m,
                                const BundleSector& sector, Int bound) {
    using namespace solver_detail;
    j.validate();
    m.validate();
    if (bound < 1) throw std::invalid_argument("solve_system: bound must be >= 1");
    if (m.dim < 4 && sector.c2.coeff != 0)
        throw std::invalid_argument("solve_system: sector inconsistent with manifold, "
                                    "c2 must vanish when dim < 4");
    SignatureDerived d = derived_data(j);
    const int r = j.r();
    const Int c2 = sector.c2.coeff;

    std::vector<int> slots;  // indices carrying a degree-4 coordinate
    if (m.dim == 4)
        for (int i = 0; i < r; ++i)
            if (j.k[i] > 1) slots.push_back(i);
    Vec slot_weights(slots.size());
    for (size_t t = 0; t < slots.size(); ++t) slot_weights[t] = j.m[slots[t]];
    const Int big_g = slots.empty() ? 0 : gcd_vec(slot_weights);
    const Mat k4 = slots.empty() ? Mat{} : kernel_basis({slot_weights});
    const int rho4 = slots.empty() ? 0 : static_cast<int>(k4.size());

    const Mat k2 = kernel_basis({d.m_tilde});
    const Int f2_rank = static_cast<Int>(k2.size()) * m.b2;

    // torsion solutions per invariant factor, bucketed by weighted residue
    const int nt = m.torsion_count();
    std::vector<std::vector<std::vector<Vec>>> torsion_by_rhs(nt);
    for (int t = 0; t < nt; ++t) {
        Int dj = m.h1_torsion[t];
        Int count = 1;
        for (int i = 0; i < r; ++i) {
            count *= dj;
            if (count > kTorsionEnumCap)
                throw std::invalid_argument("solve_system: torsion enumeration too large");
        }
        torsion_by_rhs[t].assign(dj, {});
        Vec tup(r, 0);
        while (true) {
            Int s = 0;
            for (int i = 0; i < r; ++i) s += d.m_tilde[i] * tup[i];
            torsion_by_rhs[t][mod_floor(s, dj)].push_back(tup);
            int pos = r - 1;
            while (pos >= 0 && tup[pos] == dj - 1) tup[pos--] = 0;
            if (pos < 0) break;
            ++tup[pos];
        }
    }

    // free part of alpha^(2): xi-independent scan
    FreeScan scan = scan_free_configs(j, m, k2, bound);
    struct Candidate {
        Mat x;      // r x b2 free parts
        Int q;      // Q_m at this point
        Vec y_base; // canonical particular degree-4 solution (slot coords)
        std::vector<Vec> ys;  // in-box degree-4 solutions (slot coords)
    };
    std::vector<Candidate> candidates;
    bool y_complete = true;
    for (Mat& x : scan.configs) {
        Candidate c;
        c.q = config_q(j, m, x);
        c.x = std::move(x);
        if (!slots.empty()) {
            Int rhs = c2 - c.q;
            if (rhs % big_g != 0) continue;
            auto part = solve_diophantine({slot_weights}, {rhs});
            if (!part) continue;  // unreachable: divisibility implies solvable
            c.y_base = reduce_mod_lattice(*part, k4);
            bool complete = true;
            affine_points_in_box(k4, c.y_base, bound, c.ys, kScanBudget, complete);
            if (!complete) y_complete = false;
            std::sort(c.ys.begin(), c.ys.end());
        } else {
            if (c.q != c2) continue;
            c.ys.push_back(Vec(slots.size(), 0));  // single empty slot vector
        }
        candidates.push_back(std::move(c));
    }

    // assemble labels over xi, torsion choices, and candidates
    SolutionSet out;
    Vec xi_orders = xi_component_orders(m, d.g);
    auto make_label = [&](const Vec& xi_comps, const std::vector<Vec>& tors_choice,
                          const Candidate& c, const Vec& y) {
        OrbitTypeLabel L;
        L.j = j;
        L.xi = CohClass1ModG{d.g, xi_comps};
        L.alpha2.reserve(r);
        for (int i = 0; i < r; ++i) {
            Vec tors(nt);
            for (int t = 0; t < nt; ++t) tors[t] = tors_choice[t][i];
            L.alpha2.push_back(make2(m, c.x[i], std::move(tors)));
        }
        L.alpha4.assign(r, 0);
        for (size_t t = 0; t < slots.size(); ++t) L.alpha4[slots[t]] = y[t];
        return L;
    };

    bool rep_capped = false;
    Vec xi(xi_orders.size(), 0);
    while (true) {
        // torsion right-hand sides from the Bockstein of this xi
        bool branch_ok = true;
        std::vector<const std::vector<Vec>*> tchoices(nt);
        for (int t = 0; t < nt; ++t) {
            Int dj = m.h1_torsion[t];
            Int oj = std::gcd(dj, d.g);
            Int rhs = mod_floor((dj / oj) * xi[m.b1 + t], dj);
            tchoices[t] = &torsion_by_rhs[t][rhs];
            if (tchoices[t]->empty()) branch_ok = false;  // cannot happen: gcd(mt)=1
        }
        if (branch_ok) {
            std::vector<Vec> pickt(nt);
            auto rec = [&](auto&& self, int t) -> void {
                if (out.labels.size() >= 4 * kInfiniteRepCap) {
                    rep_capped = true;
                    return;
                }
                if (t == nt) {
                    for (const Candidate& c : candidates)
                        for (const Vec& y : c.ys) {
                            if (out.labels.size() >= 4 * kInfiniteRepCap) {
                                rep_capped = true;
                                return;
                            }
                            out.labels.push_back(make_label(xi, pickt, c, y));
                        }
                    return;
                }
                for (const Vec& choice : *tchoices[t]) {
                    pickt[t] = choice;
                    self(self, t + 1);
                }
            };
            rec(rec, 0);
        }
        size_t pos = xi.size();
        while (pos > 0 && xi[pos - 1] == xi_orders[pos - 1] - 1) xi[--pos] = 0;
        if (pos == 0) break;
        ++xi[pos - 1];
    }

    std::sort(out.labels.begin(), out.labels.end(), label_less);
    out.exact_within_bound = scan.complete && y_complete && !rep_capped;

    // existence, beyond the bounded scan: any surviving candidate is a
    // solvable free configuration even when its degree-4 coset misses the box
    bool exists = !out.labels.empty() || !candidates.empty();
    std::optional<Mat> witness_x;  // a free configuration known to be solvable
    if (!exists && !slots.empty() && f2_rank > 0) {
        // exact decision: Q mod G is periodic with period G in the kernel
        // coordinates, so scan lambda over [0, G)^f2_rank
        Int total = 1;
        bool feasible_scan = true;
        for (Int t = 0; t < f2_rank; ++t) {
            total *= big_g;
            if (total > kModScanCap) {
                feasible_scan = false;
                break;
            }
        }
        if (feasible_scan) {
            Vec lam(f2_rank, 0);
            while (true) {
                Mat x(r, Vec(m.b2, 0));
                for (size_t kk = 0; kk < k2.size(); ++kk)
                    for (Int f = 0; f < m.b2; ++f) {
                        Int l = lam[kk * m.b2 + f];
                        for (int i = 0; i < r; ++i) x[i][f] += l * k2[kk][i];
                    }
                if (mod_floor(c2 - config_q(j, m, x), big_g) == 0) {
                    witness_x = std::move(x);
                    exists = true;
                    break;
                }
                size_t pos = lam.size();
                while (pos > 0 && lam[pos - 1] == big_g - 1) lam[--pos] = 0;
                if (pos == 0) break;
                ++lam[pos - 1];
            }
            if (!exists)
                out.note = "degree-4 divisibility by gcd{m_i : k_i >= 2} = " +
                           std::to_string(big_g) +
                           " fails for every alpha (checked over all residues)";
        } else {
            out.note = "no solutions with free coordinates up to " + std::to_string(bound) +
                       "; existence scan too large, emptiness not certified";
            out.exact_within_bound = false;
        }
    } else if (!exists && slots.empty() && f2_rank > 0 && m.dim == 4) {
        // closed quadratic condition: try finite-image certificates mod D
        bool certified = false;
        for (Int dmod : {2, 3, 4, 5}) {
            Int total = 1;
            bool feasible_scan = true;
            for (Int t = 0; t < f2_rank; ++t) {
                total *= dmod;
                if (total > kModScanCap) {
                    feasible_scan = false;
                    break;
                }
            }
            if (!feasible_scan) break;
            bool hit = false;
            Vec lam(f2_rank, 0);
            while (true) {
                Mat x(r, Vec(m.b2, 0));
                for (size_t kk = 0; kk < k2.size(); ++kk)
                    for (Int f = 0; f < m.b2; ++f) {
                        Int l = lam[kk * m.b2 + f];
                        for (int i = 0; i < r; ++i) x[i][f] += l * k2[kk][i];
                    }
                if (mod_floor(config_q(j, m, x) - c2, dmod) == 0) {
                    hit = true;
                    break;
                }
                size_t pos = lam.size();
                while (pos > 0 && lam[pos - 1] == dmod - 1) lam[--pos] = 0;
                if (pos == 0) break;
                ++lam[pos - 1];
            }
            if (!hit) {
                certified = true;
                out.note = "quadratic condition Q_m(alpha) = c2 unsatisfiable "
                           "(certified modulo " + std::to_string(dmod) + ")";
                break;
            }
        }
        if (!certified) {
            out.note = "no solutions with free coordinates up to " + std::to_string(bound) +
                       "; emptiness not certified";
            out.exact_within_bound = false;
        }
    } else if (!exists) {
        out.note = slots.empty() ? "quadratic condition Q_m(alpha) = c2 has no solution"
                                 : "degree-4 divisibility by gcd{m_i : k_i >= 2} = " +
                                       std::to_string(big_g) + " fails for every alpha";
    }

    if (!exists) {
        out.kind = SolutionKind::Empty;
        return out;
    }

    // base label: least listed label, else constructed from a witness
    OrbitTypeLabel base;
    if (!out.labels.empty()) {
        base = out.labels.front();
        if (!slots.empty()) {
            // normalize the base degree-4 part to the canonical particular
            Vec alpha4_zero(r, 0);
            Int rhs = c2 - e4(j, base.alpha2, alpha4_zero, m).coeff;
            auto part = solve_diophantine({slot_weights}, {rhs});
            Vec y = reduce_mod_lattice(*part, k4);
            base.alpha4.assign(r, 0);
            for (size_t t = 0; t < slots.size(); ++t) base.alpha4[slots[t]] = y[t];
        }
    } else {
        Vec xi0(xi_orders.size(), 0);
        std::vector<Vec> tors0(nt);
        for (int t = 0; t < nt; ++t) tors0[t] = torsion_by_rhs[t][0].front();
        Candidate c;
        if (!candidates.empty()) {
            c = candidates.front();
        } else {
            c.x = *witness_x;
            c.q = config_q(j, m, c.x);
            auto part = solve_diophantine({slot_weights}, {c2 - c.q});
            c.y_base = reduce_mod_lattice(*part, k4);
        }
        base = make_label(xi0, tors0, c, c.y_base);
    }
    if (!verify_label(base, m, sector))
        throw std::logic_error("solve_system: base label fails verification");

    // infinitude and family directions
    std::vector<FamilyDirection> dirs;
    auto kernel_direction = [&](size_t kk, Int f) {
        FamilyDirection fd;
        fd.d_alpha2_free.assign(r, Vec(m.b2, 0));
        fd.d_alpha4.assign(r, 0);
        for (int i = 0; i < r; ++i) fd.d_alpha2_free[i][f] = k2[kk][i];
        return fd;
    };
    bool infinite = false;
    bool family_exact = true;
    if (m.dim < 4 || !slots.empty()) {
        if (f2_rank > 0 || rho4 > 0) {
            infinite = true;
            for (size_t kk = 0; kk < k2.size(); ++kk)
                for (Int f = 0; f < m.b2; ++f) dirs.push_back(kernel_direction(kk, f));
            for (const Vec& row : k4) {
                FamilyDirection fd;
                fd.d_alpha2_free.assign(r, Vec(m.b2, 0));
                fd.d_alpha4.assign(r, 0);
                for (size_t t = 0; t < slots.size(); ++t) fd.d_alpha4[slots[t]] = row[t];
                dirs.push_back(fd);
            }
            family_exact = slots.empty() || big_g == 1;
        }
    } else if (f2_rank > 0) {
        // no degree-4 slots: certify an affine line of solutions through base
        auto q_of = [&](const Mat& x) { return config_q(j, m, x); };
        auto add_mats = [&](const Mat& a, const Mat& b, Int s) {
            Mat c = a;
            for (int i = 0; i < r; ++i)
                for (Int f = 0; f < m.b2; ++f) c[i][f] += s * b[i][f];
            return c;
        };
        Mat base_x(r, Vec(m.b2, 0));
        for (int i = 0; i < r; ++i) base_x[i] = base.alpha2[i].free;
        Int q_base = q_of(base_x);
        auto bilinear = [&](const Mat& a, const Mat& b) {
            return q_of(add_mats(a, b, 1)) - q_of(a) - q_of(b);
        };
        std::vector<Mat> cands;
        for (size_t kk = 0; kk < k2.size(); ++kk)
            for (Int f = 0; f < m.b2; ++f) {
                Mat v(r, Vec(m.b2, 0));
                for (int i = 0; i < r; ++i) v[i][f] = k2[kk][i];
                cands.push_back(v);
            }
        size_t singles = cands.size();
        for (size_t a = 0; a < singles; ++a)
            for (size_t b = a + 1; b < singles; ++b)
                for (Int s : {1, -1}) cands.push_back(add_mats(cands[a], cands[b], s));
        std::vector<Mat> chosen;
        Mat flat;  // independence check rows
        for (const Mat& v : cands) {
            if (q_of(v) != 0 || bilinear(base_x, v) != 0) continue;
            bool ortho = true;
            for (const Mat& w : chosen) ortho = ortho && bilinear(w, v) == 0;
            if (!ortho) continue;
            Vec row;
            for (int i = 0; i < r; ++i) row.insert(row.end(), v[i].begin(), v[i].end());
            Mat stacked = flat;
            stacked.push_back(row);
            if (hermite_normal_form(stacked).size() == flat.size()) continue;  // dependent
            flat = hermite_normal_form(std::move(stacked));
            chosen.push_back(v);
        }
        if (!chosen.empty()) {
            infinite = true;
            for (const Mat& v : chosen) {
                FamilyDirection fd;
                fd.d_alpha2_free = v;
                fd.d_alpha4.assign(r, 0);
                dirs.push_back(fd);
            }
        }
    }

    if (infinite) {
        out.kind = SolutionKind::InfiniteFamily;
        out.family = LatticeFamily{base, dirs, family_exact};
        out.family_rank = static_cast<int>(dirs.size());
        if (rep_capped)
            out.note = "bounded listing truncated at " +
                       std::to_string(out.labels.size()) + " representatives";
    } else {
        out.kind = SolutionKind::Finite;
        if (out.labels.empty())
            out.note = "solutions exist but lie outside coordinate bound " +
                       std::to_string(bound) + "; increase the bound to list them";
        else if (!out.exact_within_bound && out.note.empty())
            out.note = "scan budget exhausted; listing may be incomplete within bound " +
                       std::to_string(bound);
    }
    return out;
}

// One stratum of the classification: a permutation class of signatures with
// its structural data and the quotiented solution set.
struct Stratum {
    HoweSignature j;
    SignatureDerived derived;
    std::vector<HomotopyGroupDescription> pi;
    SolutionSet solutions;
};

// Full catalog over the canonical signature classes of SU(n). The generic
// class (n|1) is always first and always nonempty.
inline std::vector<Stratum> classify(Int n, const ManifoldModel& m,
                                     const BundleSector& sector, Int bound) {
    std::vector<Stratum> out;
    for (const HoweSignature& j : enumerate_classes(n)) {
        Stratum s;
        s.j = j;
        s.derived = derived_data(j);
        s.pi = homotopy_groups(j);
        s.solutions = quotient_classes(solve_system(j, m, sector, bound));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace strata
