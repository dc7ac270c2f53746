#pragma once

// Kinematical-node data for Chern-Simons theory on a closed orientable
// genus-s surface: the charge lattice of reduced degree-2 coefficients, the
// stratum scan over flat center sectors, and the node flag. A stratum is
// flagged nodal by the sufficient criterion "some alpha_i^(2) differs from
// zero"; the converse is not claimed.

#include <boost/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "strata/solver.hpp"

namespace strata {

using Rational = boost::rational<long long>;

// Writing alpha_i^(2) = c_i * gen H^2(Sigma_s), the degree-2 equation
// becomes sum_i mt_i c_i == 0; charges live in that kernel lattice.
struct ChargeVector {
    Vec c;
    bool operator==(const ChargeVector&) const = default;
};

// Hermite-reduced basis of the rank (r-1) lattice of admissible charges.
inline std::vector<ChargeVector> charge_lattice(const HoweSignature& j) {
    j.validate();
    SignatureDerived d = derived_data(j);
    std::vector<ChargeVector> basis;
    for (const Vec& row : kernel_basis({d.m_tilde})) basis.push_back(ChargeVector{row});
    return basis;
}

// The quadratic weight sum_i (m_i / k_i) c_i^2 entering the winding term;
// the 4*pi prefactor is a formatting concern, not stored.
inline Rational node_coefficient(const HoweSignature& j, const Vec& c) {
    if (c.size() != static_cast<size_t>(j.r()))
        throw std::invalid_argument("node_coefficient: charge length mismatch");
    Rational sum(0);
    for (int i = 0; i < j.r(); ++i) sum += Rational(j.m[i], j.k[i]) * c[i] * c[i];
    return sum;
}

struct NodeStratum {
    CohClass1ModG xi;     // flat center sector in H^1(Sigma_s, Z_g) = Z_g^(2s)
    Vec charge;           // length r, sum_i mt_i charge_i == 0
    bool nodal;           // sufficient criterion: charge != 0
    Rational coefficient; // node_coefficient at this charge
};

// Scan over all (xi, charge) stratum labels; charges run over integer
// combinations of the Hermite basis with coefficients of sup-norm <= bound,
// so row counts are reproducible. Rows are sorted by charge, then xi.
inline std::vector<NodeStratum> enumerate_strata(const HoweSignature& j, Int genus,
                                                 Int bound) {
    j.validate();
    if (genus < 0) throw std::invalid_argument("enumerate_strata: genus must be >= 0");
    if (bound < 0) throw std::invalid_argument("enumerate_strata: bound must be >= 0");
    SignatureDerived d = derived_data(j);
    std::vector<ChargeVector> basis = charge_lattice(j);

    std::vector<Vec> charges;
    Vec lam(basis.size(), -bound);
    while (true) {
        Vec c(j.r(), 0);
        for (size_t b = 0; b < basis.size(); ++b)
            for (int i = 0; i < j.r(); ++i) c[i] += lam[b] * basis[b].c[i];
        charges.push_back(std::move(c));
        size_t pos = lam.size();
        while (pos > 0 && lam[pos - 1] == bound) lam[--pos] = -bound;
        if (pos == 0) break;
        ++lam[pos - 1];
    }
    std::sort(charges.begin(), charges.end());
    charges.erase(std::unique(charges.begin(), charges.end()), charges.end());

    std::vector<NodeStratum> out;
    for (const Vec& c : charges) {
        bool nodal = std::any_of(c.begin(), c.end(), [](Int x) { return x != 0; });
        Rational coeff = node_coefficient(j, c);
        Vec xi(2 * genus, 0);
        while (true) {
            out.push_back(NodeStratum{CohClass1ModG{d.g, xi}, c, nodal, coeff});
            size_t pos = xi.size();
            while (pos > 0 && xi[pos - 1] == d.g - 1) xi[--pos] = 0;
            if (pos == 0) break;
            ++xi[pos - 1];
        }
    }
    return out;
}

// Node flag of a classified stratum label over a surface model.
inline bool is_node(const OrbitTypeLabel& L, const ManifoldModel& m) {
    m.validate();
    if (m.dim != 2) throw std::invalid_argument("is_node: model is not a surface");
    for (const CohClass2& a : L.alpha2)
        if (!a.is_zero()) return true;
    return false;
}

}  // namespace strata
