#pragma once

// Howe signatures J = (k|m): pairs of equal-length sequences of positive
// integers with sum k_i * m_i = n. A signature labels the conjugacy class
// of the Howe subgroup SU(J) of SU(n); signatures that differ by a
// simultaneous permutation of the index pairs label the same class.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/abelian.hpp"
#include "strata/intmath.hpp"

namespace strata {

// enumerate_signatures grows combinatorially; inputs above this are refused.
inline constexpr Int kMaxSignatureN = 64;

struct HoweSignature {
    Vec k;
    Vec m;

    int r() const { return static_cast<int>(k.size()); }

    Int n() const {
        Int s = 0;
        for (int i = 0; i < r(); ++i) s += k[i] * m[i];
        return s;
    }

    void validate() const {
        if (k.empty() || k.size() != m.size())
            throw std::invalid_argument("signature: k and m must be nonempty and of equal length");
        for (int i = 0; i < r(); ++i)
            if (k[i] < 1 || m[i] < 1)
                throw std::invalid_argument("signature: all k_i and m_i must be >= 1");
    }

    // Index pairs (k_i, m_i), the unit of permutation and comparison.
    std::vector<std::pair<Int, Int>> pairs() const {
        std::vector<std::pair<Int, Int>> p(r());
        for (int i = 0; i < r(); ++i) p[i] = {k[i], m[i]};
        return p;
    }

    bool operator==(const HoweSignature&) const = default;

    // "k1,...,kr|m1,...,mr"
    std::string str() const {
        std::string s;
        for (int i = 0; i < r(); ++i) {
            if (i) s += ',';
            s += std::to_string(k[i]);
        }
        s += '|';
        for (int i = 0; i < r(); ++i) {
            if (i) s += ',';
            s += std::to_string(m[i]);
        }
        return s;
    }

    static HoweSignature parse(const std::string& text) {
        auto bar = text.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("signature: expected k1,...,kr|m1,...,mr");
        auto parse_list = [](const std::string& part) {
            Vec out;
            size_t pos = 0;
            while (pos <= part.size()) {
                size_t comma = part.find(',', pos);
                std::string item = part.substr(pos, comma == std::string::npos
                                                        ? std::string::npos
                                                        : comma - pos);
                if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("signature: bad integer '" + item + "'");
                out.push_back(std::stoll(item));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return out;
        };
        HoweSignature j{parse_list(text.substr(0, bar)), parse_list(text.substr(bar + 1))};
        j.validate();
        return j;
    }
};

struct SignatureDerived {
    Int g = 1;       // gcd of the multiplicities m
    Vec m_tilde;     // m / g componentwise
    int r_star = 0;  // number of indices with k_i > 1
    Int dim = 0;     // dim SU(J) = sum k_i^2 - 1

    bool operator==(const SignatureDerived&) const = default;
};

struct HomotopyGroupDescription {
    int degree = 0;
    Int free_rank = 0;
    Vec torsion_factors;

    FinAbGroup group() const { return FinAbGroup::from_orders(torsion_factors, free_rank); }

    bool operator==(const HomotopyGroupDescription&) const = default;
};

// Strictly descending lexicographic order on the pair sequences; the first
// element of enumerate_classes output is always the generic (n|1).
inline bool signature_desc_less(const HoweSignature& a, const HoweSignature& b) {
    auto pa = a.pairs(), pb = b.pairs();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                        std::greater<std::pair<Int, Int>>());
}

// All ordered signatures with sum k_i*m_i = n, generated by recursive
// descent on the remaining budget, k ascending then m ascending.
inline std::vector<HoweSignature> enumerate_signatures(Int n) {
    if (n < 1 || n > kMaxSignatureN)
        throw std::invalid_argument("enumerate_signatures: n must be in [1, " +
                                    std::to_string(kMaxSignatureN) + "]");
    std::vector<HoweSignature> out;
    Vec k, m;
    auto rec = [&](auto&& self, Int rem) -> void {
        if (rem == 0) {
            if (!k.empty()) out.push_back(HoweSignature{k, m});
            return;
        }
        for (Int ki = 1; ki <= rem; ++ki)
            for (Int mi = 1; ki * mi <= rem; ++mi) {
                k.push_back(ki);
                m.push_back(mi);
                self(self, rem - ki * mi);
                k.pop_back();
                m.pop_back();
            }
    };
    rec(rec, n);
    return out;
}

// Representative with the index pairs sorted in descending lexicographic
// order; constant on permutation orbits and idempotent.
inline HoweSignature canonicalize(HoweSignature j) {
    j.validate();
    auto p = j.pairs();
    std::sort(p.begin(), p.end(), std::greater<std::pair<Int, Int>>());
    for (int i = 0; i < j.r(); ++i) {
        j.k[i] = p[i].first;
        j.m[i] = p[i].second;
    }
    return j;
}

// Canonical representatives of the permutation classes, in descending
// lexicographic order.
inline std::vector<HoweSignature> enumerate_classes(Int n) {
    std::vector<HoweSignature> reps;
    for (const HoweSignature& j : enumerate_signatures(n)) {
        HoweSignature c = canonicalize(j);
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end(), signature_desc_less);
    return reps;
}

inline SignatureDerived derived_data(const HoweSignature& j) {
    j.validate();
    SignatureDerived d;
    d.g = gcd_vec(j.m);
    d.m_tilde.resize(j.r());
    for (int i = 0; i < j.r(); ++i) d.m_tilde[i] = j.m[i] / d.g;
    d.r_star = static_cast<int>(std::count_if(j.k.begin(), j.k.end(),
                                              [](Int ki) { return ki > 1; }));
    d.dim = -1;
    for (Int ki : j.k) d.dim += ki * ki;
    return d;
}

// Homotopy groups of SU(J) in degrees 0..4:
//   pi_0 = Z_g, pi_1 = Z^(r-1), pi_i = direct sum of pi_i(U(k_i)) for i >= 2,
// with the standard low-degree table of pi_i(U(k)):
//   pi_2(U(k)) = 0;  pi_3(U(1)) = 0, pi_3(U(k>=2)) = Z;
//   pi_4(U(1)) = 0, pi_4(U(2)) = Z_2, pi_4(U(k>=3)) = 0.
inline std::vector<HomotopyGroupDescription> homotopy_groups(const HoweSignature& j) {
    SignatureDerived d = derived_data(j);
    std::vector<HomotopyGroupDescription> pi(5);
    for (int i = 0; i < 5; ++i) pi[i].degree = i;
    if (d.g > 1) pi[0].torsion_factors = {d.g};
    pi[1].free_rank = j.r() - 1;
    pi[3].free_rank = d.r_star;
    for (Int ki : j.k)
        if (ki == 2) pi[4].torsion_factors.push_back(2);
    return pi;
}

}  // namespace strata
