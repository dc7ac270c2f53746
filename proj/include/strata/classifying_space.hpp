#pragma once

// Structural data about the classifying space B SU(J): the fifth Postnikov
// level, presentations of its cohomology with Z and Z_g coefficients, and
// the Eilenberg-MacLane cohomology tables those rest on. Presentations are
// structured data (generators plus formal relations), not computed ring
// arithmetic.

#include <stdexcept>
#include <string>
#include <vector>

#include "strata/abelian.hpp"
#include "strata/howe.hpp"

namespace strata {

// Through level 5 the classifying space splits as
// K(Z_g,1) x K(Z,2)^(r-1) x K(Z,4)^(r*); the first factor is absent when
// g == 1.
struct PostnikovDecomposition {
    Int g = 1;
    int km_zg1_count = 0;
    int kz2_count = 0;
    int kz4_count = 0;

    std::string str() const {
        std::vector<std::string> parts;
        if (km_zg1_count > 0) parts.push_back("K(Z_" + std::to_string(g) + ",1)");
        auto powered = [](const std::string& base, int count) {
            return count == 1 ? base : base + "^" + std::to_string(count);
        };
        if (kz2_count > 0) parts.push_back(powered("K(Z,2)", kz2_count));
        if (kz4_count > 0) parts.push_back(powered("K(Z,4)", kz4_count));
        if (parts.empty()) return "point";
        std::string out = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
        return out;
    }
};

inline PostnikovDecomposition postnikov5(const HoweSignature& j) {
    j.validate();
    SignatureDerived d = derived_data(j);
    PostnikovDecomposition p;
    p.g = d.g;
    p.km_zg1_count = d.g > 1 ? 1 : 0;
    p.kz2_count = j.r() - 1;
    p.kz4_count = d.r_star;
    return p;
}

struct RingGenerator {
    std::string name;
    int degree;
    bool operator==(const RingGenerator&) const = default;
};

// coeff * product of generators[index]^power; an empty factor list is a
// constant term
struct RingMonomial {
    Int coeff = 1;
    std::vector<std::pair<int, int>> factors;  // (generator index, power)
    bool operator==(const RingMonomial&) const = default;
};

// sum of the monomials == 0
struct RingRelation {
    std::vector<RingMonomial> monomials;
    bool operator==(const RingRelation&) const = default;
};

struct RingPresentation {
    std::string coefficient_ring;  // "Z" or "Z_g"
    std::vector<RingGenerator> generators;
    std::vector<RingRelation> relations;
    std::string note;

    std::string monomial_str(const RingMonomial& m, bool leading) const {
        std::string out;
        Int c = m.coeff;
        if (c < 0) {
            out += leading ? "-" : " - ";
            c = -c;
        } else if (!leading) {
            out += " + ";
        }
        if (c != 1 || m.factors.empty()) out += std::to_string(c);
        bool first = true;
        for (auto [idx, pow] : m.factors) {
            if (!first || c != 1 || m.factors.empty()) out += " ";
            out += generators[idx].name;
            if (pow != 1) out += "^" + std::to_string(pow);
            first = false;
        }
        return out;
    }

    std::string str() const {
        std::string out = coefficient_ring + "[";
        for (size_t i = 0; i < generators.size(); ++i)
            out += (i ? ", " : "") + generators[i].name;
        out += "]";
        if (!relations.empty()) {
            out += " / (";
            for (size_t k = 0; k < relations.size(); ++k) {
                if (k) out += ", ";
                for (size_t t = 0; t < relations[k].monomials.size(); ++t)
                    out += monomial_str(relations[k].monomials[t], t == 0);
            }
            out += ")";
        }
        return out;
    }
};

namespace cs_detail {

inline std::string chern_name(int i, int jj) {
    return "x_{" + std::to_string(i + 1) + "," + std::to_string(jj) + "}";
}

// generators x_{i,j} of degree 2j, j = 1..k_i, returned with the index of
// each x_{i,1}
inline std::vector<int> append_chern_generators(const HoweSignature& j,
                                                std::vector<RingGenerator>& gens) {
    std::vector<int> first(j.r());
    for (int i = 0; i < j.r(); ++i) {
        first[i] = static_cast<int>(gens.size());
        for (Int jj = 1; jj <= j.k[i]; ++jj)
            gens.push_back(RingGenerator{chern_name(i, static_cast<int>(jj)),
                                         static_cast<int>(2 * jj)});
    }
    return first;
}

}  // namespace cs_detail

// H*(B SU J; Z): polynomial on the Chern roots of the elementary blocks,
// subject to the single degree-2 relation sum_i m_i x_{i,1} = 0.
inline RingPresentation integral_ring(const HoweSignature& j) {
    j.validate();
    RingPresentation p;
    p.coefficient_ring = "Z";
    std::vector<int> first = cs_detail::append_chern_generators(j, p.generators);
    RingRelation rel;
    for (int i = 0; i < j.r(); ++i)
        rel.monomials.push_back(RingMonomial{j.m[i], {{first[i], 1}}});
    p.relations.push_back(std::move(rel));
    return p;
}

// H*(B SU J; Z_g): adds the degree-1 generator x with x^2 = 0 for odd g and
// x^2 = l (mt_1 x_{1,1} + ... + mt_r x_{r,1}) for g = 2l. For g == 1 the
// coefficients collapse and the integral presentation is returned.
inline RingPresentation modg_ring(const HoweSignature& j) {
    j.validate();
    SignatureDerived d = derived_data(j);
    if (d.g == 1) {
        RingPresentation p = integral_ring(j);
        p.note = "g = 1: no degree-1 generator, integral presentation applies";
        return p;
    }
    RingPresentation p;
    p.coefficient_ring = "Z_" + std::to_string(d.g);
    p.generators.push_back(RingGenerator{"x", 1});
    std::vector<int> first = cs_detail::append_chern_generators(j, p.generators);
    RingRelation rel;
    rel.monomials.push_back(RingMonomial{1, {{0, 2}}});
    if (d.g % 2 == 0) {
        Int l = d.g / 2;
        for (int i = 0; i < j.r(); ++i)
            rel.monomials.push_back(RingMonomial{-l * d.m_tilde[i], {{first[i], 1}}});
    }
    p.relations.push_back(std::move(rel));
    return p;
}

struct EmSpace {
    bool is_kz2;  // else K(Z_g,1)
    Int g;
};

inline EmSpace em_kz2() { return EmSpace{true, 0}; }
inline EmSpace em_kzg1(Int g) { return EmSpace{false, g}; }

// Integral cohomology of the two Eilenberg-MacLane building blocks:
// K(Z,2) has Z in every even degree; K(Z_g,1) has Z in degree 0, Z_g in
// positive even degrees, nothing in odd degrees.
inline FinAbGroup em_cohomology(const EmSpace& space, Int i) {
    if (i < 0) throw std::invalid_argument("em_cohomology: degree must be >= 0");
    if (space.is_kz2)
        return i % 2 == 0 ? FinAbGroup{1, {}} : FinAbGroup{};
    if (space.g < 2) throw std::invalid_argument("em_cohomology: modulus must be >= 2");
    if (i == 0) return FinAbGroup{1, {}};
    if (i % 2 == 0) return FinAbGroup::from_orders({space.g});
    return FinAbGroup{};
}

}  // namespace strata
