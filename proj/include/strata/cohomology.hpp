#pragma once

// Exact cohomology data of a compact connected orientable base manifold of
// dimension <= 4, reduced to what the characteristic-class equations need:
// H^1 and H^2 with integer coefficients, the degree-2 cup-product pairing
// into H^4, mod-g coefficients in degree 1, and the Bockstein map.
//
// A model is specified by (b1, h1_torsion, b2, intersection_form, h4_rank).
// The torsion of H^2(M,Z) is copied from H_1(M) torsion (universal
// coefficients plus Poincare duality for compact orientable M), so it is
// never entered separately. H^4(M,Z) is assumed torsion-free, Z when
// dim == 4 and 0 otherwise.

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/abelian.hpp"
#include "strata/intmath.hpp"

namespace strata {

// Malformed model document (wrong fields, types, or shapes).
struct ModelSchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed document describing a manifold that violates the standing
// assumptions (symmetry, dimension/H^4 consistency, torsion chain, ...).
struct ModelInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ManifoldModel {
    std::string name;
    int dim = 4;
    Int b1 = 0;          // free rank of H^1(M,Z)
    Vec h1_torsion;      // invariant factors of H_1(M), ascending divisibility chain
    Int b2 = 0;          // free rank of H^2(M,Z)
    Mat intersection_form;  // b2 x b2, values of the cup pairing on the free basis
    int h4_rank = 0;     // 1 iff dim == 4

    int torsion_count() const { return static_cast<int>(h1_torsion.size()); }

    bool operator==(const ManifoldModel&) const = default;

    void validate() const {
        if (dim < 2 || dim > 4)
            throw ModelInvariantError("manifold: dim must be 2, 3, or 4");
        if (b1 < 0 || b2 < 0)
            throw ModelInvariantError("manifold: Betti numbers must be nonnegative");
        if (h4_rank != (dim == 4 ? 1 : 0))
            throw ModelInvariantError("manifold: h4_rank must be 1 exactly when dim == 4");
        for (size_t j = 0; j < h1_torsion.size(); ++j) {
            if (h1_torsion[j] < 2)
                throw ModelInvariantError("manifold: torsion factors must be >= 2");
            if (j > 0 && h1_torsion[j] % h1_torsion[j - 1] != 0)
                throw ModelInvariantError("manifold: torsion factors must form a divisibility chain");
        }
        if (intersection_form.size() != static_cast<size_t>(b2))
            throw ModelInvariantError("manifold: intersection form must be b2 x b2");
        for (const Vec& row : intersection_form)
            if (row.size() != static_cast<size_t>(b2))
                throw ModelInvariantError("manifold: intersection form must be b2 x b2");
        for (Int i = 0; i < b2; ++i)
            for (Int j = 0; j < i; ++j)
                if (intersection_form[i][j] != intersection_form[j][i])
                    throw ModelInvariantError("manifold: intersection form must be symmetric");
        if (dim < 4)
            for (const Vec& row : intersection_form)
                for (Int x : row)
                    if (x != 0)
                        throw ModelInvariantError(
                            "manifold: intersection form must vanish when dim < 4 (H^4 = 0)");
    }
};

// Element of H^2(M,Z): free coordinates against the chosen basis, torsion
// coordinates reduced mod the respective invariant factors.
struct CohClass2 {
    Vec free;
    Vec tors;

    bool is_zero() const {
        for (Int x : free)
            if (x != 0) return false;
        for (Int x : tors)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const CohClass2&) const = default;
    auto operator<=>(const CohClass2&) const = default;
};

// Element of H^4(M,Z): one coordinate against the orientation generator,
// forced 0 when dim < 4.
struct CohClass4 {
    Int coeff = 0;

    bool operator==(const CohClass4&) const = default;
    auto operator<=>(const CohClass4&) const = default;
};

// Element of H^1(M,Z_g) = Z_g^{b1} + sum_j Z_{gcd(d_j,g)}: components are
// listed in that order, b1 free-origin components first, then one per
// torsion factor d_j of the model.
struct CohClass1ModG {
    Int g = 1;
    Vec comps;

    bool is_zero() const {
        for (Int x : comps)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const CohClass1ModG&) const = default;
    auto operator<=>(const CohClass1ModG&) const = default;
};

// Component orders of H^1(M,Z_g) in the fixed coordinate order used by
// CohClass1ModG.
inline Vec xi_component_orders(const ManifoldModel& m, Int g) {
    Vec orders(m.b1, g);
    for (Int d : m.h1_torsion) orders.push_back(std::gcd(d, g));
    return orders;
}

inline FinAbGroup h1_mod(const ManifoldModel& m, Int g) {
    if (g < 1) throw std::invalid_argument("h1_mod: modulus must be >= 1");
    return FinAbGroup::from_orders(xi_component_orders(m, g));
}

inline CohClass2 zero2(const ManifoldModel& m) {
    return CohClass2{Vec(m.b2, 0), Vec(m.torsion_count(), 0)};
}

inline CohClass2 make2(const ManifoldModel& m, Vec free, Vec tors) {
    if (free.size() != static_cast<size_t>(m.b2) ||
        tors.size() != static_cast<size_t>(m.torsion_count()))
        throw std::invalid_argument("cohomology class: coordinate length mismatch");
    for (int j = 0; j < m.torsion_count(); ++j)
        tors[j] = mod_floor(tors[j], m.h1_torsion[j]);
    return CohClass2{std::move(free), std::move(tors)};
}

inline CohClass2 add2(const ManifoldModel& m, const CohClass2& x, const CohClass2& y) {
    CohClass2 z = x;
    for (Int i = 0; i < m.b2; ++i) z.free[i] += y.free[i];
    for (int j = 0; j < m.torsion_count(); ++j)
        z.tors[j] = mod_floor(z.tors[j] + y.tors[j], m.h1_torsion[j]);
    return z;
}

inline CohClass2 scale2(const ManifoldModel& m, Int a, const CohClass2& x) {
    CohClass2 z = x;
    for (Int i = 0; i < m.b2; ++i) z.free[i] *= a;
    for (int j = 0; j < m.torsion_count(); ++j)
        z.tors[j] = mod_floor(a * z.tors[j], m.h1_torsion[j]);
    return z;
}

// Bockstein of the coefficient sequence 0 -> Z -> Z -> Z_g -> 0 applied to
// xi. Free-origin components map to zero; the component of order
// gcd(d_j, g) maps to d_j/gcd(d_j,g) times the torsion generator of order
// d_j in H^2(M,Z). The composite g * bockstein is zero.
inline CohClass2 bockstein(const ManifoldModel& m, Int g, const CohClass1ModG& xi) {
    if (g < 1) throw std::invalid_argument("bockstein: modulus must be >= 1");
    if (xi.g != g || xi.comps.size() != static_cast<size_t>(m.b1 + m.torsion_count()))
        throw std::invalid_argument("bockstein: class does not live in H^1(M,Z_g)");
    CohClass2 out = zero2(m);
    for (int j = 0; j < m.torsion_count(); ++j) {
        Int d = m.h1_torsion[j];
        Int o = std::gcd(d, g);
        out.tors[j] = mod_floor((d / o) * xi.comps[m.b1 + j], d);
    }
    return out;
}

// Degree-2 cup product landing in H^4(M,Z). Torsion classes annihilate
// (H^4 is torsion-free); the form is the zero map when dim < 4.
inline CohClass4 cup22(const ManifoldModel& m, const CohClass2& x, const CohClass2& y) {
    if (x.free.size() != static_cast<size_t>(m.b2) ||
        y.free.size() != static_cast<size_t>(m.b2) ||
        x.tors.size() != static_cast<size_t>(m.torsion_count()) ||
        y.tors.size() != static_cast<size_t>(m.torsion_count()))
        throw std::invalid_argument("cup22: coordinate length mismatch");
    if (m.dim < 4) return CohClass4{0};
    Int c = 0;
    for (Int i = 0; i < m.b2; ++i)
        for (Int j = 0; j < m.b2; ++j) c += x.free[i] * m.intersection_form[i][j] * y.free[j];
    return CohClass4{c};
}

namespace detail {

inline std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace detail

// Built-in catalog:
//   S4          the 4-sphere
//   S2xS2       product of two 2-spheres
//   T4          the 4-torus
//   LensP3xS1   L_p^3 x S^1, parameter p >= 2
//   Sigma       closed orientable surface of genus s >= 0
inline ManifoldModel builtin_manifold(const std::string& name, const Vec& params = {}) {
    std::string id = detail::lower(name);
    ManifoldModel m;
    if (id == "s4") {
        if (!params.empty()) throw std::invalid_argument("S4 takes no parameters");
        m = ManifoldModel{"S4", 4, 0, {}, 0, {}, 1};
    } else if (id == "s2xs2") {
        if (!params.empty()) throw std::invalid_argument("S2xS2 takes no parameters");
        m = ManifoldModel{"S2xS2", 4, 0, {}, 2, {{0, 1}, {1, 0}}, 1};
    } else if (id == "t4") {
        if (!params.empty()) throw std::invalid_argument("T4 takes no parameters");
        // free H^2 basis: gamma_12, gamma_13, gamma_14, gamma_23, gamma_24,
        // gamma_34; gamma_ij ^ gamma_kl = sign of the permutation (i,j,k,l)
        Mat form = {{0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, -1, 0}, {0, 0, 0, 1, 0, 0},
                    {0, 0, 1, 0, 0, 0},  {0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}};
        m = ManifoldModel{"T4", 4, 4, {}, 6, std::move(form), 1};
    } else if (id == "lensp3xs1" || id == "lens") {
        if (params.size() != 1 || params[0] < 2)
            throw std::invalid_argument("LensP3xS1 needs one parameter p >= 2");
        m = ManifoldModel{"LensP3xS1(p=" + std::to_string(params[0]) + ")",
                          4, 1, {params[0]}, 0, {}, 1};
    } else if (id == "sigma") {
        if (params.size() != 1 || params[0] < 0)
            throw std::invalid_argument("Sigma needs one parameter s >= 0");
        m = ManifoldModel{"Sigma(s=" + std::to_string(params[0]) + ")",
                          2, 2 * params[0], {}, 1, {{0}}, 0};
    } else {
        throw std::invalid_argument("unknown manifold '" + name +
                                    "' (catalog: S4, S2xS2, T4, LensP3xS1, Sigma)");
    }
    m.validate();
    return m;
}

// Parses a model document; see README for the schema. Schema problems throw
// ModelSchemaError, models violating the standing assumptions throw
// ModelInvariantError.
inline ManifoldModel load_manifold(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelSchemaError(std::string("model: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ModelSchemaError("model: top level must be an object");
    const char* required[] = {"name", "dim", "b1", "h1_torsion", "b2",
                              "intersection_form", "h4_rank"};
    for (const char* key : required)
        if (!doc.contains(key))
            throw ModelSchemaError(std::string("model: missing field '") + key + "'");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool known = false;
        for (const char* key : required) known = known || it.key() == key;
        if (!known) throw ModelSchemaError("model: unknown field '" + it.key() + "'");
    }
    auto require_int = [&](const char* key) {
        if (!doc[key].is_number_integer())
            throw ModelSchemaError(std::string("model: field '") + key + "' must be an integer");
        return doc[key].get<Int>();
    };
    ManifoldModel m;
    if (!doc["name"].is_string()) throw ModelSchemaError("model: field 'name' must be a string");
    m.name = doc["name"].get<std::string>();
    m.dim = static_cast<int>(require_int("dim"));
    m.b1 = require_int("b1");
    m.b2 = require_int("b2");
    m.h4_rank = static_cast<int>(require_int("h4_rank"));
    if (!doc["h1_torsion"].is_array())
        throw ModelSchemaError("model: field 'h1_torsion' must be an array of integers");
    for (const auto& v : doc["h1_torsion"]) {
        if (!v.is_number_integer())
            throw ModelSchemaError("model: field 'h1_torsion' must be an array of integers");
        m.h1_torsion.push_back(v.get<Int>());
    }
    if (!doc["intersection_form"].is_array())
        throw ModelSchemaError("model: field 'intersection_form' must be a matrix");
    for (const auto& row : doc["intersection_form"]) {
        if (!row.is_array())
            throw ModelSchemaError("model: field 'intersection_form' must be a matrix");
        Vec r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ModelSchemaError("model: intersection form entries must be integers");
            r.push_back(v.get<Int>());
        }
        m.intersection_form.push_back(std::move(r));
    }
    if (m.b2 >= 0) {
        bool shape_ok = m.intersection_form.size() == static_cast<size_t>(m.b2);
        for (const Vec& row : m.intersection_form)
            shape_ok = shape_ok && row.size() == static_cast<size_t>(m.b2);
        if (!shape_ok)
            throw ModelSchemaError("model: intersection_form must be exactly b2 x b2");
    }
    m.validate();
    return m;
}

}  // namespace strata
