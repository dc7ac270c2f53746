#pragma once

// Finitely generated abelian groups in invariant-factor form.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "strata/intmath.hpp"

namespace strata {

struct FinAbGroup {
    Int free_rank = 0;
    Vec invariant_factors;  // each >= 2, each divides the next

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }

    // Order of the torsion part (1 when torsion-free).
    Int torsion_order() const {
        Int p = 1;
        for (Int d : invariant_factors) p *= d;
        return p;
    }

    // Total order; 0 encodes infinite.
    Int order() const { return free_rank > 0 ? 0 : torsion_order(); }

    bool operator==(const FinAbGroup&) const = default;

    // Normalizes an unordered list of cyclic orders into invariant factors.
    static FinAbGroup from_orders(Vec orders, Int free_rank = 0) {
        Vec t;
        for (Int d : orders)
            if (d > 1) t.push_back(d);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < t.size(); ++i)
                for (size_t j = i + 1; j < t.size(); ++j)
                    if (t[j] % t[i] != 0) {
                        Int g = std::gcd(t[i], t[j]);
                        Int l = t[i] / g * t[j];
                        t[i] = g;
                        t[j] = l;
                        changed = true;
                    }
        }
        std::sort(t.begin(), t.end());
        Vec keep;
        for (Int d : t)
            if (d > 1) keep.push_back(d);
        return FinAbGroup{free_rank, std::move(keep)};
    }

    std::string str() const {
        if (trivial()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (Int d : invariant_factors) {
            if (!s.empty()) s += " + ";
            s += "Z_" + std::to_string(d);
        }
        return s;
    }
};

}  // namespace strata
