#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgk/integer.hpp"

namespace kgk {

/// Canonical form of a finitely generated abelian group:
/// Z^free_rank (+) Z/d1 (+) ... (+) Z/dt with 2 <= d1 | d2 | ... | dt.
/// Equality of presentations is isomorphism of the groups they present.
struct group_presentation {
    std::size_t free_rank = 0;
    std::vector<bigint> torsion;

    bool operator==(const group_presentation& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const group_presentation& o) const { return !(*this == o); }

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    std::optional<bigint> order() const {
        if (free_rank > 0) return std::nullopt;
        bigint n(1);
        for (const auto& d : torsion) n *= d;
        return n;
    }
};

inline std::string to_text(const group_presentation& g) {
    if (g.trivial()) return "0";
    std::string out;
    if (g.free_rank == 1) {
        out = "Z";
    } else if (g.free_rank > 1) {
        out = "Z^" + std::to_string(g.free_rank);
    }
    for (const auto& d : g.torsion) {
        if (!out.empty()) out += " ⊕ ";
        out += "Z/" + to_decimal(d);
    }
    return out;
}

}  // namespace kgk
