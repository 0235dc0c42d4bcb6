#pragma once

#include <sstream>
#include <string>

#include "kgk/abelian.hpp"
#include "kgk/family.hpp"
#include "kgk/ktheory.hpp"
#include "kgk/smith.hpp"

namespace kgk {

inline std::string render_matrix(const imat& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << m(i, j);
        }
        out << "]\n";
    }
    if (m.rows() == 0) out << "  [] (" << m.rows() << "x" << m.cols() << ")\n";
    return out.str();
}

inline std::string render_validation(const validation_report& rep) {
    std::ostringstream out;
    out << (rep.ok ? "ok" : "INVALID") << "\n";
    for (const auto& f : rep.failures)
        out << "  [" << to_string(f.kind) << "] " << f.detail << "\n";
    return out.str();
}

inline std::string render_report(const kgroup_report& rep) {
    std::ostringstream out;
    out << "k = " << rep.k << "\n";
    if (rep.k0)
        out << "K0 = " << to_text(*rep.k0) << " (" << to_string(rep.k0_status) << ")\n";
    else if (rep.k0_constraint) {
        out << "K0: 0 → " << to_text(rep.k0_constraint->sub) << " → K0 → "
            << to_text(rep.k0_constraint->quot) << " → 0";
        if (rep.k0_constraint->order)
            out << " (order " << *rep.k0_constraint->order << ")";
        out << " (" << to_string(rep.k0_status) << ")\n";
    } else {
        out << "K0: (" << to_string(rep.k0_status) << ")\n";
    }
    if (rep.k1)
        out << "K1 = " << to_text(*rep.k1) << " (" << to_string(rep.k1_status) << ")\n";
    else
        out << "K1: (" << to_string(rep.k1_status) << ")\n";
    out << "E2 page:";
    for (std::size_t p = 0; p < rep.e2.homology.size(); ++p)
        out << "  H" << p << " = " << to_text(rep.e2.homology[p]);
    out << "\n";
    if (!rep.notes.empty()) {
        out << "notes:";
        for (const auto& n : rep.notes) out << " " << n;
        out << "\n";
    }
    return out.str();
}

inline std::string render_e2(const e2_page& page) {
    std::ostringstream out;
    for (std::size_t p = 0; p < page.homology.size(); ++p)
        out << "H" << p << " = " << to_text(page.homology[p]) << "\n";
    return out.str();
}

inline std::string render_unit_class(const unit_class_position& u,
                                     const group_presentation& k0) {
    std::ostringstream out;
    out << "K0 = " << to_text(k0) << "\n";
    out << "unit class: free (";
    for (std::size_t i = 0; i < u.free_coords.size(); ++i) {
        if (i) out << ", ";
        out << u.free_coords[i];
    }
    out << "), torsion residues (";
    for (std::size_t i = 0; i < u.torsion_residues.size(); ++i) {
        if (i) out << ", ";
        out << u.torsion_residues[i];
    }
    out << ")\n";
    return out.str();
}

inline std::string render_smith(const smith_decomposition<bigint>& d) {
    std::ostringstream out;
    out << "invariant factors: (";
    for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
        if (i) out << ", ";
        out << d.invariant_factors[i];
    }
    out << ")\n";
    out << "s =\n" << render_matrix(d.s);
    out << "u =\n" << render_matrix(d.u);
    out << "v =\n" << render_matrix(d.v);
    return out.str();
}

inline std::string render_crosscheck(const crosscheck_result& c) {
    std::ostringstream out;
    group_presentation k0{c.r0_expected, c.tor_k0_expected};
    group_presentation k1{c.r0_expected, c.tor_k1_expected};
    out << "formula route: K0 = " << to_text(k0) << ", K1 = " << to_text(k1) << "\n";
    out << "agrees with homology pipeline: " << (c.agrees ? "yes" : "NO") << "\n";
    return out.str();
}

inline std::string render_k3_check(const k3_rank_check& c) {
    std::ostringstream out;
    if (!c.applicable) {
        out << "not applicable: d1 is not surjective\n";
        return out.str();
    }
    out << "d1 surjective; m = " << *c.m << ", expected K0 = K1 = "
        << to_text(group_presentation{*c.m, {}}) << "\n";
    out << "agrees with homology pipeline: " << (c.agrees ? "yes" : "NO") << "\n";
    return out.str();
}

inline std::string render_comparison(const comparison_report& rep) {
    std::ostringstream out;
    out << "vertex matrices identical up to vertex/colour permutation: "
        << (rep.same_matrices ? "yes" : "no") << "\n";
    out << "K-group presentations agree: " << (rep.kgroups_agree ? "yes" : "no") << "\n";
    if (rep.unit_class_agrees)
        out << "unit classes correspond: " << (*rep.unit_class_agrees ? "yes" : "no")
            << "\n";
    out << "flags: simple=" << (rep.simple ? "true" : "false")
        << " purely_infinite=" << (rep.purely_infinite ? "true" : "false") << "\n";
    out << rep.conclusion << "\n";
    return out.str();
}

}  // namespace kgk
