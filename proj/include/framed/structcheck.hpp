#pragma once

// Checks for structure-code pairs (C, D) and the codes built from them.

#include <optional>
#include <string>
#include <vector>

#include "framed/gf2.hpp"

namespace framed {

struct Clause {
    std::string name;
    bool pass = true;
    std::optional<Codeword> witness;  // lexicographically smallest offender, when one exists
    std::string detail;
};

struct StructureReport {
    std::vector<Clause> clauses;

    bool pass() const;
    const Clause* first_failure() const;
};

/// C even; every word of D has weight divisible by 8; D ⊆ C ⊆ D^⊥; for every nonzero
/// alpha in D, C_alpha has a doubly even subcode self-dual w.r.t. alpha.
StructureReport validate_structure_codes(const LinearCode& c, const LinearCode& d,
                                         const Limits& limits = {});

/// 16 | n plus validate_structure_codes(C, C^⊥).
StructureReport is_f_admissible(const LinearCode& c, const Limits& limits = {});

/// 16 | n, 1 in C^⊥ and C^⊥ triply even.
bool is_f_admissible_via_dual(const LinearCode& c, const Limits& limits = {});

bool is_holomorphic_pair(const LinearCode& c, const LinearCode& d, const Limits& limits = {});

struct CodePair {
    LinearCode c;
    LinearCode d;
    StructureReport report;
};

/// Replaces C by an intermediate code C ⊆ E ⊆ D^⊥ and re-validates (E, D).
CodePair extend_structure_codes(const LinearCode& c, const LinearCode& d, const LinearCode& e,
                                const Limits& limits = {});

enum class OrbifoldKind {
    FourA,  // (C0 ⊔ (C1+kappa), D0 ⊔ (D1+xi))
    TwoB,   // (C0 ⊔ C1 ⊔ (C0+kappa) ⊔ (C1+kappa), D0)
};

CodePair orbifold_codes(const LinearCode& c, const LinearCode& d, const Codeword& xi,
                        const Codeword& kappa, OrbifoldKind kind, const Limits& limits = {});

}  // namespace framed
