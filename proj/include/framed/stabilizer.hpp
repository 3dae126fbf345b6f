#pragma once

// Code-level data of the pointwise frame stabilizer of a structure-code pair (C, D).

#include <optional>
#include <utility>

#include "framed/gf2.hpp"

namespace framed {

/// P = {xi : alpha·xi in C for every alpha in D}.
LinearCode compute_P(const LinearCode& c, const LinearCode& d);

/// 1 if xi in C^⊥, 2 if wt(alpha·xi) = 0 mod 4 on all of D, otherwise 4. Needs xi in P.
int order_of_lift(const LinearCode& c, const LinearCode& d, const Codeword& xi);

/// Whether the lifts of xi1, xi2 commute: wt(alpha·xi1·xi2) even for all alpha in D.
bool commute_lifts(const LinearCode& c, const LinearCode& d, const Codeword& xi1, const Codeword& xi2);

struct StabilizerDescription {
    LinearCode p;
    std::size_t tau_rank = 0;    // n - dim D^⊥
    std::size_t sigma_rank = 0;  // dim P - dim C^⊥
    BigInt group_order;
    std::vector<Codeword> generators;  // basis of P/C^⊥, reduced modulo C^⊥
    std::vector<int> orders;
    std::vector<std::vector<bool>> noncommuting;  // [i][j] true when lifts i, j do not commute
};

StabilizerDescription describe_stabilizer(const LinearCode& c, const LinearCode& d);

struct GradedSplit {
    Codeword xi;
    LinearCode c0;                  // <alpha, xi> = 0
    std::optional<Codeword> c1_rep;  // lexicographically smallest word of C \ C0
    LinearCode d0;                  // wt(alpha·xi) = 0 mod 4
    std::optional<Codeword> d1_rep;  // lexicographically smallest word of D \ D0
};

GradedSplit graded_split(const LinearCode& c, const LinearCode& d, const Codeword& xi);

/// (D0 x {±1}) ⊔ (D1 x {±i}) as (word, quarter turns) pairs: 0 = +1, 1 = +i, 2 = -1, 3 = -i.
std::vector<std::pair<Codeword, int>> graded_index_set(const GradedSplit& s, const Limits& limits = {});

}  // namespace framed
