#pragma once

// Sign cocycle on codewords and the quadratic bookkeeping behind module duality.

#include "framed/gf2.hpp"

namespace framed {

struct CocycleValue {
    int sign = 1;  // +1 or -1

    friend CocycleValue operator*(CocycleValue a, CocycleValue b) { return {a.sign * b.sign}; }
    friend bool operator==(CocycleValue, CocycleValue) = default;
};

/// (-1)^m with m = #{(i,j) : i > j, alpha_i = 1, beta_j = 1}.
CocycleValue epsilon(const Codeword& alpha, const Codeword& beta);

/// C ∩ C^⊥.
LinearCode radical(const LinearCode& c);

/// Greedy maximal self-orthogonal subcode containing radical(c).
LinearCode maximal_self_orthogonal_subcode(const LinearCode& c);

/// H^{⊥β}: words supported on supp(beta) orthogonal to every word of h.
LinearCode dual_within(const LinearCode& h, const Codeword& beta);

/// Lexicographically smallest kappa on supp(beta) with <kappa,h> = wt(h)/2 mod 2 for all h in H.
/// H must be self-orthogonal and supported inside supp(beta).
Codeword kappa_vector(const LinearCode& h, const Codeword& beta);

}  // namespace framed
