#pragma once

// Self-dual subcodes with respect to a support word.

#include <optional>

#include "framed/gf2.hpp"

namespace framed {

/// supp(H) = supp(beta) and H = H^{⊥β}.
bool is_self_dual_wrt(const LinearCode& h, const Codeword& beta);

/// A subcode H of C_beta that is self-dual w.r.t. beta (doubly even if asked), or nullopt
/// when none exists. Any such H contains beta.
///
/// Works in C_beta punctured to supp(beta) and grows a totally singular subspace of
/// its even part greedily. For doubly even subcodes the form is q(v) = wt(v)/2 mod 2;
/// otherwise only the bilinear form matters. Every maximal totally singular subspace
/// has the same dimension, so a greedy run that stalls below wt(beta)/2 proves that
/// none exists.
std::optional<LinearCode> find_self_dual_subcode_wrt(const LinearCode& c, const Codeword& beta,
                                                     bool require_doubly_even,
                                                     const Limits& limits = {});

/// A doubly even self-dual code containing H. Needs 8 | n, H doubly even and 1 in H.
std::optional<LinearCode> extend_to_doubly_even_self_dual(const LinearCode& h,
                                                          const Limits& limits = {});

}  // namespace framed
