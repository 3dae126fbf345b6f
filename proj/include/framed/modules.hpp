#pragma once

// Irreducible modules M_C(beta, gamma) of a code VOA V_C and their fusion.
//
// A label is (beta, gamma) with beta in C^⊥ and gamma taken modulo C + R^{⊥β},
// R the radical of C_beta. gamma is stored as the lexicographically smallest
// member of its class, so equal labels compare equal as data.

#include <map>
#include <memory>
#include <string>

#include <boost/rational.hpp>

#include "framed/gf2.hpp"

namespace framed {

using Rational = boost::rational<std::int64_t>;

struct ModuleLabel {
    std::shared_ptr<const LinearCode> code;
    Codeword beta;
    Codeword gamma;

    std::string to_string() const;  // "beta-hex:gamma-hex"

    friend bool operator==(const ModuleLabel& a, const ModuleLabel& b) {
        return a.beta == b.beta && a.gamma == b.gamma && *a.code == *b.code;
    }
    friend bool operator<(const ModuleLabel& a, const ModuleLabel& b) {
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.gamma < b.gamma;
    }
};

/// Label -> multiplicity.
using ModuleSum = std::map<ModuleLabel, std::size_t>;

/// C must be even and beta must lie in C^⊥.
ModuleLabel make_label(std::shared_ptr<const LinearCode> c, const Codeword& beta, const Codeword& gamma);
ModuleLabel make_label(const LinearCode& c, const Codeword& beta, const Codeword& gamma);

/// Parses "beta:gamma"; each half is a bit string of length n or ceil(n/4) hex digits.
ModuleLabel parse_label(std::shared_ptr<const LinearCode> c, std::string_view text);
/// Bit string when it has length n and only 0/1, hex otherwise; a lone "0" is the zero word.
Codeword parse_word(std::string_view text, std::size_t n);

/// kappa_H for the greedy maximal self-orthogonal H of C_beta.
Codeword kappa_for(const LinearCode& c, const Codeword& beta);

ModuleLabel dual_label(const ModuleLabel& m);
bool is_self_dual_module(const ModuleLabel& m);
bool is_simple_current(const ModuleLabel& m, const Limits& limits = {});

/// (0,alpha) x (0,beta) = (0, alpha+beta).
ModuleSum fuse_coset(const ModuleLabel& m1, const ModuleLabel& m2);

struct ShiftedLabel {
    ModuleLabel label;
    Rational shift;  // <alpha, alpha+beta>/2 mod 1, so 0 or 1/2
};
/// (0,alpha) x (beta,gamma) = (beta, alpha+gamma), with the top-weight shift class.
ShiftedLabel fuse_coset_general(const Codeword& alpha, const ModuleLabel& m);

/// M x M' over a transversal of C in C + H^{⊥β}.
ModuleSum fuse_with_dual(const ModuleLabel& m, const Limits& limits = {});
ModuleSum fuse_same_beta(const ModuleLabel& m1, const ModuleLabel& m2, const Limits& limits = {});
/// Dispatches to the rules above; distinct nonzero betas raise UnsupportedFusion.
ModuleSum fuse(const ModuleLabel& m1, const ModuleLabel& m2, const Limits& limits = {});

Rational top_weight(const ModuleLabel& m, const Limits& limits = {});
BigInt top_level_dimension(const ModuleLabel& m, const Limits& limits = {});

/// Number of labels with a given beta: 2^n / |C + R^{⊥β}|.
BigInt count_modules_with_tau(const LinearCode& c, const Codeword& beta);

}  // namespace framed
