#include "framed/modules.hpp"

#include <algorithm>

#include "framed/quadratic.hpp"
#include "framed/selfdual.hpp"

namespace framed {

namespace {

// Data attached to a fixed beta.
struct BetaData {
    LinearCode c_beta;
    LinearCode h;            // greedy maximal self-orthogonal subcode of C_beta
    LinearCode h_perp_beta;  // H^{⊥β}
    LinearCode equivalence;  // C + R^{⊥β}
};

BetaData beta_data(const LinearCode& c, const Codeword& beta) {
    BetaData b;
    b.c_beta = subcode_supported_on(c, beta);
    b.h = maximal_self_orthogonal_subcode(b.c_beta);
    b.h_perp_beta = dual_within(b.h, beta);
    b.equivalence = sum_codes(c, dual_within(radical(b.c_beta), beta));
    return b;
}

void require_same_code(const ModuleLabel& a, const ModuleLabel& b) {
    if (a.code != b.code && !(*a.code == *b.code)) {
        throw PreconditionFailed("module labels belong to different codes");
    }
}

ModuleLabel relabel(const ModuleLabel& like, const Codeword& beta, const Codeword& gamma) {
    return make_label(like.code, beta, gamma);
}

// Cosets of C inside C + extra, as lexicographically smallest representatives.
std::vector<Codeword> transversal(const LinearCode& c, const LinearCode& extra, const Limits& limits) {
    std::vector<Codeword> reduced;
    for (const auto& r : extra.basis()) reduced.push_back(c.reduce(r));
    const LinearCode complement = LinearCode::from_generators(c.length(), reduced);
    return complement.codewords(limits);
}

struct CosetMinimum {
    std::size_t weight = 0;
    BigInt count;
};

// Minimum weight of rep + pc and the number of words attaining it.
CosetMinimum coset_minimum(const LinearCode& pc, const Codeword& rep, const Limits& limits) {
    CosetMinimum out;
    if (pc.dimension() <= std::min<std::size_t>(20, limits.max_enumeration_dim)) {
        out.weight = rep.size() + 1;
        pc.for_each_codeword(
            [&](const Codeword& w) {
                const std::size_t wt = (w ^ rep).weight();
                if (wt < out.weight) {
                    out.weight = wt;
                    out.count = 1;
                } else if (wt == out.weight) {
                    out.count += 1;
                }
            },
            limits);
        return out;
    }
    const auto w = coset_min_weight(pc, rep, limits.max_coset_weight, limits);
    if (!w) {
        throw ResourceExceeded("coset minimum weight exceeds the search bound " +
                               std::to_string(limits.max_coset_weight));
    }
    out.weight = *w;
    for (const auto& v : coset_words_up_to_weight(pc, rep, *w, limits)) {
        if (v.weight() == *w) out.count += 1;
    }
    return out;
}

// A word of C restricted to the complement S of supp(beta) is a word of the punctured
// code, and two words of C share a restriction exactly when they differ by an element
// of C_beta. On supp(beta) each coordinate contributes 1/16 whatever gamma is, and off
// it gamma_i/2, so the lowest weight of M_C(beta,gamma) is
//   wt(beta)/16 + (1/2) min wt(gamma|S + puncture(C, S)).
CosetMinimum punctured_minimum(const ModuleLabel& m, const Limits& limits) {
    const Codeword s = m.beta.complement();
    return coset_minimum(puncture(*m.code, s), m.gamma.compress(s), limits);
}

}  // namespace

std::string ModuleLabel::to_string() const { return beta.to_hex() + ":" + gamma.to_hex(); }

ModuleLabel make_label(std::shared_ptr<const LinearCode> c, const Codeword& beta, const Codeword& gamma) {
    if (!c) throw PreconditionFailed("module label without a code");
    if (beta.size() != c->length()) throw LengthMismatch(c->length(), beta.size());
    if (gamma.size() != c->length()) throw LengthMismatch(c->length(), gamma.size());
    if (!c->is_even()) throw PreconditionFailed("code VOA modules need an even code");
    if (!dual(*c).contains(beta)) throw PreconditionFailed("beta is not in C^⊥");
    const BetaData b = beta_data(*c, beta);
    return ModuleLabel{std::move(c), beta, b.equivalence.reduce(gamma)};
}

ModuleLabel make_label(const LinearCode& c, const Codeword& beta, const Codeword& gamma) {
    return make_label(std::make_shared<const LinearCode>(c), beta, gamma);
}

Codeword parse_word(std::string_view text, std::size_t n) {
    if (text == "0") return Codeword(n);
    const bool bits = text.size() == n && text.find_first_not_of("01") == std::string_view::npos;
    return bits ? Codeword::from_bits(text) : Codeword::from_hex(text, n);
}

ModuleLabel parse_label(std::shared_ptr<const LinearCode> c, std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("label must have the form beta:gamma");
    const std::size_t n = c->length();
    const Codeword beta = parse_word(text.substr(0, colon), n);
    const Codeword gamma = parse_word(text.substr(colon + 1), n);
    return make_label(std::move(c), beta, gamma);
}

Codeword kappa_for(const LinearCode& c, const Codeword& beta) {
    return kappa_vector(maximal_self_orthogonal_subcode(subcode_supported_on(c, beta)), beta);
}

ModuleLabel dual_label(const ModuleLabel& m) {
    return relabel(m, m.beta, m.gamma ^ kappa_for(*m.code, m.beta));
}

bool is_self_dual_module(const ModuleLabel& m) { return dual_label(m) == m; }

bool is_simple_current(const ModuleLabel& m, const Limits& limits) {
    return find_self_dual_subcode_wrt(*m.code, m.beta, false, limits).has_value();
}

ModuleSum fuse_coset(const ModuleLabel& m1, const ModuleLabel& m2) {
    require_same_code(m1, m2);
    if (!m1.beta.is_zero() || !m2.beta.is_zero()) {
        throw PreconditionFailed("fuse_coset needs two coset modules");
    }
    return {{relabel(m1, m1.beta, m1.gamma ^ m2.gamma), 1}};
}

ShiftedLabel fuse_coset_general(const Codeword& alpha, const ModuleLabel& m) {
    const bool odd = inner(alpha, alpha ^ m.beta);
    return {relabel(m, m.beta, alpha ^ m.gamma), Rational(odd ? 1 : 0, 2)};
}

ModuleSum fuse_same_beta(const ModuleLabel& m1, const ModuleLabel& m2, const Limits& limits) {
    require_same_code(m1, m2);
    if (m1.beta != m2.beta) throw PreconditionFailed("fuse_same_beta needs equal beta words");
    const LinearCode& c = *m1.code;
    const BetaData b = beta_data(c, m1.beta);
    const Codeword base = m1.gamma ^ m2.gamma ^ kappa_vector(b.h, m1.beta);
    const Codeword zero(c.length());

    ModuleSum out;
    const auto deltas = transversal(c, b.h_perp_beta, limits);
    for (const auto& delta : deltas) out[relabel(m1, zero, base ^ delta)] += 1;
    const std::size_t expected = std::size_t{1} << (sum_codes(c, b.h_perp_beta).dimension() - c.dimension());
    if (out.size() != expected || deltas.size() != expected) {
        throw InternalError("fusion summands do not match the index of C in C + H^{⊥β}");
    }
    return out;
}

ModuleSum fuse_with_dual(const ModuleLabel& m, const Limits& limits) {
    return fuse_same_beta(m, dual_label(m), limits);
}

ModuleSum fuse(const ModuleLabel& m1, const ModuleLabel& m2, const Limits& limits) {
    require_same_code(m1, m2);
    if (m1.beta.is_zero()) return {{fuse_coset_general(m1.gamma, m2).label, 1}};
    if (m2.beta.is_zero()) return {{fuse_coset_general(m2.gamma, m1).label, 1}};
    if (m1.beta == m2.beta) return fuse_same_beta(m1, m2, limits);
    throw UnsupportedFusion("fusion of modules with distinct nonzero beta words is not supported");
}

Rational top_weight(const ModuleLabel& m, const Limits& limits) {
    const CosetMinimum cm = punctured_minimum(m, limits);
    return Rational(static_cast<std::int64_t>(m.beta.weight()), 16) +
           Rational(static_cast<std::int64_t>(cm.weight), 2);
}

BigInt top_level_dimension(const ModuleLabel& m, const Limits& limits) {
    const CosetMinimum cm = punctured_minimum(m, limits);
    const BetaData b = beta_data(*m.code, m.beta);
    return (BigInt{1} << (b.c_beta.dimension() - b.h.dimension())) * cm.count;
}

BigInt count_modules_with_tau(const LinearCode& c, const Codeword& beta) {
    if (!dual(c).contains(beta)) throw PreconditionFailed("beta is not in C^⊥");
    return BigInt{1} << (c.length() - beta_data(c, beta).equivalence.dimension());
}

}  // namespace framed
