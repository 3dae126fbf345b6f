#include "framed/quadratic.hpp"

namespace framed {

namespace {

// Bit p of the result is the XOR of all bits of x strictly above p (earlier coordinates).
std::uint64_t exclusive_prefix_xor(std::uint64_t x) {
    x ^= x >> 1;
    x ^= x >> 2;
    x ^= x >> 4;
    x ^= x >> 8;
    x ^= x >> 16;
    x ^= x >> 32;
    return x >> 1;
}

bool is_subset(const Codeword& a, const Codeword& b) { return (a & b) == a; }

}  // namespace

CocycleValue epsilon(const Codeword& alpha, const Codeword& beta) {
    if (alpha.size() != beta.size()) throw LengthMismatch(alpha.size(), beta.size());
    const auto wa = alpha.words();
    const auto wb = beta.words();
    unsigned parity = 0;
    std::uint64_t carry = 0;  // all-ones when an odd number of beta bits precede this word
    for (std::size_t i = 0; i < wa.size(); ++i) {
        const std::uint64_t before = exclusive_prefix_xor(wb[i]) ^ carry;
        parity ^= std::popcount(wa[i] & before) & 1U;
        if (std::popcount(wb[i]) & 1) carry = ~carry;
    }
    return {parity ? -1 : 1};
}

LinearCode radical(const LinearCode& c) { return intersect(c, dual(c)); }

LinearCode maximal_self_orthogonal_subcode(const LinearCode& c) {
    const LinearCode r = radical(c);
    const LinearCode c_even = even_subcode(c);
    LinearCode h = r;
    for (;;) {
        const LinearCode room = intersect(c_even, dual(h));
        bool grew = false;
        for (const auto& v : room.basis()) {
            if (h.insert(v)) {
                grew = true;
                break;
            }
        }
        if (!grew) break;
    }
    // On an even code the form is alternating, so every maximal totally isotropic
    // subspace has the same dimension.
    if (c.is_even() && 2 * h.dimension() != c.dimension() + r.dimension()) {
        throw InternalError("maximal self-orthogonal subcode has unexpected dimension");
    }
    return h;
}

LinearCode dual_within(const LinearCode& h, const Codeword& beta) {
    if (h.length() != beta.size()) throw LengthMismatch(h.length(), beta.size());
    const LinearCode local = dual(puncture(h, beta));
    std::vector<Codeword> rows;
    rows.reserve(local.dimension());
    for (const auto& v : local.basis()) rows.push_back(Codeword::expand(v, beta));
    return LinearCode::from_generators(h.length(), rows);
}

Codeword kappa_vector(const LinearCode& h, const Codeword& beta) {
    if (h.length() != beta.size()) throw LengthMismatch(h.length(), beta.size());
    if (!is_subset(h.support(), beta)) {
        throw PreconditionFailed("kappa_vector: H is not supported inside supp(beta)");
    }
    const auto& rows = h.basis();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i; j < rows.size(); ++j) {
            if (inner(rows[i], rows[j])) {
                throw PreconditionFailed("kappa_vector: wt/2 is not linear on H (H not self-orthogonal)");
            }
        }
    }
    Codeword kappa(h.length());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((rows[i].weight() / 2) % 2 == 1) kappa.set(h.pivots()[i]);
    }
    return dual_within(h, beta).reduce(kappa);
}

}  // namespace framed
