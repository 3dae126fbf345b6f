#include "framed/selfdual.hpp"

#include "framed/quadratic.hpp"

namespace framed {

namespace {

bool q_value(const Codeword& v, bool quadratic) { return quadratic && (v.weight() / 2) % 2 == 1; }

// Grows start (totally singular, inside the even code `space`) to a maximal totally
// singular subspace of space.
LinearCode grow_totally_singular(const LinearCode& space, LinearCode w, bool quadratic,
                                 const Limits& limits) {
    std::uint64_t nodes = 0;
    auto tick = [&] {
        if (++nodes > limits.max_search_nodes) {
            throw ResourceExceeded("self-dual subcode search exceeded node budget", nodes);
        }
    };
    for (;;) {
        // Complement of W inside W^⊥ ∩ space; q restricted to it decides extendability.
        const LinearCode room = intersect(space, dual(w));
        // representatives of a basis of room/W
        std::vector<Codeword> e;
        LinearCode acc = w;
        for (const auto& v : room.basis()) {
            if (acc.insert(v)) e.push_back(w.reduce(v));
        }
        std::optional<Codeword> pick;
        for (std::size_t i = 0; i < e.size() && !pick; ++i) {
            tick();
            if (!q_value(e[i], quadratic)) pick = e[i];
        }
        for (std::size_t i = 0; i < e.size() && !pick; ++i) {
            for (std::size_t j = i + 1; j < e.size() && !pick; ++j) {
                tick();
                if (!q_value(e[i] ^ e[j], quadratic)) pick = e[i] ^ e[j];
            }
        }
        // With every single and pair anisotropic, any three basis vectors sum to a
        // singular vector.
        if (!pick && e.size() >= 3) {
            tick();
            const Codeword t = e[0] ^ e[1] ^ e[2];
            if (q_value(t, quadratic)) throw InternalError("anisotropic quadratic form of dimension > 2");
            pick = t;
        }
        if (!pick) return w;
        w.insert(*pick);
    }
}

}  // namespace

bool is_self_dual_wrt(const LinearCode& h, const Codeword& beta) {
    if (h.length() != beta.size()) throw LengthMismatch(h.length(), beta.size());
    return h.support() == beta && 2 * h.dimension() == beta.weight() && h == dual_within(h, beta);
}

std::optional<LinearCode> find_self_dual_subcode_wrt(const LinearCode& c, const Codeword& beta,
                                                     bool require_doubly_even,
                                                     const Limits& limits) {
    if (c.length() != beta.size()) throw LengthMismatch(c.length(), beta.size());
    const std::size_t m = beta.weight();
    if (m % 2 != 0) return std::nullopt;
    if (m == 0) return LinearCode(c.length());
    if (!c.contains(beta)) return std::nullopt;
    if (require_doubly_even && m % 4 != 0) return std::nullopt;

    const LinearCode local = even_subcode(puncture(subcode_supported_on(c, beta), beta));
    LinearCode start(m);
    start.insert(Codeword::all_ones(m));
    const LinearCode w = grow_totally_singular(local, start, require_doubly_even, limits);
    if (2 * w.dimension() != m) return std::nullopt;

    std::vector<Codeword> rows;
    for (const auto& v : w.basis()) rows.push_back(Codeword::expand(v, beta));
    LinearCode h = LinearCode::from_generators(c.length(), rows);
    if (!is_self_dual_wrt(h, beta) || (require_doubly_even && !h.is_doubly_even())) {
        throw InternalError("self-dual subcode search produced an invalid witness");
    }
    return h;
}

std::optional<LinearCode> extend_to_doubly_even_self_dual(const LinearCode& h, const Limits& limits) {
    const std::size_t n = h.length();
    if (n % 8 != 0) throw PreconditionFailed("length must be divisible by 8");
    if (!h.is_doubly_even()) throw PreconditionFailed("H must be doubly even");
    if (!h.contains(Codeword::all_ones(n))) throw PreconditionFailed("H must contain the all-one word");
    const LinearCode w = grow_totally_singular(even_subcode(LinearCode::full(n)), h, true, limits);
    if (2 * w.dimension() != n) return std::nullopt;
    return w;
}

}  // namespace framed
