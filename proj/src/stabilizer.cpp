#include "framed/stabilizer.hpp"

#include <algorithm>

namespace framed {

namespace {

void require_in_P(const LinearCode& c, const LinearCode& d, const Codeword& xi) {
    if (xi.size() != c.length()) throw LengthMismatch(c.length(), xi.size());
    if (!compute_P(c, d).contains(xi)) throw PreconditionFailed("xi is not in P");
}

// Values of alpha -> wt(alpha·xi)/2 mod 2 on the basis of D, after checking that the
// map is a well-defined linear functional.
std::vector<bool> quarter_functional(const LinearCode& c, const LinearCode& d, const Codeword& xi) {
    const LinearCode c_perp = dual(c);
    for (const auto& a : d.basis()) {
        if (!c_perp.contains(a)) throw PreconditionFailed("D is not contained in C^⊥");
    }
    const auto& rows = d.basis();
    std::vector<bool> values;
    values.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Codeword ax = rows[i] & xi;
        if (ax.weight() % 2 != 0) throw PreconditionFailed("alpha·xi has odd weight; C is not even");
        values.push_back((ax.weight() / 2) % 2 == 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if ((ax & rows[j]).weight() % 2 != 0) {
                throw InternalError("wt(alpha·xi)/2 mod 2 is not linear on D");
            }
        }
    }
    return values;
}

}  // namespace

LinearCode compute_P(const LinearCode& c, const LinearCode& d) {
    if (c.length() != d.length()) throw LengthMismatch(c.length(), d.length());
    const LinearCode checks = dual(c);
    LinearCode constraints(c.length());
    for (const auto& a : d.basis()) {
        for (const auto& h : checks.basis()) constraints.insert(a & h);
    }
    return dual(constraints);
}

int order_of_lift(const LinearCode& c, const LinearCode& d, const Codeword& xi) {
    require_in_P(c, d, xi);
    if (dual(c).contains(xi)) return 1;
    const auto f = quarter_functional(c, d, xi);
    return std::any_of(f.begin(), f.end(), [](bool b) { return b; }) ? 4 : 2;
}

bool commute_lifts(const LinearCode& c, const LinearCode& d, const Codeword& xi1, const Codeword& xi2) {
    require_in_P(c, d, xi1);
    require_in_P(c, d, xi2);
    const Codeword both = xi1 & xi2;
    return std::all_of(d.basis().begin(), d.basis().end(),
                       [&](const Codeword& a) { return (a & both).weight() % 2 == 0; });
}

StabilizerDescription describe_stabilizer(const LinearCode& c, const LinearCode& d) {
    if (c.length() != d.length()) throw LengthMismatch(c.length(), d.length());
    const std::size_t n = c.length();
    const LinearCode c_perp = dual(c);

    StabilizerDescription out;
    out.p = compute_P(c, d);
    for (const auto& h : c_perp.basis()) {
        if (!out.p.contains(h)) throw InternalError("C^⊥ is not contained in P");
    }
    out.tau_rank = n - dual(d).dimension();
    out.sigma_rank = out.p.dimension() - c_perp.dimension();
    out.group_order = BigInt{1} << (out.tau_rank + out.sigma_rank);

    std::vector<Codeword> reduced;
    for (const auto& row : out.p.basis()) reduced.push_back(c_perp.reduce(row));
    out.generators = LinearCode::from_generators(n, reduced).basis();
    if (out.generators.size() != out.sigma_rank) throw InternalError("transversal of P/C^⊥ has wrong size");

    for (const auto& g : out.generators) {
        const int ord = order_of_lift(c, d, g);
        for (const auto& h : c_perp.basis()) {
            if (order_of_lift(c, d, g ^ h) != ord) throw InternalError("lift order depends on the representative");
        }
        out.orders.push_back(ord);
    }
    const std::size_t k = out.generators.size();
    out.noncommuting.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool nc = !commute_lifts(c, d, out.generators[i], out.generators[j]);
            out.noncommuting[i][j] = out.noncommuting[j][i] = nc;
        }
    }
    return out;
}

GradedSplit graded_split(const LinearCode& c, const LinearCode& d, const Codeword& xi) {
    require_in_P(c, d, xi);
    GradedSplit s;
    s.xi = xi;
    s.c0 = orthogonal_subcode(c, xi);
    for (const auto& r : c.basis()) {
        if (inner(r, xi)) {
            s.c1_rep = s.c0.reduce(r);
            break;
        }
    }

    const auto f = quarter_functional(c, d, xi);
    const auto& rows = d.basis();
    std::vector<Codeword> kernel;
    std::optional<Codeword> odd;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!f[i]) {
            kernel.push_back(rows[i]);
        } else if (!odd) {
            odd = rows[i];
        } else {
            kernel.push_back(rows[i] ^ *odd);
        }
    }
    s.d0 = LinearCode::from_generators(d.length(), kernel);
    if (odd) s.d1_rep = s.d0.reduce(*odd);
    return s;
}

std::vector<std::pair<Codeword, int>> graded_index_set(const GradedSplit& s, const Limits& limits) {
    std::vector<std::pair<Codeword, int>> out;
    s.d0.for_each_codeword(
        [&](const Codeword& a) {
            out.emplace_back(a, 0);
            out.emplace_back(a, 2);
            if (s.d1_rep) {
                out.emplace_back(a ^ *s.d1_rep, 1);
                out.emplace_back(a ^ *s.d1_rep, 3);
            }
        },
        limits);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace framed
