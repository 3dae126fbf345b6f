#include "framed/structcheck.hpp"

#include "framed/selfdual.hpp"
#include "framed/stabilizer.hpp"

namespace framed {

namespace {

std::optional<Codeword> first_row_outside(const LinearCode& rows, const LinearCode& target) {
    for (const auto& r : rows.basis()) {
        if (!target.contains(r)) return r;
    }
    return std::nullopt;
}

void keep_min(std::optional<Codeword>& slot, const Codeword& w) {
    if (!slot || w < *slot) slot = w;
}

}  // namespace

bool StructureReport::pass() const { return first_failure() == nullptr; }

const Clause* StructureReport::first_failure() const {
    for (const auto& c : clauses) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

StructureReport validate_structure_codes(const LinearCode& c, const LinearCode& d, const Limits& limits) {
    if (c.length() != d.length()) throw LengthMismatch(c.length(), d.length());
    StructureReport report;

    {
        Clause cl{"C even", true, std::nullopt, ""};
        for (const auto& r : c.basis()) {
            if (r.weight() % 2 != 0) {
                // smallest word of the odd coset
                cl.pass = false;
                cl.witness = even_subcode(c).reduce(r);
                cl.detail = "codeword of odd weight";
                break;
            }
        }
        report.clauses.push_back(std::move(cl));
    }
    {
        Clause cl{"D triply even", true, std::nullopt, ""};
        d.for_each_codeword(
            [&](const Codeword& w) {
                if (w.weight() % 8 != 0) keep_min(cl.witness, w);
            },
            limits);
        if (cl.witness) {
            cl.pass = false;
            cl.detail = "word of D with weight " + std::to_string(cl.witness->weight());
        }
        report.clauses.push_back(std::move(cl));
    }
    {
        Clause cl{"D ⊆ C", true, first_row_outside(d, c), ""};
        if (cl.witness) {
            cl.pass = false;
            cl.detail = "basis word of D not in C";
        }
        report.clauses.push_back(std::move(cl));
    }
    {
        Clause cl{"C ⊆ D^⊥", true, first_row_outside(c, dual(d)), ""};
        if (cl.witness) {
            cl.pass = false;
            cl.detail = "basis word of C not orthogonal to D";
        }
        report.clauses.push_back(std::move(cl));
    }
    {
        Clause cl{"doubly even self-dual subcodes", true, std::nullopt, ""};
        d.for_each_codeword(
            [&](const Codeword& alpha) {
                if (alpha.is_zero()) return;
                if (cl.witness && *cl.witness < alpha) return;
                if (!find_self_dual_subcode_wrt(c, alpha, true, limits)) keep_min(cl.witness, alpha);
            },
            limits);
        if (cl.witness) {
            cl.pass = false;
            cl.detail = "C_alpha has no doubly even subcode self-dual w.r.t. alpha";
        }
        report.clauses.push_back(std::move(cl));
    }
    return report;
}

StructureReport is_f_admissible(const LinearCode& c, const Limits& limits) {
    Clause len{"16 divides n", c.length() % 16 == 0, std::nullopt, ""};
    if (!len.pass) len.detail = "length " + std::to_string(c.length());
    StructureReport report = validate_structure_codes(c, dual(c), limits);
    report.clauses.insert(report.clauses.begin(), std::move(len));
    return report;
}

bool is_f_admissible_via_dual(const LinearCode& c, const Limits& limits) {
    if (c.length() % 16 != 0) return false;
    const LinearCode d = dual(c);
    if (!d.contains(Codeword::all_ones(c.length()))) return false;
    bool triply_even = true;
    d.for_each_codeword([&](const Codeword& w) { triply_even = triply_even && w.weight() % 8 == 0; }, limits);
    return triply_even;
}

bool is_holomorphic_pair(const LinearCode& c, const LinearCode& d, const Limits& limits) {
    return c == dual(d) && validate_structure_codes(c, d, limits).pass();
}

CodePair extend_structure_codes(const LinearCode& c, const LinearCode& d, const LinearCode& e,
                                const Limits& limits) {
    if (c.length() != e.length()) throw LengthMismatch(c.length(), e.length());
    if (first_row_outside(c, e)) throw PreconditionFailed("C is not contained in E");
    if (first_row_outside(e, dual(d))) throw PreconditionFailed("E is not contained in D^⊥");
    return {e, d, validate_structure_codes(e, d, limits)};
}

CodePair orbifold_codes(const LinearCode& c, const LinearCode& d, const Codeword& xi,
                        const Codeword& kappa, OrbifoldKind kind, const Limits& limits) {
    const GradedSplit s = graded_split(c, d, xi);
    LinearCode c_new = s.c0;
    LinearCode d_new = s.d0;
    if (kind == OrbifoldKind::FourA) {
        if (s.c1_rep && !c_new.insert(*s.c1_rep ^ kappa)) {
            throw PreconditionFailed("C1 + kappa meets C0; the union is not a code");
        }
        if (s.d1_rep && !d_new.insert(*s.d1_rep ^ xi)) {
            throw PreconditionFailed("D1 + xi meets D0; the union is not a code");
        }
    } else {
        c_new = c;
        if (!c_new.insert(kappa)) throw PreconditionFailed("kappa already lies in C");
    }
    StructureReport report = validate_structure_codes(c_new, d_new, limits);
    return {std::move(c_new), std::move(d_new), std::move(report)};
}

}  // namespace framed
