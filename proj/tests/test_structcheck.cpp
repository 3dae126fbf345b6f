#include <doctest.h>

#include "framed/moonshine.hpp"
#include "framed/stabilizer.hpp"
#include "framed/structcheck.hpp"
#include "oracle.hpp"

using namespace framed;

namespace {

Codeword w(std::string_view bits) { return Codeword::from_bits(bits); }

Codeword block(std::size_t n, std::size_t from, std::size_t len) {
    Codeword v(n);
    for (std::size_t i = from; i < from + len; ++i) v.set(i);
    return v;
}

// D = <1, some random rows from a pool>, returned as C = D^⊥.
LinearCode dual_of_random_span(std::mt19937_64& rng, std::size_t n, const std::vector<Codeword>& pool) {
    LinearCode d = LinearCode::from_generators(n, {Codeword::all_ones(n)});
    for (const auto& r : pool) {
        if (rng() % 2) d.insert(r);
    }
    return dual(d);
}

std::vector<Codeword> lift(const LinearCode& c, std::size_t n, std::size_t offset) {
    std::vector<Codeword> out;
    for (const auto& r : c.basis()) {
        Codeword v(n);
        for (std::size_t i : r.support()) v.set(offset + i);
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("moonshine structure codes") {
    const moonshine::Frame f = moonshine::build_moonshine_codes();
    const StructureReport r = validate_structure_codes(f.c, f.d);
    CHECK(r.pass());
    CHECK(r.first_failure() == nullptr);
    CHECK(r.clauses.size() == 5);
    CHECK(is_f_admissible(f.c).pass());
    CHECK(is_f_admissible_via_dual(f.c));
    CHECK(is_holomorphic_pair(f.c, f.d));

    // D strictly inside C^⊥
    const GradedSplit s = graded_split(f.c, f.d, f.xi);
    CHECK_FALSE(is_holomorphic_pair(f.c, s.d0));
    CHECK(validate_structure_codes(f.c, s.d0).pass());

    // C^⊥ = D0 ⊔ (D1 + xi) is triply even
    LinearCode d4a = s.d0;
    REQUIRE(s.d1_rep);
    d4a.insert(*s.d1_rep ^ f.xi);
    CHECK(is_f_admissible_via_dual(dual(d4a)));
}

TEST_CASE("even code of length 16") {
    const LinearCode c = even_subcode(LinearCode::full(16));
    const LinearCode d = LinearCode::from_generators(16, {Codeword::all_ones(16)});
    CHECK(validate_structure_codes(c, d).pass());
    CHECK(is_f_admissible(c).pass());
    CHECK(is_f_admissible_via_dual(c));
    CHECK(is_holomorphic_pair(c, d));
}

TEST_CASE("failing clauses carry witnesses") {
    const LinearCode even16 = even_subcode(LinearCode::full(16));
    const LinearCode d4 = LinearCode::from_generators(16, {block(16, 0, 4)});
    const StructureReport r = validate_structure_codes(even16, d4);
    REQUIRE(r.first_failure());
    CHECK(r.first_failure()->name == "D triply even");
    CHECK(r.first_failure()->witness == block(16, 0, 4));

    // lexicographically smallest offender
    const LinearCode d2 = LinearCode::from_generators(16, {block(16, 8, 4), block(16, 0, 4) ^ block(16, 8, 4)});
    const StructureReport r2 = validate_structure_codes(even16, d2);
    CHECK(r2.first_failure()->witness == block(16, 8, 4));

    // odd C
    const StructureReport r3 = validate_structure_codes(LinearCode::full(16), LinearCode(16));
    CHECK(r3.first_failure()->name == "C even");
    CHECK(r3.first_failure()->witness == block(16, 15, 1));

    // D not inside C
    const LinearCode c = LinearCode::from_generators(16, {block(16, 0, 8)});
    const StructureReport r4 = validate_structure_codes(c, LinearCode::from_generators(16, {block(16, 8, 8)}));
    CHECK(r4.first_failure()->name == "D ⊆ C");
    CHECK(r4.first_failure()->witness == block(16, 8, 8));

    // C not inside D^⊥
    const LinearCode c5 = LinearCode::from_generators(16, {block(16, 0, 8), block(16, 7, 2)});
    const StructureReport r5 = validate_structure_codes(c5, LinearCode::from_generators(16, {block(16, 0, 8)}));
    CHECK(r5.first_failure()->name == "C ⊆ D^⊥");

    // no doubly even self-dual subcode on 1^8 inside <1^8>
    const LinearCode c6 = LinearCode::from_generators(16, {block(16, 0, 8)});
    const StructureReport r6 = validate_structure_codes(c6, c6);
    CHECK(r6.first_failure()->name == "doubly even self-dual subcodes");
    CHECK(r6.first_failure()->witness == block(16, 0, 8));

    const StructureReport r7 = is_f_admissible(even_subcode(LinearCode::full(8)));
    CHECK(r7.first_failure()->name == "16 divides n");
    CHECK_FALSE(is_f_admissible_via_dual(even_subcode(LinearCode::full(8))));
    CHECK_FALSE(is_f_admissible_via_dual(LinearCode::full(16)));  // 1 not in C^⊥
    CHECK_THROWS_AS(validate_structure_codes(even16, LinearCode(8)), LengthMismatch);
}

TEST_CASE("both admissibility routes agree on random codes of length 16 and 32") {
    std::mt19937_64 rng(51);
    const LinearCode rm14 = reed_muller(1, 4);
    const LinearCode rm15 = reed_muller(1, 5);
    std::vector<Codeword> pool32 = lift(rm14, 32, 0);
    for (const auto& v : lift(rm14, 32, 16)) pool32.push_back(v);
    int yes = 0, no = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = t % 2 ? 32 : 16;
        LinearCode c(n);
        switch (t % 5) {
            case 0: c = dual_of_random_span(rng, n, (n == 16 ? rm14 : rm15).basis()); break;
            case 1: c = dual_of_random_span(rng, n, n == 16 ? rm14.basis() : pool32); break;
            case 2: {
                // a few random doubly even words, rarely triply even
                std::vector<Codeword> pool;
                for (int k = 0; k < 3; ++k) {
                    Codeword v(n);
                    while (v.is_zero() || v.weight() % 4) v = oracle::random_word(rng, n);
                    pool.push_back(v);
                }
                c = dual_of_random_span(rng, n, pool);
                break;
            }
            case 3: c = even_subcode(oracle::random_code(rng, n, n - 1 - rng() % 4)); break;
            default: {
                // weight-8 blocks: triply even, but orthogonal to 1 only in pairs
                std::vector<Codeword> pool;
                for (std::size_t i = 0; i < n; i += 8) pool.push_back(block(n, i, 8));
                c = dual_of_random_span(rng, n, pool);
            }
        }
        const bool direct = is_f_admissible(c).pass();
        const bool via = is_f_admissible_via_dual(c);
        CHECK_MESSAGE(direct == via, "t=", t, " n=", n);
        (direct ? yes : no)++;
    }
    CHECK(yes >= 15);
    CHECK(no >= 15);
}

TEST_CASE("a passing pair has D inside P") {
    std::mt19937_64 rng(52);
    const LinearCode rm14 = reed_muller(1, 4);
    int passing = 0;
    for (int t = 0; t < 30; ++t) {
        const LinearCode c = dual_of_random_span(rng, 16, rm14.basis());
        // D a random subcode of C^⊥ containing 1
        LinearCode d = LinearCode::from_generators(16, {Codeword::all_ones(16)});
        for (const auto& r : dual(c).basis()) {
            if (rng() % 2) d.insert(r);
        }
        LinearCode e = c;
        for (int k = 0; k < 2; ++k) {
            const Codeword v = oracle::random_member(rng, dual(d));
            if (v.weight() % 2 == 0) e.insert(v);
        }
        const StructureReport r = validate_structure_codes(e, d);
        if (!r.pass()) continue;
        ++passing;
        const LinearCode p = compute_P(e, d);
        for (const auto& a : d.basis()) CHECK(p.contains(a));
    }
    const moonshine::Frame f = moonshine::build_moonshine_codes();
    const LinearCode p = compute_P(f.c, f.d);
    for (const auto& a : f.d.basis()) CHECK(p.contains(a));
    CHECK(passing >= 10);
}

TEST_CASE("extending the code C") {
    const moonshine::Frame f = moonshine::build_moonshine_codes();
    const GradedSplit s = graded_split(f.c, f.d, f.xi);

    const CodePair same = extend_structure_codes(s.c0, s.d0, s.c0);
    CHECK(same.c == s.c0);
    CHECK(same.report.pass());

    // C0 ⊂ C0 ⊔ C1 = C, still inside D0^⊥
    const CodePair bigger = extend_structure_codes(s.c0, s.d0, f.c);
    CHECK(bigger.report.pass());
    CHECK(bigger.c.dimension() == s.c0.dimension() + 1);

    // up to D0^⊥: the holomorphic pair when it validates
    const CodePair top = extend_structure_codes(s.c0, s.d0, dual(s.d0));
    CHECK(top.report.pass() == is_holomorphic_pair(top.c, top.d));

    const LinearCode even16 = even_subcode(LinearCode::full(16));
    const LinearCode ones = LinearCode::from_generators(16, {Codeword::all_ones(16)});
    const LinearCode rm24 = reed_muller(2, 4);
    const CodePair e16 = extend_structure_codes(rm24, ones, even16);
    CHECK(e16.report.pass());
    CHECK(is_holomorphic_pair(e16.c, e16.d));

    CHECK_THROWS_AS(extend_structure_codes(even16, ones, rm24), PreconditionFailed);
    CHECK_THROWS_AS(extend_structure_codes(rm24, reed_muller(1, 4), even16), PreconditionFailed);
}

TEST_CASE("orbifold codes") {
    const moonshine::Frame f = moonshine::build_moonshine_codes();
    const CodePair a4 = orbifold_codes(f.c, f.d, f.xi, f.kappa, OrbifoldKind::FourA);
    CHECK(a4.report.pass());
    CHECK(a4.c.dimension() == f.c.dimension());
    CHECK(a4.d.dimension() == f.d.dimension());
    CHECK_FALSE(a4.c.contains(f.kappa));
    CHECK(is_f_admissible_via_dual(dual(a4.d)));

    const CodePair b2 = orbifold_codes(f.c, f.d, f.xi, f.kappa, OrbifoldKind::TwoB);
    CHECK(b2.report.pass());
    CHECK(is_holomorphic_pair(b2.c, b2.d));
    CHECK(b2.c.dimension() == 42);
    CHECK(b2.d.dimension() == 6);

    // xi in D: nothing changes
    const Codeword in_d = f.d.basis().back();
    const CodePair same = orbifold_codes(f.c, f.d, in_d, Codeword(48), OrbifoldKind::FourA);
    CHECK(same.c == f.c);
    CHECK(same.d == f.d);
    CHECK_THROWS_AS(orbifold_codes(f.c, f.d, in_d, Codeword(48), OrbifoldKind::TwoB), PreconditionFailed);
}
