#include <doctest.h>

#include "framed/quadratic.hpp"
#include "oracle.hpp"

using namespace framed;

namespace {

Codeword w(std::string_view bits) { return Codeword::from_bits(bits); }

int brute_epsilon(const Codeword& a, const Codeword& b) {
    int m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) m += a.test(i) && b.test(j);
    }
    return m % 2 ? -1 : 1;
}

// Every word of length n, in counting order.
std::vector<Codeword> all_words(std::size_t n) {
    std::vector<Codeword> out;
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) out.push_back(oracle::from_mask(m, n));
    return out;
}

}  // namespace

TEST_CASE("epsilon values") {
    CHECK(epsilon(w("10"), w("01")).sign == 1);
    CHECK(epsilon(w("01"), w("10")).sign == -1);
    CHECK(epsilon(w("1100"), w("1100")).sign == -1);
    for (const auto& b : all_words(5)) CHECK(epsilon(Codeword(5), b).sign == 1);
    CHECK_THROWS_AS(epsilon(w("1"), w("10")), LengthMismatch);
}

TEST_CASE("epsilon agrees with direct counting across word boundaries") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 200;
        Codeword a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() & 1U) a.set(i);
            if (rng() & 1U) b.set(i);
        }
        CHECK(epsilon(a, b).sign == brute_epsilon(a, b));
    }
}

TEST_CASE("epsilon is bilinear and satisfies the commutation identities") {
    const auto words8 = all_words(8);
    std::mt19937_64 rng(22);
    for (int t = 0; t < 2000; ++t) {
        const Codeword& a = words8[rng() % words8.size()];
        const Codeword& a2 = words8[rng() % words8.size()];
        const Codeword& b = words8[rng() % words8.size()];
        CHECK(epsilon(a ^ a2, b) == epsilon(a, b) * epsilon(a2, b));
        CHECK(epsilon(b, a ^ a2) == epsilon(b, a) * epsilon(b, a2));
    }
    // general commutation and the diagonal, exhaustive for n = 6
    for (const auto& a : all_words(6)) {
        const std::size_t wa = a.weight();
        CHECK(epsilon(a, a).sign == ((wa * (wa - (wa > 0 ? 1 : 0)) / 2) % 2 ? -1 : 1));
        for (const auto& b : all_words(6)) {
            const int e = (inner(a, b) + wa * b.weight()) % 2;
            CHECK((epsilon(a, b) * epsilon(b, a)).sign == (e ? -1 : 1));
        }
    }
}

TEST_CASE("commutation on even words is exhaustive for n = 10") {
    std::vector<Codeword> even;
    for (const auto& v : all_words(10)) {
        if (v.weight() % 2 == 0) even.push_back(v);
    }
    std::size_t failures = 0;
    for (const auto& a : even) {
        for (const auto& b : even) {
            if ((epsilon(a, b) * epsilon(b, a)).sign != (inner(a, b) ? -1 : 1)) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("2-cocycle identity, exhaustive for n = 6") {
    const auto words = all_words(6);
    std::size_t failures = 0;
    for (const auto& a : words) {
        for (const auto& b : words) {
            for (const auto& c : words) {
                if (epsilon(a, b) * epsilon(a ^ b, c) != epsilon(b, c) * epsilon(a, b ^ c)) ++failures;
            }
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("radical") {
    const LinearCode sd = LinearCode::from_generators(4, {w("1100"), w("0011")});
    CHECK(radical(sd) == sd);
    const LinearCode c = LinearCode::from_generators(5, {w("11000"), w("00110"), w("00101")});
    CHECK(radical(c) == LinearCode::from_generators(5, {w("11000")}));

    // <110, 011>: brute force over its four words
    const LinearCode small = LinearCode::from_generators(3, {w("110"), w("011")});
    const auto mem = oracle::members(small);
    std::vector<oracle::Mask> rad;
    for (auto a : mem) {
        if (std::none_of(mem.begin(), mem.end(), [&](oracle::Mask b) { return oracle::odd(a & b); })) rad.push_back(a);
    }
    CHECK(oracle::members(radical(small)) == rad);
}

TEST_CASE("maximal self-orthogonal subcode") {
    const LinearCode even4 = even_subcode(LinearCode::full(4));
    const LinearCode h = maximal_self_orthogonal_subcode(even4);
    CHECK(h.dimension() == 2);
    CHECK(h.is_self_orthogonal());
    CHECK(h.contains(w("1111")));
    const LinearCode so = LinearCode::from_generators(8, {w("11110000"), w("00001111")});
    CHECK(maximal_self_orthogonal_subcode(so) == so);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const LinearCode c = oracle::random_code(rng, n, rng() % (n + 1));
        const LinearCode m = maximal_self_orthogonal_subcode(c);
        CHECK(m.is_self_orthogonal());
        for (const auto& r : radical(c).basis()) CHECK(m.contains(r));
        for (const auto& r : m.basis()) CHECK(c.contains(r));
        // nothing in C extends it
        const auto mem = oracle::members(c);
        const auto hm = oracle::members(m);
        for (auto v : mem) {
            if (oracle::contains(hm, v) || oracle::odd(v)) continue;
            const bool orth = std::none_of(hm.begin(), hm.end(), [&](oracle::Mask h) { return oracle::odd(h & v); });
            CHECK_FALSE(orth);
        }
    }
}

TEST_CASE("kappa vectors") {
    const Codeword beta = w("1111");
    CHECK(kappa_vector(LinearCode::from_generators(4, {w("1111")}), beta) == w("0000"));
    CHECK(kappa_vector(LinearCode::from_generators(4, {w("1100")}), beta) == w("0100"));
    CHECK_THROWS_AS(kappa_vector(LinearCode::from_generators(4, {w("1100"), w("0110")}), beta),
                    PreconditionFailed);
    CHECK_THROWS_AS(kappa_vector(LinearCode::from_generators(4, {w("1100")}), w("0111")), PreconditionFailed);

    // lexicographic minimality, checked against all candidates on supp(beta)
    std::mt19937_64 rng(24);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const Codeword b = oracle::random_word(rng, n);
        const LinearCode h = maximal_self_orthogonal_subcode(subcode_supported_on(oracle::random_code(rng, n, rng() % (n + 1)), b));
        const Codeword k = kappa_vector(h, b);
        std::optional<Codeword> best;
        for (const auto& v : all_words(n)) {
            if (!((v & b) == v)) continue;
            bool ok = true;
            for (const auto& r : h.basis()) ok = ok && inner(v, r) == ((r.weight() / 2) % 2 == 1);
            if (ok && (!best || v < *best)) best = v;
        }
        REQUIRE(best);
        CHECK(k == *best);

        // independent of the generator presentation
        std::vector<Codeword> gens = h.basis();
        for (std::size_t i = 1; i < gens.size(); ++i) gens[i] ^= gens[i - 1];
        std::reverse(gens.begin(), gens.end());
        CHECK(kappa_vector(LinearCode::from_generators(n, gens), b) == k);
    }
}

TEST_CASE("radical lemma: C_beta + H^{⊥β} = R^{⊥β}, exhaustive supports for n <= 10") {
    std::mt19937_64 rng(25);
    std::size_t checked = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const LinearCode c = even_subcode(oracle::random_code(rng, n, rng() % (n + 1)));
        for (const auto& beta : all_words(n)) {
            const LinearCode cb = subcode_supported_on(c, beta);
            const LinearCode h = maximal_self_orthogonal_subcode(cb);
            CHECK(sum_codes(cb, dual_within(h, beta)) == dual_within(radical(cb), beta));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}
