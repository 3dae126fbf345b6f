#include <doctest.h>

#include "framed/moonshine.hpp"
#include "framed/moonshine_data.hpp"
#include "framed/qseries.hpp"
#include "oracle.hpp"

using namespace framed;

namespace {

// Plain power series in q^{1/2}, index i meaning q^{i/2}.
using Poly = std::vector<std::int64_t>;

Poly mul(const Poly& a, const Poly& b, std::size_t len) {
    Poly r(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// prod_{n>=0} (1 + sign q^{n+1/2})
Poly half_odd(int sign, std::size_t len) {
    Poly p(len, 0);
    p[0] = 1;
    for (std::size_t k = 1; k < len; k += 2) {
        Poly f(len, 0);
        f[0] = 1;
        f[k] = sign;
        p = mul(p, f, len);
    }
    return p;
}

// Character of V_C by summing over codewords: sum_c L0^{n-wt c} Lh^{wt c}, without q^{-n/48}.
Poly brute_character(const framed::LinearCode& c, std::size_t len) {
    const Poly a = half_odd(1, len), b = half_odd(-1, len);
    Poly l0(len), lh(len);
    for (std::size_t i = 0; i < len; ++i) {
        l0[i] = (a[i] + b[i]) / 2;
        lh[i] = (a[i] - b[i]) / 2;
    }
    Poly total(len, 0);
    for (auto m : oracle::members(c)) {
        Poly term(len, 0);
        term[0] = 1;
        const int wt = oracle::weight(m);
        for (int i = 0; i < wt; ++i) term = mul(term, lh, len);
        for (std::size_t i = wt; i < c.length(); ++i) term = mul(term, l0, len);
        for (std::size_t i = 0; i < len; ++i) total[i] += term[i];
    }
    return total;
}

// eta(2t)^48 / (eta(t) eta(4t))^24 - 24 as a plain q-series starting at q^{-1}.
Poly eta_quotient_4a(std::size_t len) {
    auto eta_pow = [&](std::size_t k, int power) {
        Poly p(len, 0);
        p[0] = 1;
        for (std::size_t n = 1; k * n < len; ++n) {
            Poly f(len, 0);
            if (power > 0) {
                f[0] = 1;
                f[k * n] = -1;
            } else {
                for (std::size_t m = 0; m < len; m += k * n) f[m] = 1;
            }
            for (int i = 0; i < std::abs(power); ++i) p = mul(p, f, len);
        }
        return p;
    };
    Poly s = mul(mul(eta_pow(2, 48), eta_pow(1, -24), len), eta_pow(4, -24), len);
    s[1] -= 24;
    return s;
}

}  // namespace

TEST_CASE("arithmetic and precision") {
    const QSeries a = QSeries::monomial(-48, 1, 96) + QSeries::monomial(24, 3, 96);
    const QSeries b = QSeries::monomial(0, 2, 48);
    CHECK(a.valuation() == -48);
    CHECK(a.coeff(24) == 3);
    CHECK(a.coeff(25) == 0);
    CHECK_THROWS_AS(a.coeff(97), PreconditionFailed);
    const QSeries s = a + b;
    CHECK(s.precision() == 48);
    const QSeries p = a * b;
    // exact through min(96 + 0, 48 - 48)
    CHECK(p.precision() == 0);
    CHECK(p.coeff(-48) == 2);
    CHECK(a.shift(48).coeff(0) == 1);
    CHECK((a - a).is_zero());
    CHECK(QSeries(10).valuation() == 11);
    CHECK((a * BigInt(4)).exact_div(4) == a);
    CHECK_THROWS_AS((a * BigInt(2)).exact_div(4), InternalError);
    CHECK(format_exponent(36) == "3/4");
    CHECK(format_exponent(-48) == "-1");
    CHECK(format_exponent(24) == "1/2");
    CHECK(exact_log2(BigInt(128)) == 7);
    CHECK_THROWS_AS(exact_log2(BigInt(12)), InternalError);
    CHECK(a.to_string() == "1 q^{-1}\n3 q^{1/2}");
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(71);
    auto rand_series = [&] {
        QSeries s(200 + static_cast<std::int64_t>(rng() % 100));
        for (int i = 0; i < 8; ++i) {
            s += QSeries::monomial(static_cast<std::int64_t>(rng() % 150) - 50,
                                   BigInt(static_cast<int>(rng() % 21) - 10), 400);
        }
        return s;
    };
    for (int t = 0; t < 50; ++t) {
        const QSeries x = rand_series(), y = rand_series(), z = rand_series();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x.pow(3) == x * x * x);
    }
}

TEST_CASE("half-odd products") {
    const QSeries plus = half_odd_product(1, 240);
    const std::vector<int> first{1, 1, 0, 1, 1, 1};
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(plus.coeff(24 * static_cast<std::int64_t>(i)) == first[i]);
    const QSeries minus = half_odd_product(-1, 240);
    const std::size_t len = 11;
    const Poly pa = half_odd(1, len), pb = half_odd(-1, len);
    for (std::size_t i = 0; i < len; ++i) {
        CHECK(plus.coeff(24 * static_cast<std::int64_t>(i)) == pa[i]);
        CHECK(minus.coeff(24 * static_cast<std::int64_t>(i)) == pb[i]);
    }
    // the product has only integral powers of q
    const QSeries ab = plus * minus;
    for (const auto& [e, c] : ab.terms()) CHECK(e % 48 == 0);
    CHECK(product_half_odd(1, 200).coeff(-1) == 1);
}

TEST_CASE("code characters: direct, dual route and a codeword sum agree") {
    std::mt19937_64 rng(72);
    const std::size_t len = 13;  // through q^6
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const LinearCode c = oracle::random_code(rng, n, rng() % (n + 1));
        const std::int64_t T = 24 * static_cast<std::int64_t>(len - 1) - static_cast<std::int64_t>(n);
        const QSeries direct = code_voa_character(weight_enumerator(c), T);
        const QSeries via = code_voa_character_via_dual(weight_enumerator(dual(c)), dual(c).dimension(), T);
        CHECK(direct == via);
        const Poly brute = brute_character(c, len);
        for (std::size_t i = 0; i < len; ++i) {
            CHECK(direct.coeff(24 * static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n)) == brute[i]);
        }
    }
    // L(1/2, 0) alone
    const QSeries l0 = code_voa_character(weight_enumerator(LinearCode(1)), 200);
    CHECK(l0.coeff(-1) == 1);
    CHECK(l0.coeff(23) == 0);
    CHECK(l0.coeff(47) == 0);
    CHECK(l0.coeff(95) == 1);
    CHECK(l0.coeff(143) == 1);
    CHECK(l0.coeff(191) == 2);
}

TEST_CASE("McKay-Thompson series of the order-4 element") {
    using namespace framed::moonshine;
    const WeightEnumerator wd = enumerator_from_pairs(kWD);
    const WeightEnumerator wdxi = enumerator_from_pairs(kWDxi);
    const Frame f = build_moonshine_codes();
    CHECK(weight_enumerator(f.d) == wd);
    LinearCode dxi = f.d;
    dxi.insert(f.xi);
    CHECK(weight_enumerator(dxi) == wdxi);

    const QSeries mt = mckay_thompson(wd, wdxi, 480);
    const Poly eta = eta_quotient_4a(12);
    for (std::size_t i = 0; i < eta.size() - 1; ++i) {
        CHECK(mt.coeff(48 * (static_cast<std::int64_t>(i) - 1)) == eta[i]);
    }
    CHECK(mt.coeff(-48) == 1);
    CHECK(mt.coeff(0) == 0);
    CHECK(mt.coeff(48) == 276);
    CHECK(mt.coeff(96) == 2048);
    for (const auto& [e, c] : mt.terms()) CHECK(e % 48 == 0);

    CHECK(mckay_thompson(wd, wd, 200).is_zero());

    // V_C for the moonshine C: dual data against the MacWilliams transform of W_D
    const QSeries via = code_voa_character_via_dual(wd, 7, 200);
    const QSeries direct = code_voa_character(macwilliams(wd, 7), 200);
    CHECK(via == direct);
}
