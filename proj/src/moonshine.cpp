#include "framed/moonshine.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "framed/modules.hpp"
#include "framed/moonshine_data.hpp"
#include "framed/quadratic.hpp"
#include "framed/selfdual.hpp"
#include "framed/stabilizer.hpp"
#include "framed/structcheck.hpp"

namespace framed::moonshine {

namespace {

Codeword blocks(const Codeword& a, const Codeword& b, const Codeword& c) { return concat({a, b, c}); }

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string enumerator_mismatch(const WeightEnumerator& got, const WeightEnumerator& want) {
    return got == want ? std::string{} : "got " + got.to_string() + ", expected " + want.to_string();
}

}  // namespace

Codeword word(std::string_view bits) { return Codeword::from_bits(bits); }

LinearCode rm14() {
    std::vector<Codeword> rows;
    for (auto r : kRM14Rows) rows.push_back(word(r));
    return LinearCode::from_generators(16, rows);
}

LinearCode p_closed_form() {
    const Codeword z(16);
    const LinearCode rm2 = reed_muller(2, 4);
    std::vector<Codeword> gens;
    for (const auto& a : rm2.basis()) {
        gens.push_back(blocks(a, z, a));
        gens.push_back(blocks(z, a, a));
    }
    const LinearCode rm1 = rm14();
    for (const auto& m : rm1.basis()) gens.push_back(blocks(z, z, m));
    return LinearCode::from_generators(kLength, gens);
}

LinearCode d0_expected() {
    std::vector<Codeword> gens{word(kFirstBlock), word(kThirdBlock)};
    for (auto a : kD0Alphas) gens.push_back(blocks(word(a), word(a), word(a)));
    return LinearCode::from_generators(kLength, gens);
}

LinearCode xi_subcode_expected() {
    std::vector<Codeword> gens;
    for (auto r : kXiSubcodeRows) gens.push_back(word(r));
    return LinearCode::from_generators(kLength, gens);
}

WeightEnumerator enumerator_from_pairs(std::span<const std::pair<int, int>> pairs) {
    WeightEnumerator w{kLength, std::vector<BigInt>(kLength + 1, BigInt{0})};
    for (const auto& [wt, coeff] : pairs) w.coeffs[static_cast<std::size_t>(wt)] = coeff;
    return w;
}

Frame build_moonshine_codes() {
    std::vector<Codeword> gens{word(kFirstBlock), word(kThirdBlock)};
    const LinearCode rm1 = rm14();
    for (const auto& a : rm1.basis()) gens.push_back(blocks(a, a, a));
    Frame f;
    f.d = LinearCode::from_generators(kLength, gens);
    f.c = dual(f.d);
    f.xi = word(kXi);
    f.kappa = word(kKappa);

    // block description of C
    const Codeword z(16);
    const LinearCode even16 = even_subcode(LinearCode::full(16));
    std::vector<Codeword> cgens;
    for (const auto& a : even16.basis()) {
        cgens.push_back(blocks(a, a, z));
        cgens.push_back(blocks(z, a, a));
    }
    const LinearCode rm2 = reed_muller(2, 4);
    for (const auto& r : rm2.basis()) cgens.push_back(blocks(z, z, r));
    if (f.d.dimension() != 7 || f.c.dimension() != 41 ||
        !(f.c == LinearCode::from_generators(kLength, cgens))) {
        throw InternalError("moonshine structure codes do not match their block description");
    }
    return f;
}

bool DemoReport::pass() const {
    if (steps.empty()) return false;
    for (const auto& s : steps) {
        if (!s.pass) return false;
    }
    return true;
}

std::string DemoReport::to_text() const {
    std::ostringstream os;
    for (const auto& s : steps) {
        os << (s.pass ? "[PASS] " : "[FAIL] ") << s.index << ". " << s.name;
        if (!s.detail.empty()) os << ": " << s.detail;
        os << '\n';
    }
    if (!mckay_thompson.is_zero()) {
        os << "McKay-Thompson series through q^{" << format_exponent(truncation) << "}:\n";
        os << mckay_thompson.to_string() << '\n';
    }
    os << (pass() ? "moonshine demo: pass" : "moonshine demo: FAIL") << '\n';
    return os.str();
}

std::string DemoReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass();
    j["truncation"] = truncation;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : steps) {
        j["steps"].push_back({{"index", s.index}, {"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    }
    j["mckay_thompson"] = nlohmann::json::array();
    for (const auto& [e, c] : mckay_thompson.terms()) {
        j["mckay_thompson"].push_back({{"exponent48", e}, {"coefficient", c.str()}});
    }
    return j.dump(2);
}

DemoReport run_demo(const Frame& frame, std::int64_t truncation, const Limits& limits) {
    DemoReport report;
    report.truncation = truncation;
    const LinearCode& c = frame.c;
    const LinearCode& d = frame.d;
    const Codeword& xi = frame.xi;
    const Codeword& kappa = frame.kappa;

    // Each step returns an empty string on success, otherwise a witness description.
    auto step = [&](const std::string& name, const std::function<std::string()>& body) {
        if (!report.pass() && !report.steps.empty()) return;
        DemoStep s{static_cast<int>(report.steps.size()) + 1, name, false, ""};
        try {
            s.detail = body();
            s.pass = s.detail.empty();
        } catch (const Error& e) {
            s.detail = std::string("error: ") + e.what();
        }
        report.steps.push_back(std::move(s));
    };

    step("xi lies in P, and P has the closed form", [&]() -> std::string {
        const LinearCode p = compute_P(c, d);
        if (!p.contains(xi)) return "xi = " + xi.to_bits() + " is not in P";
        if (p.dimension() != 27) return "dim P = " + std::to_string(p.dimension());
        if (!(p == p_closed_form())) return "P differs from {(a,b,c) : a,b,c in RM(2,4), a+b+c in RM(1,4)}";
        return {};
    });

    std::optional<GradedSplit> split;
    step("graded split of D", [&]() -> std::string {
        split = graded_split(c, d, xi);
        if (!(split->d0 == d0_expected())) return "D0 differs from the listed generators";
        if (!split->d1_rep) return "D1 is empty";
        if (!split->d0.contains(*split->d1_rep ^ word(kD1Rep))) return "D1 is not (1^8 0^8)^3 + D0";
        return {};
    });

    step("lift of xi has order 4", [&]() -> std::string {
        const int ord = order_of_lift(c, d, xi);
        return ord == 4 ? std::string{} : "order " + std::to_string(ord);
    });

    const LinearCode c0 = orthogonal_subcode(c, xi);
    const LinearCode h = subcode_supported_on(c0, xi);
    step("(C0)_xi matches its generator matrix and is self-dual w.r.t. xi", [&]() -> std::string {
        if (!(h == xi_subcode_expected())) return "(C0)_xi differs from the listed matrix";
        if (!(h == subcode_supported_on(c, xi))) return "C_xi differs from (C0)_xi";
        if (!is_self_dual_wrt(h, xi)) return "(C0)_xi is not self-dual w.r.t. xi";
        return {};
    });

    step("kappa represents wt/2 mod 2 on (C0)_xi", [&]() -> std::string {
        if (!((kappa & xi) == kappa)) return "supp(kappa) is not inside supp(xi)";
        for (const auto& r : h.basis()) {
            if (inner(kappa, r) != ((r.weight() / 2) % 2 == 1)) return "fails on " + r.to_bits();
        }
        if (!h.contains(kappa_vector(h, xi) ^ kappa)) return "kappa differs from kappa_H modulo H";
        return {};
    });

    step("C0 + kappa has exactly the 24 listed weight-2 words", [&]() -> std::string {
        const auto words = coset_words_up_to_weight(c0, kappa, 2, limits);
        std::vector<Codeword> expected;
        for (const auto& [i, j] : kWeightTwoSupports) {
            const std::size_t supp[] = {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
            expected.push_back(Codeword::from_support(kLength, supp));
        }
        std::sort(expected.begin(), expected.end());
        if (words != expected) return "found " + std::to_string(words.size()) + " words of weight <= 2";
        return {};
    });

    auto code0 = std::make_shared<const LinearCode>(c0);
    const Codeword zero(kLength);
    step("top weights and top-level dimensions", [&]() -> std::string {
        const ModuleLabel twisted = make_label(code0, xi, zero);
        const ModuleLabel shifted = make_label(code0, zero, kappa);
        const Rational tw = top_weight(twisted, limits);
        const Rational kw = top_weight(shifted, limits);
        const BigInt td = top_level_dimension(twisted, limits);
        const BigInt kd = top_level_dimension(shifted, limits);
        std::ostringstream os;
        os << "M(xi,0): " << rational_text(tw) << ", dim " << td << "; M(0,kappa): " << rational_text(kw)
           << ", dim " << kd;
        const bool ok = tw == Rational(kTwistedTopWeight.first, kTwistedTopWeight.second) &&
                        td == kTwistedTopDimension &&
                        kw == Rational(kKappaTopWeight.first, kKappaTopWeight.second) &&
                        kd == kKappaTopDimension;
        return ok ? std::string{} : os.str();
    });

    step("weight enumerators of D, D + <xi> and f", [&]() -> std::string {
        LinearCode dxi = d;
        dxi.insert(xi);
        const WeightEnumerator wd = weight_enumerator(d, limits);
        const WeightEnumerator wdxi = weight_enumerator(dxi, limits);
        WeightEnumerator f{kLength, {}};
        for (std::size_t i = 0; i <= kLength; ++i) f.coeffs.push_back(wdxi.coeffs[i] - wd.coeffs[i]);
        if (auto m = enumerator_mismatch(wd, enumerator_from_pairs(kWD)); !m.empty()) return "W_D " + m;
        if (auto m = enumerator_mismatch(wdxi, enumerator_from_pairs(kWDxi)); !m.empty()) return "W_D+xi " + m;
        if (auto m = enumerator_mismatch(f, enumerator_from_pairs(kF)); !m.empty()) return "f " + m;
        return {};
    });

    step("McKay-Thompson series", [&]() -> std::string {
        LinearCode dxi = d;
        dxi.insert(xi);
        report.mckay_thompson =
            mckay_thompson(weight_enumerator(d, limits), weight_enumerator(dxi, limits), truncation);
        for (const auto& [e, want] : kMcKayThompson) {
            if (e > truncation) continue;
            const BigInt got = report.mckay_thompson.coeff(e);
            if (got != want) {
                return "coefficient of q^{" + format_exponent(e) + "} is " + got.str() + ", expected " +
                       std::to_string(want);
            }
        }
        return {};
    });

    step("fusion table", [&]() -> std::string {
        const ModuleLabel m00 = make_label(code0, zero, zero);
        const ModuleLabel m0k = make_label(code0, zero, kappa);
        const ModuleLabel mx0 = make_label(code0, xi, zero);
        const ModuleLabel mxk = make_label(code0, xi, kappa);
        const struct {
            const char* name;
            const ModuleLabel& a;
            const ModuleLabel& b;
            const ModuleLabel& want;
        } rules[] = {
            {"M(0,kappa) x M(0,kappa)", m0k, m0k, m00},
            {"M(0,kappa) x M(xi,0)", m0k, mx0, mxk},
            {"M(xi,0) x M(xi,0)", mx0, mx0, m0k},
            {"M(xi,0) x M(xi,kappa)", mx0, mxk, m00},
        };
        for (const auto& r : rules) {
            const ModuleSum got = fuse(r.a, r.b, limits);
            if (got.size() != 1 || !(got.begin()->first == r.want) || got.begin()->second != 1) {
                return std::string(r.name) + " is not " + r.want.to_string();
            }
        }
        if (mx0 == mxk) return "M(xi,0) and M(xi,kappa) coincide";
        return {};
    });

    step("orbifold structure codes", [&]() -> std::string {
        const CodePair four = orbifold_codes(c, d, xi, kappa, OrbifoldKind::FourA, limits);
        if (!four.report.pass()) return "4A pair fails: " + four.report.first_failure()->name;
        if (!(four.c == dual(four.d))) return "4A pair is not holomorphic";
        if (!is_f_admissible_via_dual(four.c, limits)) return "dual of the 4A code is not triply even";
        const CodePair two = orbifold_codes(c, d, xi, kappa, OrbifoldKind::TwoB, limits);
        if (!is_holomorphic_pair(two.c, two.d, limits)) return "2B pair is not holomorphic";
        return {};
    });

    return report;
}

DemoReport run_demo(std::int64_t truncation, const Limits& limits) {
    return run_demo(build_moonshine_codes(), truncation, limits);
}

}  // namespace framed::moonshine
