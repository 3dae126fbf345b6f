#include "framed/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace framed {

namespace {

// Precision of exact polynomials; large enough never to bind, small enough to add safely.
constexpr std::int64_t kExact = std::int64_t{1} << 40;

QSeries one_plus(int sign, std::int64_t exponent) {
    QSeries f = QSeries::monomial(0, 1, kExact);
    f += QSeries::monomial(exponent, sign, kExact);
    return f;
}

}  // namespace

QSeries QSeries::monomial(std::int64_t exponent, BigInt coeff, std::int64_t precision) {
    QSeries s(precision);
    s.set(exponent, coeff);
    s.normalize();
    return s;
}

void QSeries::set(std::int64_t exponent, const BigInt& value) {
    if (exponent > precision_) return;
    if (coeffs_.empty()) {
        base_ = exponent;
        coeffs_.push_back(value);
        return;
    }
    if (exponent < base_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(base_ - exponent), BigInt{0});
        base_ = exponent;
    }
    const auto idx = static_cast<std::size_t>(exponent - base_);
    if (idx >= coeffs_.size()) coeffs_.resize(idx + 1, BigInt{0});
    coeffs_[idx] = value;
}

void QSeries::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        base_ += static_cast<std::int64_t>(lead);
    }
    if (coeffs_.empty()) base_ = 0;
}

std::int64_t QSeries::valuation() const { return coeffs_.empty() ? precision_ + 1 : base_; }

BigInt QSeries::coeff(std::int64_t exponent) const {
    if (exponent > precision_) {
        throw PreconditionFailed("coefficient of q^{" + format_exponent(exponent) +
                                 "} lies beyond the series precision");
    }
    if (coeffs_.empty() || exponent < base_) return 0;
    const auto idx = static_cast<std::size_t>(exponent - base_);
    return idx < coeffs_.size() ? coeffs_[idx] : BigInt{0};
}

std::vector<std::pair<std::int64_t, BigInt>> QSeries::terms() const {
    std::vector<std::pair<std::int64_t, BigInt>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) out.emplace_back(base_ + static_cast<std::int64_t>(i), coeffs_[i]);
    }
    return out;
}

bool QSeries::is_zero() const { return coeffs_.empty(); }

QSeries& QSeries::operator+=(const QSeries& rhs) {
    precision_ = std::min(precision_, rhs.precision_);
    QSeries out(precision_);
    for (const auto& [e, c] : terms()) out.set(e, c);
    for (const auto& [e, c] : rhs.terms()) {
        if (e <= precision_) out.set(e, out.coeff(e) + c);
    }
    out.normalize();
    return *this = std::move(out);
}

QSeries& QSeries::operator-=(const QSeries& rhs) { return *this += rhs * BigInt{-1}; }

QSeries& QSeries::operator*=(const BigInt& k) {
    for (auto& c : coeffs_) c *= k;
    normalize();
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::int64_t prec =
        std::min({a.precision_ + b.valuation(), b.precision_ + a.valuation(), kExact});
    QSeries out(prec);
    const auto ta = a.terms();
    const auto tb = b.terms();
    if (ta.empty() || tb.empty()) return out;
    const std::int64_t lo = ta.front().first + tb.front().first;
    if (lo > prec) return out;
    std::vector<BigInt> acc(static_cast<std::size_t>(prec - lo + 1), BigInt{0});
    for (const auto& [ea, ca] : ta) {
        for (const auto& [eb, cb] : tb) {
            const std::int64_t e = ea + eb;
            if (e > prec) break;
            acc[static_cast<std::size_t>(e - lo)] += ca * cb;
        }
    }
    out.base_ = lo;
    out.coeffs_ = std::move(acc);
    out.normalize();
    return out;
}

QSeries QSeries::exact_div(const BigInt& k) const {
    if (k == 0) throw PreconditionFailed("division of a q-series by zero");
    QSeries out = *this;
    for (auto& c : out.coeffs_) {
        if (c % k != 0) throw InternalError("q-series coefficient " + c.str() + " is not divisible by " + k.str());
        c /= k;
    }
    return out;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries result = monomial(0, 1, kExact);
    QSeries base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

QSeries QSeries::shift(std::int64_t delta) const {
    QSeries out = *this;
    out.precision_ = std::min(precision_, kExact) + delta;
    if (!out.coeffs_.empty()) out.base_ += delta;
    return out;
}

QSeries QSeries::truncated(std::int64_t precision) const {
    QSeries out(std::min(precision, precision_));
    for (const auto& [e, c] : terms()) out.set(e, c);
    out.normalize();
    return out;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first) os << '\n';
        first = false;
        os << c << " q^{" << format_exponent(e) << '}';
    }
    return os.str();
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.precision_ == b.precision_ && a.terms() == b.terms();
}

std::string format_exponent(std::int64_t e) {
    const std::int64_t g = std::gcd(e, std::int64_t{48});
    const std::int64_t num = e / g;
    const std::int64_t den = 48 / g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

QSeries half_odd_product(int sign, std::int64_t precision) {
    QSeries p = QSeries::monomial(0, 1, precision);
    for (std::int64_t e = 24; e <= precision; e += 48) p = p * one_plus(sign, e);
    return p;
}

QSeries product_half_odd(int sign, std::int64_t T) { return half_odd_product(sign, T + 1).shift(-1); }

QSeries evaluate_homogeneous(const std::vector<BigInt>& coeffs, const QSeries& x, const QSeries& y,
                             std::int64_t T) {
    if (coeffs.empty()) throw PreconditionFailed("empty enumerator");
    const std::size_t n = coeffs.size() - 1;
    const std::int64_t inner_prec = T + static_cast<std::int64_t>(n);
    if (x.valuation() < 0 || y.valuation() < 0) throw PreconditionFailed("arguments must have valuation >= 0");
    if (x.precision() < inner_prec || y.precision() < inner_prec) {
        throw PreconditionFailed("arguments are not precise enough for the requested truncation");
    }
    const QSeries xt = x.truncated(inner_prec);
    const QSeries yt = y.truncated(inner_prec);
    std::vector<QSeries> xp{QSeries::monomial(0, 1, inner_prec)};
    std::vector<QSeries> yp{QSeries::monomial(0, 1, inner_prec)};
    for (std::size_t i = 1; i <= n; ++i) {
        xp.push_back(xp.back() * xt);
        yp.push_back(yp.back() * yt);
    }
    QSeries sum(inner_prec);
    for (std::size_t w = 0; w <= n; ++w) {
        if (coeffs[w] == 0) continue;
        sum += (xp[n - w] * yp[w]) * coeffs[w];
    }
    QSeries out = sum.shift(-static_cast<std::int64_t>(n)).truncated(T);
    if (out.precision() < T) throw InternalError("lost precision while evaluating an enumerator");
    return out;
}

QSeries code_voa_character(const WeightEnumerator& w, std::int64_t T) {
    const std::int64_t prec = T + static_cast<std::int64_t>(w.n);
    const QSeries plus = half_odd_product(1, prec);
    const QSeries minus = half_odd_product(-1, prec);
    const QSeries x = (plus + minus).exact_div(2);
    const QSeries y = (plus - minus).exact_div(2);
    return evaluate_homogeneous(w.coeffs, x, y, T);
}

QSeries code_voa_character_via_dual(const WeightEnumerator& w_dual, std::size_t k, std::int64_t T) {
    const std::int64_t prec = T + static_cast<std::int64_t>(w_dual.n);
    const QSeries value = evaluate_homogeneous(w_dual.coeffs, half_odd_product(1, prec),
                                               half_odd_product(-1, prec), T);
    return value.exact_div(BigInt{1} << k);
}

QSeries mckay_thompson(const WeightEnumerator& w_d, const WeightEnumerator& w_dxi, std::int64_t T) {
    if (w_d.n != w_dxi.n || w_d.coeffs.size() != w_dxi.coeffs.size()) {
        throw LengthMismatch(w_d.n, w_dxi.n);
    }
    std::vector<BigInt> f(w_d.coeffs.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = w_dxi.coeffs[i] - w_d.coeffs[i];
    const std::size_t k = exact_log2(w_d.total());
    const std::int64_t prec = T + static_cast<std::int64_t>(w_d.n);
    const QSeries value =
        evaluate_homogeneous(f, half_odd_product(1, prec), half_odd_product(-1, prec), T);
    return value.exact_div(BigInt{1} << k);
}

std::size_t exact_log2(const BigInt& v) {
    if (v <= 0 || (v & (v - 1)) != 0) throw InternalError("expected a power of two, got " + v.str());
    return boost::multiprecision::msb(v);
}

}  // namespace framed
