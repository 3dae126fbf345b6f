#pragma once

// Truncated Laurent series in q^{1/48} with exact integer coefficients.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "framed/gf2.hpp"

namespace framed {

/// Exponents are integers e meaning q^{e/48}. A series is exact for every exponent
/// up to and including precision(); coefficients above it are unknown.
class QSeries {
public:
    QSeries() = default;
    /// Zero series exact through `precision`.
    explicit QSeries(std::int64_t precision) : precision_(precision) {}
    static QSeries monomial(std::int64_t exponent, BigInt coeff, std::int64_t precision);

    std::int64_t precision() const noexcept { return precision_; }
    /// Smallest exponent with a nonzero coefficient; precision()+1 for the zero series.
    std::int64_t valuation() const;
    BigInt coeff(std::int64_t exponent) const;
    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<std::int64_t, BigInt>> terms() const;
    bool is_zero() const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const BigInt& k);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const BigInt& k) { return a *= k; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// Divides every coefficient by k; throws InternalError unless all divisions are exact.
    QSeries exact_div(const BigInt& k) const;
    QSeries pow(unsigned e) const;
    /// Multiplies by q^{delta/48}.
    QSeries shift(std::int64_t delta) const;
    QSeries truncated(std::int64_t precision) const;

    /// One "coeff q^{p}" line per nonzero term, p in lowest terms.
    std::string to_string() const;

    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    std::int64_t base_ = 0;  // exponent of coeffs_[0]
    std::int64_t precision_ = 0;
    std::vector<BigInt> coeffs_;

    void set(std::int64_t exponent, const BigInt& value);
    void normalize();
};

/// Exponent p/48 in lowest terms, e.g. "-1", "3/4".
std::string format_exponent(std::int64_t e);

/// prod_{n>=0} (1 + sign q^{n+1/2}) without the q^{-1/48} prefactor, exact through `precision`.
QSeries half_odd_product(int sign, std::int64_t precision);
/// q^{-1/48} prod_{n>=0} (1 + sign q^{n+1/2}), exact through T.
QSeries product_half_odd(int sign, std::int64_t T);

/// Evaluates sum_w coeffs[w] x^{n-w} y^w at x = q^{-1/48}X, y = q^{-1/48}Y for series X, Y
/// of nonnegative valuation, exact through T.
QSeries evaluate_homogeneous(const std::vector<BigInt>& coeffs, const QSeries& x, const QSeries& y,
                             std::int64_t T);

/// ch V_C from W_C, with x = (A+B)/2 and y = (A-B)/2.
QSeries code_voa_character(const WeightEnumerator& w, std::int64_t T);
/// ch V_C from the enumerator of D = C^⊥ (dimension k): W_D(A, B) / 2^k.
QSeries code_voa_character_via_dual(const WeightEnumerator& w_dual, std::size_t k, std::int64_t T);

/// (W_{D+xi} - W_D)(A, B) / 2^{dim D}.
QSeries mckay_thompson(const WeightEnumerator& w_d, const WeightEnumerator& w_dxi, std::int64_t T);

/// log2 of a power of two, or InternalError.
std::size_t exact_log2(const BigInt& v);

inline constexpr std::int64_t kDefaultTruncation = 432;

}  // namespace framed
