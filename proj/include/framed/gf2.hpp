#pragma once

// Binary codewords and linear codes over GF(2).
//
// Coordinates are 0-based in the API. Coordinate 0 is the most significant
// bit of word 0, so comparing packed words as unsigned integers gives the
// left-to-right lexicographic order on bit strings.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "framed/errors.hpp"

namespace framed {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxLength = 1024;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kMaxWords = kMaxLength / kWordBits;

/// Enumeration budgets. Exceeding one raises ResourceExceeded.
struct Limits {
    std::size_t max_enumeration_dim = 24;          // direct scans of 2^k codewords
    std::size_t max_coset_weight = 4;              // low-weight coset search
    std::uint64_t max_coset_candidates = 1ULL << 24;
    std::uint64_t max_search_nodes = 10'000'000;   // self-dual subcode search
};

class Codeword {
public:
    Codeword() = default;
    explicit Codeword(std::size_t n);

    static Codeword from_bits(std::string_view bits);
    static Codeword from_hex(std::string_view hex, std::size_t n);
    static Codeword all_ones(std::size_t n);
    static Codeword unit(std::size_t n, std::size_t i);
    static Codeword from_support(std::size_t n, std::span<const std::size_t> support);

    std::size_t size() const noexcept { return n_; }
    std::size_t word_count() const noexcept { return (n_ + kWordBits - 1) / kWordBits; }

    bool test(std::size_t i) const noexcept {
        return (words_[i / kWordBits] >> (kWordBits - 1 - i % kWordBits)) & 1U;
    }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (kWordBits - 1 - i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= bit;
        } else {
            words_[i / kWordBits] &= ~bit;
        }
    }
    void flip(std::size_t i) noexcept {
        words_[i / kWordBits] ^= std::uint64_t{1} << (kWordBits - 1 - i % kWordBits);
    }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    /// First coordinate holding a 1, or size() when zero.
    std::size_t leading() const noexcept;
    std::vector<std::size_t> support() const;
    Codeword complement() const;

    /// Keeps the coordinates in supp(mask), packed in order, as a word of length wt(mask).
    Codeword compress(const Codeword& mask) const;
    /// Inverse of compress: spreads a length-wt(mask) word onto supp(mask).
    static Codeword expand(const Codeword& packed, const Codeword& mask);

    std::string to_bits() const;
    std::string to_hex() const;

    Codeword& operator^=(const Codeword& rhs);
    Codeword& operator&=(const Codeword& rhs);
    friend Codeword operator^(Codeword lhs, const Codeword& rhs) { return lhs ^= rhs; }
    /// Coordinatewise product.
    friend Codeword operator&(Codeword lhs, const Codeword& rhs) { return lhs &= rhs; }

    friend bool operator==(const Codeword& a, const Codeword& b) noexcept;
    friend std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) noexcept;

    std::span<const std::uint64_t> words() const noexcept { return {words_.data(), word_count()}; }
    std::size_t hash() const noexcept;

private:
    std::size_t n_ = 0;
    std::array<std::uint64_t, kMaxWords> words_{};
};

/// ⟨a,b⟩ = wt(a·b) mod 2.
bool inner(const Codeword& a, const Codeword& b);

/// Concatenation of blocks, left block first.
Codeword concat(std::initializer_list<Codeword> blocks);

/// Subspace of GF(2)^n kept as a reduced row echelon basis with increasing pivots.
class LinearCode {
public:
    LinearCode() = default;
    explicit LinearCode(std::size_t n) : n_(n) {}

    static LinearCode from_generators(std::size_t n, std::span<const Codeword> rows);
    static LinearCode from_generators(std::size_t n, std::initializer_list<Codeword> rows) {
        return from_generators(n, std::span<const Codeword>(rows.begin(), rows.size()));
    }
    static LinearCode full(std::size_t n);

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<Codeword>& basis() const& noexcept { return rows_; }
    // by value on temporaries, so `for (auto& r : dual(c).basis())` is safe
    std::vector<Codeword> basis() && { return std::move(rows_); }
    const std::vector<std::size_t>& pivots() const& noexcept { return pivots_; }
    std::vector<std::size_t> pivots() && { return std::move(pivots_); }

    /// Lexicographically smallest element of w + C.
    Codeword reduce(Codeword w) const;
    bool contains(const Codeword& w) const;
    /// Adds w to the span; returns false if it was already a member.
    bool insert(Codeword w);

    /// OR of all basis rows.
    Codeword support() const;
    bool is_even() const;
    bool is_doubly_even() const;
    bool is_self_orthogonal() const;

    /// Visits every codeword (Gray-code order, starting with 0).
    void for_each_codeword(const std::function<void(const Codeword&)>& visit,
                           const Limits& limits = {}) const;
    std::vector<Codeword> codewords(const Limits& limits = {}) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Codeword> rows_;
    std::vector<std::size_t> pivots_;
};

struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<BigInt> coeffs;  // coeffs[w] = number of codewords of weight w

    BigInt total() const;
    /// Polynomial form, e.g. "x^16 + 30x^8y^8 + y^16".
    std::string to_string() const;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

LinearCode dual(const LinearCode& c);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
LinearCode sum_codes(const LinearCode& a, const LinearCode& b);
/// Codewords of c whose support lies inside supp(gamma).
LinearCode subcode_supported_on(const LinearCode& c, const Codeword& gamma);
/// Image of c under restriction to supp(mask); the result has length wt(mask).
LinearCode puncture(const LinearCode& c, const Codeword& mask);
/// Codewords of c with ⟨α,v⟩ = 0.
LinearCode orthogonal_subcode(const LinearCode& c, const Codeword& v);
/// Even-weight subcode.
LinearCode even_subcode(const LinearCode& c);
/// Every word supported on supp(mask).
LinearCode coordinate_space(const Codeword& mask);

/// All v with wt(v) <= wmax in rep + c, sorted lexicographically.
std::vector<Codeword> coset_words_up_to_weight(const LinearCode& c, const Codeword& rep,
                                               std::size_t wmax, const Limits& limits = {});
/// Minimum weight of rep + c, or nullopt if it exceeds bound.
std::optional<std::size_t> coset_min_weight(const LinearCode& c, const Codeword& rep,
                                            std::size_t bound, const Limits& limits = {});

WeightEnumerator weight_enumerator(const LinearCode& c, const Limits& limits = {});
/// Enumerator of the dual of a k-dimensional code with enumerator w.
WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k);

/// Binary Reed-Muller code RM(r, m) of length 2^m; coordinate j is the point
/// whose binary expansion is j (most significant variable first).
LinearCode reed_muller(std::size_t r, std::size_t m);

}  // namespace framed

template <>
struct std::hash<framed::Codeword> {
    std::size_t operator()(const framed::Codeword& w) const noexcept { return w.hash(); }
};
