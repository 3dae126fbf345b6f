#include "framed/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace framed {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw LengthMismatch(a, b);
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::vector<std::vector<BigInt>> pascal(std::size_t n) {
    std::vector<std::vector<BigInt>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].assign(i + 1, BigInt{1});
        for (std::size_t j = 1; j < i; ++j) {
            rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
        }
    }
    return rows;
}

std::uint64_t binomial_saturating(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    }
    if (acc > 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(acc + 0.5L);
}

// Syndrome columns of the parity checks of c: column i is the syndrome of e_i.
struct SyndromeTable {
    std::vector<Codeword> columns;
    Codeword target;
};

SyndromeTable syndrome_table(const LinearCode& c, const Codeword& rep) {
    const LinearCode checks = dual(c);
    const std::size_t r = checks.dimension();
    SyndromeTable table;
    table.columns.assign(c.length(), Codeword(r));
    table.target = Codeword(r);
    for (std::size_t j = 0; j < r; ++j) {
        const Codeword& h = checks.basis()[j];
        for (std::size_t i : h.support()) {
            table.columns[i].set(j);
        }
        if (inner(h, rep)) {
            table.target.set(j);
        }
    }
    return table;
}

// Visits every weight-w word whose syndrome equals the target, in lexicographic
// order of the support index tuples.
void for_each_coset_word(const SyndromeTable& table, std::size_t n, std::size_t w,
                         const std::function<void(const std::vector<std::size_t>&)>& hit) {
    std::vector<std::size_t> idx;
    idx.reserve(w);
    std::vector<Codeword> partial;
    partial.reserve(w + 1);
    partial.push_back(Codeword(table.target.size()));

    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (idx.size() == w) {
            if (partial.back() == table.target) hit(idx);
            return;
        }
        const std::size_t remaining = w - idx.size();
        for (std::size_t i = start; i + remaining <= n; ++i) {
            idx.push_back(i);
            partial.push_back(partial.back() ^ table.columns[i]);
            rec(i + 1);
            partial.pop_back();
            idx.pop_back();
        }
    };
    rec(0);
}

void check_coset_budget(std::size_t n, std::size_t w, const Limits& limits) {
    if (w > limits.max_coset_weight) {
        throw ResourceExceeded("coset search weight " + std::to_string(w) + " exceeds limit " +
                               std::to_string(limits.max_coset_weight));
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i <= w; ++i) {
        const std::uint64_t b = binomial_saturating(n, i);
        total = (b > UINT64_MAX - total) ? UINT64_MAX : total + b;
    }
    if (total > limits.max_coset_candidates) {
        throw ResourceExceeded("coset search needs " + std::to_string(total) +
                               " candidates, limit " + std::to_string(limits.max_coset_candidates));
    }
}

}  // namespace

// ---------------------------------------------------------------- Codeword

Codeword::Codeword(std::size_t n) : n_(n) {
    if (n > kMaxLength) {
        throw PreconditionFailed("codeword length " + std::to_string(n) + " exceeds " +
                                 std::to_string(kMaxLength));
    }
}

Codeword Codeword::from_bits(std::string_view bits) {
    Codeword w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            w.set(i);
        } else if (bits[i] != '0') {
            throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "'");
        }
    }
    return w;
}

Codeword Codeword::from_hex(std::string_view hex, std::size_t n) {
    if (hex.size() != (n + 3) / 4) {
        throw ParseError("hex word of length " + std::to_string(hex.size()) +
                         " does not encode " + std::to_string(n) + " bits");
    }
    Codeword w(n);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const int v = hex_value(hex[d]);
        if (v < 0) throw ParseError("invalid hex digit '" + std::string(1, hex[d]) + "'");
        for (std::size_t b = 0; b < 4; ++b) {
            if ((v >> (3 - b)) & 1) {
                const std::size_t i = 4 * d + b;
                if (i >= n) throw ParseError("hex word sets padding bits beyond length");
                w.set(i);
            }
        }
    }
    return w;
}

Codeword Codeword::all_ones(std::size_t n) {
    Codeword w(n);
    for (std::size_t i = 0; i < w.word_count(); ++i) w.words_[i] = ~std::uint64_t{0};
    if (const std::size_t tail = n % kWordBits; tail != 0) {
        w.words_[w.word_count() - 1] = ~std::uint64_t{0} << (kWordBits - tail);
    }
    return w;
}

Codeword Codeword::unit(std::size_t n, std::size_t i) {
    Codeword w(n);
    w.set(i);
    return w;
}

Codeword Codeword::from_support(std::size_t n, std::span<const std::size_t> support) {
    Codeword w(n);
    for (std::size_t i : support) {
        if (i >= n) throw PreconditionFailed("support index out of range");
        w.set(i);
    }
    return w;
}

std::size_t Codeword::weight() const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < word_count(); ++i) total += std::popcount(words_[i]);
    return total;
}

bool Codeword::is_zero() const noexcept {
    for (std::size_t i = 0; i < word_count(); ++i) {
        if (words_[i] != 0) return false;
    }
    return true;
}

std::size_t Codeword::leading() const noexcept {
    for (std::size_t i = 0; i < word_count(); ++i) {
        if (words_[i] != 0) return i * kWordBits + std::countl_zero(words_[i]);
    }
    return n_;
}

std::vector<std::size_t> Codeword::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < word_count(); ++i) {
        std::uint64_t x = words_[i];
        while (x != 0) {
            const int lz = std::countl_zero(x);
            out.push_back(i * kWordBits + lz);
            x &= ~(std::uint64_t{1} << (kWordBits - 1 - lz));
        }
    }
    return out;
}

Codeword Codeword::complement() const { return *this ^ all_ones(n_); }

Codeword Codeword::compress(const Codeword& mask) const {
    require_same_length(n_, mask.n_);
    const auto positions = mask.support();
    Codeword out(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (test(positions[j])) out.set(j);
    }
    return out;
}

Codeword Codeword::expand(const Codeword& packed, const Codeword& mask) {
    const auto positions = mask.support();
    require_same_length(packed.n_, positions.size());
    Codeword out(mask.n_);
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (packed.test(j)) out.set(positions[j]);
    }
    return out;
}

std::string Codeword::to_bits() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

std::string Codeword::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s((n_ + 3) / 4, '0');
    for (std::size_t d = 0; d < s.size(); ++d) {
        int v = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t i = 4 * d + b;
            if (i < n_ && test(i)) v |= 1 << (3 - b);
        }
        s[d] = kDigits[v];
    }
    return s;
}

Codeword& Codeword::operator^=(const Codeword& rhs) {
    require_same_length(n_, rhs.n_);
    for (std::size_t i = 0; i < word_count(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

Codeword& Codeword::operator&=(const Codeword& rhs) {
    require_same_length(n_, rhs.n_);
    for (std::size_t i = 0; i < word_count(); ++i) words_[i] &= rhs.words_[i];
    return *this;
}

bool operator==(const Codeword& a, const Codeword& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        if (a.words_[i] != b.words_[i]) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) noexcept {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t Codeword::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (std::size_t i = 0; i < word_count(); ++i) {
        h ^= std::hash<std::uint64_t>{}(words_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool inner(const Codeword& a, const Codeword& b) {
    require_same_length(a.size(), b.size());
    unsigned parity = 0;
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) parity ^= std::popcount(wa[i] & wb[i]) & 1U;
    return parity != 0;
}

Codeword concat(std::initializer_list<Codeword> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    Codeword out(n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i : b.support()) out.set(offset + i);
        offset += b.size();
    }
    return out;
}

// ---------------------------------------------------------------- LinearCode

LinearCode LinearCode::from_generators(std::size_t n, std::span<const Codeword> rows) {
    LinearCode c(n);
    for (const auto& r : rows) {
        require_same_length(n, r.size());
        c.insert(r);
    }
    return c;
}

LinearCode LinearCode::full(std::size_t n) {
    LinearCode c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.rows_.push_back(Codeword::unit(n, i));
        c.pivots_.push_back(i);
    }
    return c;
}

Codeword LinearCode::reduce(Codeword w) const {
    require_same_length(n_, w.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (w.test(pivots_[i])) w ^= rows_[i];
    }
    return w;
}

bool LinearCode::contains(const Codeword& w) const { return reduce(w).is_zero(); }

bool LinearCode::insert(Codeword w) {
    w = reduce(std::move(w));
    if (w.is_zero()) return false;
    const std::size_t p = w.leading();
    for (auto& row : rows_) {
        if (row.test(p)) row ^= w;
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

Codeword LinearCode::support() const {
    Codeword s(n_);
    for (const auto& r : rows_) {
        for (std::size_t i : r.support()) s.set(i);
    }
    return s;
}

bool LinearCode::is_even() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Codeword& r) { return r.weight() % 2 == 0; });
}

bool LinearCode::is_self_orthogonal() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = i; j < rows_.size(); ++j) {
            if (inner(rows_[i], rows_[j])) return false;
        }
    }
    return true;
}

bool LinearCode::is_doubly_even() const {
    // wt(a+b) = wt(a) + wt(b) - 2 wt(a·b): doubly even basis rows with pairwise even
    // intersections span a doubly even code.
    for (const auto& r : rows_) {
        if (r.weight() % 4 != 0) return false;
    }
    return is_self_orthogonal();
}

void LinearCode::for_each_codeword(const std::function<void(const Codeword&)>& visit,
                                   const Limits& limits) const {
    const std::size_t k = rows_.size();
    if (k > limits.max_enumeration_dim || k >= 63) {
        throw ResourceExceeded("enumerating 2^" + std::to_string(k) + " codewords exceeds limit 2^" +
                               std::to_string(limits.max_enumeration_dim));
    }
    Codeword w(n_);
    visit(w);
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < count; ++i) {
        w ^= rows_[std::countr_zero(i)];
        visit(w);
    }
}

std::vector<Codeword> LinearCode::codewords(const Limits& limits) const {
    std::vector<Codeword> out;
    for_each_codeword([&](const Codeword& w) { out.push_back(w); }, limits);
    return out;
}

BigInt WeightEnumerator::total() const {
    BigInt t = 0;
    for (const auto& c : coeffs) t += c;
    return t;
}

std::string WeightEnumerator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        if (coeffs[w] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const std::size_t xe = n - w;
        if (coeffs[w] != 1 || (xe == 0 && w == 0)) os << coeffs[w];
        if (xe > 0) os << 'x' << (xe > 1 ? "^" + std::to_string(xe) : "");
        if (w > 0) os << 'y' << (w > 1 ? "^" + std::to_string(w) : "");
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------- code algebra

LinearCode dual(const LinearCode& c) {
    const std::size_t n = c.length();
    const auto& rows = c.basis();
    const auto& piv = c.pivots();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;

    std::vector<Codeword> gens;
    gens.reserve(n - rows.size());
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Codeword v = Codeword::unit(n, f);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].test(f)) v.set(piv[i]);
        }
        gens.push_back(v);
    }
    return LinearCode::from_generators(n, gens);
}

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
    require_same_length(a.length(), b.length());
    LinearCode out = a;
    for (const auto& r : b.basis()) out.insert(r);
    return out;
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    require_same_length(a.length(), b.length());
    return dual(sum_codes(dual(a), dual(b)));
}

LinearCode subcode_supported_on(const LinearCode& c, const Codeword& gamma) {
    require_same_length(c.length(), gamma.size());
    const Codeword outside = gamma.complement();
    // Eliminate on the part outside supp(gamma) while carrying the full row; rows
    // whose outside part vanishes span the kernel of the projection.
    struct Pair {
        Codeword out;
        Codeword full;
    };
    std::vector<Pair> pivots;
    std::vector<Codeword> kernel;
    for (const auto& row : c.basis()) {
        Pair cur{row & outside, row};
        for (const auto& p : pivots) {
            if (cur.out.test(p.out.leading())) {
                cur.out ^= p.out;
                cur.full ^= p.full;
            }
        }
        if (cur.out.is_zero()) {
            kernel.push_back(cur.full);
        } else {
            // keep pivots reduced against the new leading coordinate
            const std::size_t lead = cur.out.leading();
            for (auto& p : pivots) {
                if (p.out.test(lead)) {
                    p.out ^= cur.out;
                    p.full ^= cur.full;
                }
            }
            pivots.push_back(std::move(cur));
        }
    }
    return LinearCode::from_generators(c.length(), kernel);
}

LinearCode puncture(const LinearCode& c, const Codeword& mask) {
    require_same_length(c.length(), mask.size());
    std::vector<Codeword> rows;
    rows.reserve(c.dimension());
    for (const auto& r : c.basis()) rows.push_back(r.compress(mask));
    return LinearCode::from_generators(mask.weight(), rows);
}

LinearCode orthogonal_subcode(const LinearCode& c, const Codeword& v) {
    require_same_length(c.length(), v.size());
    std::vector<Codeword> rows;
    std::optional<Codeword> odd;
    for (const auto& r : c.basis()) {
        if (!inner(r, v)) {
            rows.push_back(r);
        } else if (!odd) {
            odd = r;
        } else {
            rows.push_back(r ^ *odd);
        }
    }
    return LinearCode::from_generators(c.length(), rows);
}

LinearCode even_subcode(const LinearCode& c) {
    return orthogonal_subcode(c, Codeword::all_ones(c.length()));
}

LinearCode coordinate_space(const Codeword& mask) {
    std::vector<Codeword> rows;
    for (std::size_t i : mask.support()) rows.push_back(Codeword::unit(mask.size(), i));
    return LinearCode::from_generators(mask.size(), rows);
}

std::vector<Codeword> coset_words_up_to_weight(const LinearCode& c, const Codeword& rep,
                                               std::size_t wmax, const Limits& limits) {
    require_same_length(c.length(), rep.size());
    const std::size_t n = c.length();
    check_coset_budget(n, wmax, limits);
    const SyndromeTable table = syndrome_table(c, rep);
    std::vector<Codeword> out;
    for (std::size_t w = 0; w <= std::min(wmax, n); ++w) {
        for_each_coset_word(table, n, w, [&](const std::vector<std::size_t>& idx) {
            out.push_back(Codeword::from_support(n, idx));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> coset_min_weight(const LinearCode& c, const Codeword& rep,
                                            std::size_t bound, const Limits& limits) {
    require_same_length(c.length(), rep.size());
    const std::size_t n = c.length();
    if (c.contains(rep)) return 0;
    const SyndromeTable table = syndrome_table(c, rep);
    for (std::size_t w = 1; w <= std::min(bound, n); ++w) {
        check_coset_budget(n, w, limits);
        bool found = false;
        for_each_coset_word(table, n, w, [&](const std::vector<std::size_t>&) { found = true; });
        if (found) return w;
    }
    return std::nullopt;
}

WeightEnumerator weight_enumerator(const LinearCode& c, const Limits& limits) {
    std::vector<std::uint64_t> counts(c.length() + 1, 0);
    c.for_each_codeword([&](const Codeword& w) { ++counts[w.weight()]; }, limits);
    WeightEnumerator out{c.length(), {}};
    out.coeffs.reserve(counts.size());
    for (auto v : counts) out.coeffs.emplace_back(v);
    return out;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k) {
    const std::size_t n = w.n;
    if (w.coeffs.size() != n + 1) {
        throw PreconditionFailed("weight enumerator must have n+1 coefficients");
    }
    const auto binom = pascal(n);
    std::vector<BigInt> acc(n + 1, BigInt{0});
    // W(x+y, x-y) = sum_w a_w (x+y)^(n-w) (x-y)^w; coefficient of x^(n-j) y^j is the
    // Krawtchouk value K_j(w) = sum_i (-1)^i C(w,i) C(n-w, j-i).
    for (std::size_t wt = 0; wt <= n; ++wt) {
        const BigInt& a = w.coeffs[wt];
        if (a == 0) continue;
        for (std::size_t i = 0; i <= wt; ++i) {
            const BigInt term = (i % 2 == 0 ? BigInt{1} : BigInt{-1}) * binom[wt][i] * a;
            for (std::size_t t = 0; t <= n - wt; ++t) {
                acc[i + t] += term * binom[n - wt][t];
            }
        }
    }
    const BigInt scale = BigInt{1} << k;
    WeightEnumerator out{n, {}};
    out.coeffs.reserve(n + 1);
    for (auto& v : acc) {
        if (v % scale != 0 || v < 0) {
            throw InternalError("MacWilliams transform is not a nonnegative integer enumerator");
        }
        out.coeffs.push_back(v / scale);
    }
    return out;
}

LinearCode reed_muller(std::size_t r, std::size_t m) {
    if (m >= 11) throw PreconditionFailed("Reed-Muller length exceeds the codeword limit");
    const std::size_t n = std::size_t{1} << m;
    std::vector<Codeword> rows;
    for (std::size_t mono = 0; mono < n; ++mono) {
        if (static_cast<std::size_t>(std::popcount(mono)) > r) continue;
        Codeword row(n);
        for (std::size_t point = 0; point < n; ++point) {
            if ((point & mono) == mono) row.set(point);
        }
        rows.push_back(row);
    }
    return LinearCode::from_generators(n, rows);
}

}  // namespace framed
