#include "maxlin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace maxlin {

BitVector BitVector::from_vars(std::size_t n, const std::vector<int>& vars) {
    BitVector v(n);
    for (int var : vars) {
        if (var < 1 || static_cast<std::size_t>(var) > n)
            throw std::invalid_argument("variable index out of range");
        v.set_var(var);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            v.set(i);
        else if (text[i] != '0')
            throw std::invalid_argument("bit string must consist of 0/1");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

int BitVector::lowest_set_var() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]))) + 1;
    return 0;
}

std::vector<int> BitVector::vars() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            const int bit = std::countr_zero(word);
            out.push_back(static_cast<int>(w * kWordBits) + bit + 1);
            word &= word - 1;
        }
    }
    return out;
}

bool BitVector::operator<(const BitVector& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    return std::lexicographical_compare(words_.begin(), words_.end(), other.words_.begin(),
                                        other.words_.end());
}

std::uint64_t BitVector::hash() const {
    std::uint64_t h = 1469598103934665603ull ^ size_;
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

std::string BitVector::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) out[i] = '1';
    return out;
}

std::uint64_t BitVector::low_word() const {
    if (size_ > kWordBits) throw std::invalid_argument("BitVector too wide for low_word");
    return words_.empty() ? 0 : words_[0];
}

bool BitVector::parity_and(const BitVector& other) const {
    if (size_ != other.size_) throw std::invalid_argument("BitVector size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

bool parity_of_and(const BitVector& a, const BitVector& b) { return a.parity_and(b); }

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> r) : n_cols(cols), rows(std::move(r)) {
    for (const auto& row : rows)
        if (row.size() != n_cols) throw std::invalid_argument("row length differs from n_cols");
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& row_texts) {
    std::vector<BitVector> rows;
    rows.reserve(row_texts.size());
    for (const auto& t : row_texts) rows.push_back(BitVector::from_string(t));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return BitMatrix(cols, std::move(rows));
}

BitMatrix BitMatrix::transposed() const {
    std::vector<BitVector> out(n_cols, BitVector(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n_cols; ++c)
            if (rows[r].test(c)) out[c].set(r);
    return BitMatrix(rows.size(), std::move(out));
}

namespace {

// Gauss-Jordan elimination scanning columns left to right, so the pivot
// columns form the greedy lowest-index column basis. When `combos` is
// non-null it tracks, for every working row, which original rows were XORed
// into it (rows of an identity matrix at the start).
struct Elimination {
    std::vector<BitVector> rows;
    std::vector<int> pivot_cols; // 0-based, ascending
    std::vector<BitVector> combos;
};

Elimination eliminate(std::vector<BitVector> rows, std::size_t n_cols, bool track) {
    Elimination e;
    e.rows = std::move(rows);
    if (track) {
        e.combos.reserve(e.rows.size());
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            BitVector c(e.rows.size());
            c.set(i);
            e.combos.push_back(std::move(c));
        }
    }
    std::size_t next = 0;
    for (std::size_t col = 0; col < n_cols && next < e.rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < e.rows.size() && !e.rows[pivot].test(col)) ++pivot;
        if (pivot == e.rows.size()) continue;
        std::swap(e.rows[next], e.rows[pivot]);
        if (track) std::swap(e.combos[next], e.combos[pivot]);
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            if (r != next && e.rows[r].test(col)) {
                e.rows[r] ^= e.rows[next];
                if (track) e.combos[r] ^= e.combos[next];
            }
        }
        e.pivot_cols.push_back(static_cast<int>(col));
        ++next;
    }
    return e;
}

} // namespace

std::size_t rank(const std::vector<BitVector>& rows, std::size_t n_cols) {
    return eliminate(rows, n_cols, false).pivot_cols.size();
}

std::size_t rank(const BitMatrix& m) { return rank(m.rows, m.n_cols); }

std::vector<int> independent_columns(const BitMatrix& m) {
    auto e = eliminate(m.rows, m.n_cols, false);
    std::vector<int> cols;
    cols.reserve(e.pivot_cols.size());
    for (int c : e.pivot_cols) cols.push_back(c + 1);
    return cols;
}

std::optional<std::vector<int>> express_in_basis(const BitVector& target,
                                                 const std::vector<BitVector>& basis) {
    for (const auto& b : basis)
        if (b.size() != target.size()) throw std::invalid_argument("basis dimension mismatch");
    auto e = eliminate(basis, target.size(), true);
    if (e.pivot_cols.size() != basis.size())
        throw std::invalid_argument("basis vectors are not linearly independent");

    BitVector residue = target;
    BitVector combo(basis.size());
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (residue.test(static_cast<std::size_t>(e.pivot_cols[r]))) {
            residue ^= e.rows[r];
            combo ^= e.combos[r];
        }
    }
    if (residue.any()) return std::nullopt;
    return combo.vars();
}

std::optional<BitVector> solve_square(const BitMatrix& m, const BitVector& rhs) {
    if (m.n_rows() != m.n_cols) throw std::invalid_argument("matrix is not square");
    if (rhs.size() != m.n_rows()) throw std::invalid_argument("rhs dimension mismatch");

    // Augment each row with its rhs bit and run the same elimination.
    const std::size_t n = m.n_cols;
    std::vector<BitVector> aug;
    aug.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        BitVector row(n + 1);
        for (std::size_t c = 0; c < n; ++c)
            if (m.rows[r].test(c)) row.set(c);
        if (rhs.test(r)) row.set(n);
        aug.push_back(std::move(row));
    }
    auto e = eliminate(std::move(aug), n, false);
    // Inconsistent iff some zero row carries a 1 on the augmented column.
    for (std::size_t r = e.pivot_cols.size(); r < n; ++r)
        if (e.rows[r].test(n)) return std::nullopt;

    BitVector y(n);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.rows[r].test(n)) y.set(static_cast<std::size_t>(e.pivot_cols[r]));
    return y;
}

} // namespace maxlin
