#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxlin {

// Dense bit vector over F2, packed into 64-bit words. Bit positions are
// 0-based; variable indices at API boundaries are 1-based (x1..xn), use the
// *_var accessors for those.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : words_((n + kWordBits - 1) / kWordBits, 0), size_(n) {}

    // vars holds 1-based variable indices.
    static BitVector from_vars(std::size_t n, const std::vector<int>& vars);
    // text like "1101", leftmost character is position 0 (variable x1).
    static BitVector from_string(std::string_view text);

    std::size_t size() const { return size_; }

    bool test(std::size_t pos) const {
        return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u;
    }
    void set(std::size_t pos, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (pos % kWordBits);
        if (value)
            words_[pos / kWordBits] |= mask;
        else
            words_[pos / kWordBits] &= ~mask;
    }
    bool test_var(int var) const { return test(static_cast<std::size_t>(var) - 1); }
    void set_var(int var, bool value = true) { set(static_cast<std::size_t>(var) - 1, value); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }

    // 1-based index of the lowest set bit, 0 when empty.
    int lowest_set_var() const;
    // 1-based support, ascending.
    std::vector<int> vars() const;

    bool operator==(const BitVector& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator<(const BitVector& other) const;

    // popcount(*this & other) mod 2
    bool parity_and(const BitVector& other) const;

    std::uint64_t hash() const;
    std::string to_string() const;

    // Low 64 bits as an integer mask (requires size <= 64).
    std::uint64_t low_word() const;

private:
    static constexpr std::size_t kWordBits = 64;
    boost::container::small_vector<std::uint64_t, 2> words_;
    std::size_t size_ = 0;
};

// popcount(a & b) mod 2; vectors must have equal size.
bool parity_of_and(const BitVector& a, const BitVector& b);

struct BitMatrix {
    std::size_t n_cols = 0;
    std::vector<BitVector> rows;

    BitMatrix() = default;
    BitMatrix(std::size_t cols, std::vector<BitVector> r);
    static BitMatrix from_strings(const std::vector<std::string>& row_texts);

    std::size_t n_rows() const { return rows.size(); }
    BitMatrix transposed() const;
};

// F2 row rank.
std::size_t rank(const BitMatrix& m);
std::size_t rank(const std::vector<BitVector>& rows, std::size_t n_cols);

// Greedy lowest-index column basis (the lexicographically first one);
// returns 1-based column indices, ascending. Size equals rank(m).
std::vector<int> independent_columns(const BitMatrix& m);

// Subset of `basis` (1-based positions, ascending) whose XOR equals target,
// or nullopt when target lies outside the span. The empty subset is returned
// for a zero target. Throws std::invalid_argument if the basis is dependent.
std::optional<std::vector<int>> express_in_basis(const BitVector& target,
                                                 const std::vector<BitVector>& basis);

// Solves m * y = rhs over F2 for a square m. Free variables (non-pivot
// columns) are fixed to 0; returns nullopt when the system is inconsistent.
// Throws std::invalid_argument on dimension mismatch.
std::optional<BitVector> solve_square(const BitMatrix& m, const BitVector& rhs);

} // namespace maxlin
