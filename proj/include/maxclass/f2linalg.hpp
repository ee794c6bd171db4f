#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace maxclass {

/// Packed bit vector over GF(2); bit i lives at word i/64, position i%64.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    /// Low `size` bits of `bits`, little-endian. Requires size <= 64.
    static F2Vector from_word(std::uint64_t bits, std::size_t size);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const F2Vector& other);
    bool is_zero() const;

    /// Parity of the number of set bits.
    bool parity() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const F2Vector&, const F2Vector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix; each row is a run of 64-bit words, XOR is the row op.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (v) bits_[r * wpr_ + (c >> 6)] |= m; else bits_[r * wpr_ + (c >> 6)] &= ~m;
    }

    /// Overwrite row r with the low `cols` bits of `bits`. Requires cols <= 64.
    void set_row_word(std::size_t r, std::uint64_t bits);
    std::uint64_t row_word(std::size_t r) const;

    std::span<const std::uint64_t> row(std::size_t r) const { return {&bits_[r * wpr_], wpr_}; }

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] ^= row[src]
    void xor_rows(std::size_t dst, std::size_t src);

    /// m * v over GF(2). Requires v.size() == cols.
    F2Vector apply(const F2Vector& v) const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Description of the solution set of an affine system m*x = rhs.
/// If consistent, the set has exactly 2^kernel_dim elements.
struct SolutionSet {
    bool consistent = false;
    F2Vector particular;   // meaningful iff consistent
    std::size_t kernel_dim = 0;
};

std::size_t rank(F2Matrix m);

/// Solve m*x = rhs. Throws std::invalid_argument on rhs/rows mismatch.
SolutionSet solve_affine(F2Matrix m, F2Vector rhs);

}  // namespace maxclass
