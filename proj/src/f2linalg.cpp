#include "maxclass/f2linalg.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace maxclass {

F2Vector F2Vector::from_word(std::uint64_t bits, std::size_t size) {
    if (size > 64) throw std::invalid_argument("from_word: size > 64");
    F2Vector v(size);
    if (size) v.words_[0] = size == 64 ? bits : (bits & ((std::uint64_t(1) << size) - 1));
    return v;
}

void F2Vector::xor_with(const F2Vector& other) {
    if (other.size_ != size_) throw std::invalid_argument("F2Vector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool F2Vector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool F2Vector::parity() const {
    std::uint64_t acc = 0;
    for (auto w : words_) acc ^= w;
    return std::popcount(acc) & 1;
}

void F2Matrix::set_row_word(std::size_t r, std::uint64_t bits) {
    if (cols_ > 64) throw std::invalid_argument("set_row_word: cols > 64");
    bits_[r * wpr_] = cols_ == 64 ? bits : (bits & ((std::uint64_t(1) << cols_) - 1));
}

std::uint64_t F2Matrix::row_word(std::size_t r) const {
    return wpr_ ? bits_[r * wpr_] : 0;
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < wpr_; ++k) std::swap(bits_[a * wpr_ + k], bits_[b * wpr_ + k]);
}

void F2Matrix::xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < wpr_; ++k) bits_[dst * wpr_ + k] ^= bits_[src * wpr_ + k];
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    F2Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        auto rw = row(r);
        auto vw = v.words();
        for (std::size_t k = 0; k < rw.size(); ++k) acc ^= rw[k] & vw[k];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

namespace {

// Reduced row echelon form; rhs (optional) mirrors the row ops one bit per row.
// Returns the pivot columns in order.
std::vector<std::size_t> rref(F2Matrix& m, std::vector<std::uint8_t>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && !m.get(pr, c)) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        if (rhs) std::swap((*rhs)[r], (*rhs)[pr]);
        for (std::size_t q = 0; q < m.rows(); ++q) {
            if (q != r && m.get(q, c)) {
                m.xor_rows(q, r);
                if (rhs) (*rhs)[q] ^= (*rhs)[r];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(F2Matrix m) {
    return rref(m, nullptr).size();
}

SolutionSet solve_affine(F2Matrix m, F2Vector rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length != rows");

    std::vector<std::uint8_t> b(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) b[i] = rhs.get(i);

    const auto pivots = rref(m, &b);
    const std::size_t rk = pivots.size();

    SolutionSet out;
    for (std::size_t i = rk; i < m.rows(); ++i)
        if (b[i]) return out;  // zero row with nonzero rhs

    out.consistent = true;
    out.kernel_dim = m.cols() - rk;
    out.particular = F2Vector(m.cols());
    for (std::size_t i = 0; i < rk; ++i)
        if (b[i]) out.particular.set(pivots[i], true);
    return out;
}

}  // namespace maxclass
