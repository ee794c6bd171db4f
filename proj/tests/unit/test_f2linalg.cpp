#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include "maxclass/f2linalg.hpp"
#include "support/naive_gf2.hpp"

using namespace maxclass;
using testsupport::Mat;
using testsupport::Row;

namespace {

F2Matrix from_rows(std::initializer_list<std::uint64_t> rows, std::size_t cols) {
    F2Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (auto bits : rows) m.set_row_word(r++, bits);
    return m;
}

Mat to_naive(const F2Matrix& m) {
    Mat out(m.rows(), Row(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

}  // namespace

TEST_CASE("rank: identity, zero, dependent rows") {
    CHECK(rank(from_rows({0b001, 0b010, 0b100}, 3)) == 3);
    CHECK(rank(F2Matrix(4, 4)) == 0);
    // third row is the sum of the first two
    CHECK(rank(from_rows({0b011, 0b110, 0b101}, 3)) == 2);
}

TEST_CASE("solve_affine: identity, zero matrix, mismatch") {
    const auto id = from_rows({0b001, 0b010, 0b100}, 3);
    const auto v = F2Vector::from_word(0b101, 3);
    const auto s = solve_affine(id, v);
    REQUIRE(s.consistent);
    CHECK(s.particular == v);
    CHECK(s.kernel_dim == 0);

    const F2Matrix zero(3, 5);
    const auto s0 = solve_affine(zero, F2Vector(3));
    REQUIRE(s0.consistent);
    CHECK(s0.kernel_dim == 5);

    CHECK_FALSE(solve_affine(zero, F2Vector::from_word(0b010, 3)).consistent);

    CHECK_THROWS_AS(solve_affine(zero, F2Vector(4)), std::invalid_argument);
}

TEST_CASE("random systems agree with the naive oracle up to 32x32") {
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + g() % 32;
        const std::size_t cols = 1 + g() % 32;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            m.set_row_word(r, g() & ((cols == 64 ? ~0ULL : (1ULL << cols) - 1)));
        F2Vector rhs(rows);
        for (std::size_t r = 0; r < rows; ++r) rhs.set(r, g() & 1);

        const auto got = solve_affine(m, rhs);
        Row nrhs(rows);
        for (std::size_t r = 0; r < rows; ++r) nrhs[r] = rhs.get(r);
        const auto want = testsupport::solve_naive(to_naive(m), nrhs);

        REQUIRE(got.consistent == want.consistent);
        if (!got.consistent) continue;
        CHECK(got.kernel_dim == want.kernel.size());
        CHECK(m.apply(got.particular) == rhs);

        // particular xor any kernel basis vector still solves the system
        for (const auto& k : want.kernel) {
            F2Vector x = got.particular;
            for (std::size_t c = 0; c < cols; ++c)
                if (k[c]) x.flip(c);
            CHECK(m.apply(x) == rhs);
        }
    }
}

TEST_CASE("rank is invariant under row shuffling") {
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 2 + g() % 16;
        const std::size_t cols = 1 + g() % 24;
        std::vector<std::uint64_t> words(rows);
        for (auto& w : words) w = g() & ((1ULL << cols) - 1);
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) m.set_row_word(r, words[r]);
        const auto base = rank(m);

        std::shuffle(words.begin(), words.end(), g);
        F2Matrix shuffled(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) shuffled.set_row_word(r, words[r]);
        CHECK(rank(shuffled) == base);
    }
}

TEST_CASE("solution counts match exhaustive enumeration for cols <= 12") {
    std::mt19937_64 g(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + g() % 10;
        const std::size_t cols = 1 + g() % 12;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) m.set_row_word(r, g() & ((1ULL << cols) - 1));
        F2Vector rhs(rows);
        Row nrhs(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            const bool b = g() & 1;
            rhs.set(r, b);
            nrhs[r] = b;
        }
        const auto s = solve_affine(m, rhs);
        const std::uint64_t want = testsupport::brute_count_naive(to_naive(m), nrhs);
        const std::uint64_t got = s.consistent ? (std::uint64_t(1) << s.kernel_dim) : 0;
        CHECK(got == want);
    }
}
