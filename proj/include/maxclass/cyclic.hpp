#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "maxclass/bigint.hpp"

namespace maxclass {

/// The group algebra F2[C] of the cyclic group C = <a | a^(2^n) = 1>, n >= 2.
///
/// An element sum alpha_i a^i is a dim-bit mask with bit i = alpha_i, so
/// addition is XOR and dim = 2^n <= 64 (n <= 6). The context owns the
/// per-order lookup tables: powers of (1+a) (the filtration basis), the
/// group-basis/filtration-basis transition matrix, and the coefficient
/// permutations realizing the two involutions.
class CyclicContext {
public:
    static constexpr int kMinN = 2;
    static constexpr int kMaxN = 6;  // dim = 2^n must fit one machine word

    int n() const { return n_; }
    unsigned dim() const { return dim_; }
    std::uint64_t mask() const { return mask_; }

    /// (1+a)^i as a bit mask, 0 <= i < dim.
    std::uint64_t power_of_one_plus_a(unsigned i) const { return pow1a_[i]; }

    /// Exponent image of the involution: star_exp[i] = -i mod dim.
    const std::vector<std::uint8_t>& star_exponent_map() const { return star_exp_; }
    /// circ_exp[i] = (2^(n-1)-1) i mod dim; only defined for n >= 3.
    const std::vector<std::uint8_t>& circ_exponent_map() const { return circ_exp_; }

    /// Group-basis <-> filtration-basis transition. The substitution
    /// b = 1+a is its own inverse, so the binomial matrix C(i,k) mod 2
    /// converts in both directions: entry k is the mask of indices i
    /// with C(i,k) odd.
    const std::vector<std::uint64_t>& binomial_rows() const { return binom_rows_; }

    CyclicContext(const CyclicContext&) = delete;
    CyclicContext& operator=(const CyclicContext&) = delete;

private:
    friend CyclicContext make_context(int n);
    explicit CyclicContext(int n);

    int n_;
    unsigned dim_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> pow1a_;
    std::vector<std::uint64_t> binom_rows_;
    std::vector<std::uint8_t> star_exp_;
    std::vector<std::uint8_t> circ_exp_;
};

/// Throws std::invalid_argument unless kMinN <= n <= kMaxN.
CyclicContext make_context(int n);

/// Element of F2[C_(2^n)]: coefficient of a^i at bit i of `bits`.
struct AlgElem {
    const CyclicContext* ctx = nullptr;
    std::uint64_t bits = 0;

    friend bool operator==(const AlgElem& x, const AlgElem& y) {
        return x.bits == y.bits && x.ctx->n() == y.ctx->n();
    }
    friend bool operator<(const AlgElem& x, const AlgElem& y) { return x.bits < y.bits; }
};

/// Coordinates in the basis 1, (1+a), (1+a)^2, ..., (1+a)^(dim-1):
/// bit i multiplies (1+a)^i.
struct FiltrationCoords {
    const CyclicContext* ctx = nullptr;
    std::uint64_t bits = 0;

    friend bool operator==(const FiltrationCoords&, const FiltrationCoords&) = default;
};

inline AlgElem make_elem(const CyclicContext& ctx, std::uint64_t bits) {
    return {&ctx, bits & ctx.mask()};
}
inline AlgElem zero_elem(const CyclicContext& ctx) { return {&ctx, 0}; }
inline AlgElem one_elem(const CyclicContext& ctx) { return {&ctx, 1}; }
/// The group element a^k.
inline AlgElem monomial(const CyclicContext& ctx, unsigned k) {
    return {&ctx, std::uint64_t(1) << (k % ctx.dim())};
}

namespace detail {

/// Rotate the low `dim` bits of x left by k (k < dim): multiplication by a^k.
inline std::uint64_t rotl_bits(std::uint64_t x, unsigned k, unsigned dim, std::uint64_t mask) {
    if (k == 0) return x;
    return ((x << k) | (x >> (dim - k))) & mask;
}

/// Cyclic convolution mod 2 of dim-bit masks.
inline std::uint64_t convolve(std::uint64_t x, std::uint64_t y, unsigned dim, std::uint64_t mask) {
    std::uint64_t acc = 0;
    while (x) {
        const unsigned i = std::countr_zero(x);
        acc ^= rotl_bits(y, i, dim, mask);
        x &= x - 1;
    }
    return acc;
}

/// Frobenius square: bit 2i (mod dim) of the result is alpha_i ^ alpha_(i+dim/2).
inline std::uint64_t square_bits(std::uint64_t x, unsigned dim) {
    const unsigned half = dim / 2;
    std::uint64_t folded = (x ^ (x >> half)) & ((std::uint64_t(1) << half) - 1);
    std::uint64_t out = 0;
    while (folded) {
        const unsigned i = std::countr_zero(folded);
        out |= std::uint64_t(1) << (2 * i);
        folded &= folded - 1;
    }
    return out;
}

inline bool parity(std::uint64_t x) { return std::popcount(x) & 1; }

void require_same_context(const AlgElem& x, const AlgElem& y);

}  // namespace detail

/// Group-algebra product (cyclic convolution mod 2).
AlgElem mul(const AlgElem& x, const AlgElem& y);

/// x^2 via the Frobenius closed form; agrees with mul(x, x).
inline AlgElem square(const AlgElem& x) {
    return {x.ctx, detail::square_bits(x.bits, x.ctx->dim())};
}

/// Augmentation chi: XOR of all coefficients.
inline bool augmentation(const AlgElem& x) { return detail::parity(x.bits); }

/// Inverse of a normalized unit (chi = 1): x^(2^n - 1).
/// Throws std::domain_error when chi(x) = 0.
AlgElem inverse(const AlgElem& x);

FiltrationCoords to_filtration(const AlgElem& x);
AlgElem from_filtration(const FiltrationCoords& c);

/// Least i with nonzero coordinate on (1+a)^i; 0 iff chi(x) = 1.
/// Throws std::domain_error for x = 0.
unsigned filtration_degree(const AlgElem& x);

/// |Ann((1+a)^i)| = 2^i, the annihilator being F2C(1+a)^(2^n - i).
BigInt annihilator_order(const CyclicContext& ctx, unsigned i);

/// Sum of the group elements a^k over the given exponents.
AlgElem hat_sum(const CyclicContext& ctx, const std::vector<unsigned>& exponents);

/// hat of the full group C: 1 + a + ... + a^(dim-1).
inline AlgElem hat_full(const CyclicContext& ctx) { return {&ctx, ctx.mask()}; }
/// hat of the squares subgroup C^2: sum of even powers.
AlgElem hat_even(const CyclicContext& ctx);

}  // namespace maxclass
