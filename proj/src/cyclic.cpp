#include "maxclass/cyclic.hpp"

#include <stdexcept>

namespace maxclass {

CyclicContext::CyclicContext(int n)
    : n_(n),
      dim_(1u << n),
      mask_(dim_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << dim_) - 1) {
    // Powers of (1+a) by repeated multiplication; the table doubles as the
    // transition-matrix columns.
    pow1a_.resize(dim_);
    pow1a_[0] = 1;
    const std::uint64_t one_plus_a = 0b11;
    for (unsigned i = 1; i < dim_; ++i)
        pow1a_[i] = detail::convolve(pow1a_[i - 1], one_plus_a, dim_, mask_);

    // Transition matrix with column i = (1+a)^i, stored row-major: row k is
    // the mask of columns whose a^k coefficient is set.
    binom_rows_.resize(dim_);
    for (unsigned k = 0; k < dim_; ++k) {
        std::uint64_t row = 0;
        for (unsigned i = 0; i < dim_; ++i)
            if ((pow1a_[i] >> k) & 1u) row |= std::uint64_t(1) << i;
        binom_rows_[k] = row;
    }

    star_exp_.resize(dim_);
    for (unsigned i = 0; i < dim_; ++i) star_exp_[i] = std::uint8_t((dim_ - i) % dim_);

    if (n_ >= 3) {
        circ_exp_.resize(dim_);
        const unsigned m = (dim_ / 2) - 1;
        for (unsigned i = 0; i < dim_; ++i) circ_exp_[i] = std::uint8_t((m * i) % dim_);
    }
}

CyclicContext make_context(int n) {
    if (n < CyclicContext::kMinN || n > CyclicContext::kMaxN)
        throw std::invalid_argument("cyclic context requires 2 <= n <= 6");
    return CyclicContext(n);
}

namespace detail {

void require_same_context(const AlgElem& x, const AlgElem& y) {
    if (x.ctx == nullptr || y.ctx == nullptr || x.ctx->n() != y.ctx->n())
        throw std::invalid_argument("context mismatch");
}

}  // namespace detail

AlgElem mul(const AlgElem& x, const AlgElem& y) {
    detail::require_same_context(x, y);
    return {x.ctx, detail::convolve(x.bits, y.bits, x.ctx->dim(), x.ctx->mask())};
}

AlgElem inverse(const AlgElem& x) {
    if (!augmentation(x)) throw std::domain_error("inverse: element is not a unit (chi = 0)");
    // x^(2^n) = 1 for units, so x^-1 = x^(2^n - 1) = prod_k x^(2^k).
    const unsigned dim = x.ctx->dim();
    const std::uint64_t mask = x.ctx->mask();
    std::uint64_t acc = x.bits;
    std::uint64_t pw = x.bits;
    for (int k = 1; k < x.ctx->n(); ++k) {
        pw = detail::square_bits(pw, dim);
        acc = detail::convolve(acc, pw, dim, mask);
    }
    return {x.ctx, acc};
}

FiltrationCoords to_filtration(const AlgElem& x) {
    const auto& rows = x.ctx->binomial_rows();
    std::uint64_t coords = 0;
    for (unsigned k = 0; k < x.ctx->dim(); ++k)
        if (detail::parity(x.bits & rows[k])) coords |= std::uint64_t(1) << k;
    return {x.ctx, coords};
}

AlgElem from_filtration(const FiltrationCoords& c) {
    std::uint64_t bits = 0;
    std::uint64_t w = c.bits;
    while (w) {
        const unsigned i = std::countr_zero(w);
        bits ^= c.ctx->power_of_one_plus_a(i);
        w &= w - 1;
    }
    return {c.ctx, bits};
}

unsigned filtration_degree(const AlgElem& x) {
    if (x.bits == 0) throw std::domain_error("filtration_degree: undefined for 0");
    if (augmentation(x)) return 0;
    return std::countr_zero(to_filtration(x).bits);
}

BigInt annihilator_order(const CyclicContext& ctx, unsigned i) {
    if (i > ctx.dim()) throw std::invalid_argument("annihilator_order: i out of range");
    return pow2(i);
}

AlgElem hat_sum(const CyclicContext& ctx, const std::vector<unsigned>& exponents) {
    std::uint64_t bits = 0;
    for (unsigned e : exponents) {
        if (e >= ctx.dim()) throw std::invalid_argument("hat_sum: exponent out of range");
        bits |= std::uint64_t(1) << e;
    }
    return {&ctx, bits};
}

AlgElem hat_even(const CyclicContext& ctx) {
    std::uint64_t bits = 0;
    for (unsigned e = 0; e < ctx.dim(); e += 2) bits |= std::uint64_t(1) << e;
    return {&ctx, bits};
}

}  // namespace maxclass
