#include "maxclass/involutions.hpp"

#include <stdexcept>

namespace maxclass {

const char* to_string(Involution sigma) {
    return sigma == Involution::Star ? "star" : "circledast";
}

IndexSets make_index_sets(const CyclicContext& ctx) {
    if (ctx.n() < 3) throw std::invalid_argument("index sets require n >= 3");
    const unsigned dim = ctx.dim();
    const unsigned half = dim / 2;
    const unsigned quarter = dim / 4;
    IndexSets s;
    for (unsigned k = 0; k < dim; k += 2) s.P.push_back(k);
    for (unsigned k = 0; k < half; k += 2) s.R.push_back(k);
    for (unsigned k = 0; k + 2 <= quarter; k += 2) s.Q.push_back(k);
    for (unsigned k = half; k + 2 <= half + quarter; k += 2) s.Q.push_back(k);
    return s;
}

std::vector<std::uint8_t> rho_permutation(const CyclicContext& ctx) {
    const unsigned dim = ctx.dim();
    std::vector<std::uint8_t> rho(dim);
    for (unsigned i = 0; i < dim; ++i)
        rho[i] = std::uint8_t(i % 2 == 0 ? i : (i + dim / 2) % dim);
    return rho;
}

namespace detail {

const std::vector<std::uint8_t>& exponent_map(const CyclicContext& ctx, Involution sigma) {
    if (sigma == Involution::Star) return ctx.star_exponent_map();
    if (ctx.n() < 3)
        throw std::invalid_argument("circledast involution requires n >= 3");
    return ctx.circ_exponent_map();
}

}  // namespace detail

AlgElem apply(Involution sigma, const AlgElem& x) {
    return {x.ctx, detail::apply_perm(x.bits, detail::exponent_map(*x.ctx, sigma))};
}

namespace {

using detail::parity;
using detail::rotl_bits;

// x * x^star = chi(x) + sum_{j=1}^{2^(n-1)-1} gamma_j (a^j + a^-j),
// gamma_j = sum_i alpha_i alpha_(i-j).
std::uint64_t star_product(std::uint64_t x, unsigned dim, std::uint64_t mask) {
    const unsigned half = dim / 2;
    std::uint64_t out = parity(x) ? 1 : 0;
    for (unsigned j = 1; j < half; ++j) {
        if (parity(x & rotl_bits(x, j, dim, mask)))
            out |= (std::uint64_t(1) << j) | (std::uint64_t(1) << (dim - j));
    }
    return out;
}

// x * x^circledast assembled from the four-case gamma_k formulas over the
// index sets P, Q, R.
std::uint64_t circ_product(std::uint64_t x, unsigned dim, std::uint64_t mask) {
    const unsigned half = dim / 2;
    std::uint64_t even_mask = 0;
    for (unsigned i = 0; i < dim; i += 2) even_mask |= std::uint64_t(1) << i;
    const std::uint64_t odd_mask = mask ^ even_mask;

    const auto gamma = [&](unsigned k) -> bool {
        const unsigned shift_k = k % dim;
        const unsigned shift_k_half = (k + dim - half) % dim;
        if (k % 2 == 0)
            return parity(x & even_mask & rotl_bits(x, shift_k, dim, mask)) ^
                   parity(x & odd_mask & rotl_bits(x, shift_k_half, dim, mask));
        return parity(x & even_mask & rotl_bits(x, shift_k_half, dim, mask)) ^
               parity(x & odd_mask & rotl_bits(x, shift_k, dim, mask));
    };

    std::uint64_t out = 0;
    if (parity(x & even_mask)) out |= 1;                              // gamma_0
    if (parity(x & odd_mask)) out |= std::uint64_t(1) << half;        // gamma_(2^(n-1))
    for (unsigned k = 2; k < half; k += 2)                            // k in R \ {0}
        if (gamma(k)) out |= (std::uint64_t(1) << k) | (std::uint64_t(1) << (dim - k));
    const unsigned quarter = dim / 4;
    for (unsigned base : {0u, half})                                  // k in 1 + Q
        for (unsigned q = base; q + 2 <= base + quarter; q += 2) {
            const unsigned k = q + 1;
            if (gamma(k))
                out |= (std::uint64_t(1) << k) | (std::uint64_t(1) << ((half + dim - k) % dim));
        }
    return out;
}

}  // namespace

AlgElem sigma_product_closed_form(Involution sigma, const AlgElem& x) {
    const auto& ctx = *x.ctx;
    if (sigma == Involution::Star)
        return {&ctx, star_product(x.bits, ctx.dim(), ctx.mask())};
    if (ctx.n() < 3)
        throw std::invalid_argument("circledast involution requires n >= 3");
    return {&ctx, circ_product(x.bits, ctx.dim(), ctx.mask())};
}

bool is_unitary(Involution sigma, const AlgElem& x) {
    if (!augmentation(x)) throw std::domain_error("is_unitary: element is not a unit");
    return mul(x, apply(sigma, x)) == one_elem(*x.ctx);
}

AlgElem phi_sigma(Involution sigma, const AlgElem& x) {
    if (!augmentation(x)) throw std::domain_error("phi_sigma: element is not a unit");
    return mul(apply(sigma, x), inverse(x));
}

AlgElem psi_sigma(Involution sigma, const AlgElem& x) {
    if (!augmentation(x)) throw std::domain_error("psi_sigma: element is not a unit");
    return mul(x, apply(sigma, x));
}

}  // namespace maxclass
