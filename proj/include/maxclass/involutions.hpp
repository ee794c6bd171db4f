#pragma once

#include <cstdint>
#include <vector>

#include "maxclass/cyclic.hpp"

namespace maxclass {

/// The two order-2 algebra automorphisms of F2[C]:
///   Star        a^i -> a^(-i)
///   Circledast  a^i -> a^((2^(n-1)-1) i), defined only for n >= 3.
enum class Involution : std::uint8_t { Star, Circledast };

const char* to_string(Involution sigma);

/// Exponent index sets used by the Circledast product formula (n >= 3):
///   P = even residues mod 2^n
///   R = even residues below 2^(n-1)
///   Q = {0,2,...,2^(n-2)-2} u {2^(n-1), 2^(n-1)+2, ..., 2^(n-1)+2^(n-2)-2}
struct IndexSets {
    std::vector<unsigned> P, Q, R;
};

IndexSets make_index_sets(const CyclicContext& ctx);

/// rho(i) = i for even i, i + 2^(n-1) mod 2^n for odd i. Satisfies rho^2 = id
/// and x^circledast = sum_i alpha_rho(i) a^(-i).
std::vector<std::uint8_t> rho_permutation(const CyclicContext& ctx);

/// Apply the involution (coefficient permutation). Throws std::invalid_argument
/// for Circledast when n = 2.
AlgElem apply(Involution sigma, const AlgElem& x);

/// x * x^sigma evaluated purely from the coefficient formulas (no use of the
/// group-algebra multiply); cross-validates against mul(x, apply(sigma, x)).
AlgElem sigma_product_closed_form(Involution sigma, const AlgElem& x);

/// Coefficient of a^0.
inline bool trace(const AlgElem& x) { return x.bits & 1; }

inline bool is_symmetric(Involution sigma, const AlgElem& x) {
    return apply(sigma, x) == x;
}

/// x^sigma = x^-1. Requires chi(x) = 1; throws std::domain_error otherwise.
bool is_unitary(Involution sigma, const AlgElem& x);

/// phi_sigma(x) = x^sigma x^-1 for units; the image is always sigma-unitary.
AlgElem phi_sigma(Involution sigma, const AlgElem& x);

/// psi_sigma(x) = x x^sigma for units; the image is always sigma-symmetric.
AlgElem psi_sigma(Involution sigma, const AlgElem& x);

namespace detail {

/// Mask-level involution application used in enumeration loops.
inline std::uint64_t apply_perm(std::uint64_t x, const std::vector<std::uint8_t>& exp_map) {
    std::uint64_t out = 0;
    while (x) {
        const unsigned i = std::countr_zero(x);
        out |= std::uint64_t(1) << exp_map[i];
        x &= x - 1;
    }
    return out;
}

const std::vector<std::uint8_t>& exponent_map(const CyclicContext& ctx, Involution sigma);

}  // namespace detail

}  // namespace maxclass
