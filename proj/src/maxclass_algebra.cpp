#include "maxclass/maxclass_algebra.hpp"

#include <stdexcept>

namespace maxclass {

const char* to_string(Family family) {
    switch (family) {
        case Family::Dihedral: return "D";
        case Family::Semidihedral: return "SD";
        case Family::Quaternion: return "Q";
    }
    return "?";
}

MCContext::MCContext(Family family, int n)
    : family_(family),
      cyclic_(make_context(n)),
      twist_(family == Family::Semidihedral ? Involution::Circledast : Involution::Star),
      b_square_bits_(family == Family::Quaternion ? (std::uint64_t(1) << (cyclic_.dim() / 2)) : 1),
      b_square_shift_(family == Family::Quaternion ? cyclic_.dim() / 2 : 0) {}

MCContext make_group_algebra(Family family, int n) {
    if (family == Family::Semidihedral && n < 3)
        throw std::invalid_argument("semidihedral group requires n >= 3");
    if (n < CyclicContext::kMinN || n > CyclicContext::kMaxN)
        throw std::invalid_argument("group algebra requires 2 <= n <= 6");
    return MCContext(family, n);
}

MCElem mc_mul(const MCContext& ctx, const MCElem& u, const MCElem& v) {
    detail::require_same_context(u.x1, v.x1);
    const auto& cyc = ctx.cyclic();
    if (u.x1.ctx->n() != cyc.n()) throw std::invalid_argument("context mismatch");

    const auto& twist_map = detail::exponent_map(cyc, ctx.twist());
    const unsigned dim = cyc.dim();
    const std::uint64_t mask = cyc.mask();

    const std::uint64_t y1t = detail::apply_perm(v.x1.bits, twist_map);
    const std::uint64_t y2t = detail::apply_perm(v.x2.bits, twist_map);

    const std::uint64_t c1 =
        detail::convolve(u.x1.bits, v.x1.bits, dim, mask) ^
        detail::rotl_bits(detail::convolve(u.x2.bits, y2t, dim, mask), ctx.b_square_shift(), dim,
                          mask);
    const std::uint64_t c2 = detail::convolve(u.x1.bits, v.x2.bits, dim, mask) ^
                             detail::convolve(u.x2.bits, y1t, dim, mask);
    return make_mc(ctx, c1, c2);
}

std::uint64_t element_order(const MCContext& ctx, const MCElem& u) {
    if (!is_normalized_unit(u)) throw std::domain_error("element_order: not a normalized unit");
    const MCElem one = mc_one(ctx);
    MCElem p = u;
    std::uint64_t order = 1;
    // |V(F2G)| = 2^(|G|-1), so the order is a power of two; repeated squaring
    // must reach 1 within 2|G| steps.
    for (unsigned k = 0; k <= 4 * ctx.cyclic().dim(); ++k) {
        if (p == one) return order;
        p = mc_square(ctx, p);
        order *= 2;
    }
    throw std::logic_error("element_order: did not terminate");
}

bool order2_conditions(const MCContext& ctx, const MCElem& u) {
    if (!is_normalized_unit(u)) throw std::domain_error("order2_conditions: not a normalized unit");
    const auto& cyc = ctx.cyclic();
    const auto& twist_map = detail::exponent_map(cyc, ctx.twist());
    const unsigned dim = cyc.dim();
    const std::uint64_t mask = cyc.mask();

    const std::uint64_t x2t = detail::apply_perm(u.x2.bits, twist_map);
    const std::uint64_t rhs =
        detail::rotl_bits(detail::convolve(u.x2.bits, x2t, dim, mask), ctx.b_square_shift(), dim,
                          mask) ^ 1u;
    if (detail::square_bits(u.x1.bits, dim) != rhs) return false;

    const std::uint64_t x1t = detail::apply_perm(u.x1.bits, twist_map);
    return detail::convolve(u.x1.bits ^ x1t, u.x2.bits, dim, mask) == 0;
}

}  // namespace maxclass
