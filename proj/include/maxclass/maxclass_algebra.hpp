#pragma once

#include <cstdint>

#include "maxclass/cyclic.hpp"
#include "maxclass/involutions.hpp"

namespace maxclass {

/// The three 2-groups of maximal class of order 2^(n+1), presented as
/// extensions of C = <a | a^(2^n) = 1> by an element b:
///   Dihedral      b^2 = 1,          b a b^-1 = a^-1
///   Quaternion    b^2 = a^(2^(n-1)), b a b^-1 = a^-1
///   Semidihedral  b^2 = 1,          b a b^-1 = a^(2^(n-1)-1)   (n >= 3)
enum class Family : std::uint8_t { Dihedral, Semidihedral, Quaternion };

const char* to_string(Family family);

/// The group algebra F2[G] for a maximal-class G. Elements are pairs
/// x1 + x2 b over F2[C]; conjugation by b acts on F2[C] as the twist
/// involution (Star for D and Q, Circledast for SD).
class MCContext {
public:
    Family family() const { return family_; }
    const CyclicContext& cyclic() const { return cyclic_; }
    Involution twist() const { return twist_; }
    /// b^2 as an element of F2[C]: 1 for D and SD, a^(2^(n-1)) for Q.
    AlgElem b_square() const { return make_elem(cyclic_, b_square_bits_); }
    /// Rotation amount realizing multiplication by b^2 (0 or 2^(n-1)).
    unsigned b_square_shift() const { return b_square_shift_; }

    MCContext(const MCContext&) = delete;
    MCContext& operator=(const MCContext&) = delete;

private:
    friend MCContext make_group_algebra(Family family, int n);
    MCContext(Family family, int n);

    Family family_;
    CyclicContext cyclic_;
    Involution twist_;
    std::uint64_t b_square_bits_;
    unsigned b_square_shift_;
};

/// Throws std::invalid_argument for n < 2, n > 6, or Semidihedral with n < 3.
MCContext make_group_algebra(Family family, int n);

/// x1 + x2 b with both components in the context's cyclic algebra.
struct MCElem {
    AlgElem x1, x2;

    friend bool operator==(const MCElem&, const MCElem&) = default;
};

inline MCElem make_mc(const MCContext& ctx, std::uint64_t x1, std::uint64_t x2) {
    return {make_elem(ctx.cyclic(), x1), make_elem(ctx.cyclic(), x2)};
}
inline MCElem mc_one(const MCContext& ctx) { return make_mc(ctx, 1, 0); }

/// (x1 + x2 b)(y1 + y2 b) = (x1 y1 + x2 y2^s b^2) + (x1 y2 + x2 y1^s) b,
/// where s is the twist.
MCElem mc_mul(const MCContext& ctx, const MCElem& u, const MCElem& v);

inline MCElem mc_square(const MCContext& ctx, const MCElem& u) { return mc_mul(ctx, u, u); }

/// Normalized units are exactly the pairs with chi(x1) + chi(x2) = 1.
inline bool is_normalized_unit(const MCElem& u) {
    return augmentation(u.x1) != augmentation(u.x2);
}

enum class UnitType : std::uint8_t { Type1, Type2, NotUnit };

/// Type 1: chi(x1) = 1, chi(x2) = 0. Type 2: chi(x1) = 0, chi(x2) = 1.
inline UnitType unit_type(const MCElem& u) {
    const bool a1 = augmentation(u.x1), a2 = augmentation(u.x2);
    if (a1 && !a2) return UnitType::Type1;
    if (!a1 && a2) return UnitType::Type2;
    return UnitType::NotUnit;
}

/// Least power of two 2^k with u^(2^k) = 1. Requires a normalized unit;
/// throws std::domain_error otherwise.
std::uint64_t element_order(const MCContext& ctx, const MCElem& u);

/// The family's order-two conditions evaluated directly:
///   x1^2 = x2 x2^s b^2 + 1   and   (x1 + x1^s) x2 = 0.
/// Equivalent to mc_square(u) = 1 on normalized units.
bool order2_conditions(const MCContext& ctx, const MCElem& u);

}  // namespace maxclass
