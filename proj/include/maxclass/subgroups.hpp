#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "maxclass/bigint.hpp"
#include "maxclass/cyclic.hpp"
#include "maxclass/involutions.hpp"

namespace maxclass {

/// The distinguished subgroups of V(F2C). Membership predicates, with
/// sigma one of the two involutions and V = V(F2C):
///   FullV       all of V
///   LowerLayer  V[2] = { x in V : x^2 = 1 }
///   Stabilizer  S_i  = { x in V : x (1+a)^i = (1+a)^i }
///   Symmetric   S_sigma = { x in V : x^sigma = x }
///   Unitary     V_sigma = { x in V : x x^sigma = 1 }
///   PhiImage    W_sigma = { x^sigma x^-1 : x in V }
///   PsiEven     J_sigma = { x x^sigma : x in V } restricted to F2C^2
///   H           H_i^sigma = { h in V : h h^sigma (1+a)^i (1+a^sigma)^i in F2C^2 }
///   L           L_i^sigma = { h in V[2] : (h + h^sigma)(1+a)^i = 0 }
///   M           M_z^sigma = { y in V : (y + y^sigma) z = 0 }, z not a unit
///   Squares     { x^2 : x in inner }
///   Frattini    Frattini subgroup of inner (= its squares; inner is abelian)
enum class SubgroupKind : std::uint8_t {
    FullV,
    LowerLayer,
    Stabilizer,
    Symmetric,
    Unitary,
    PhiImage,
    PsiEven,
    H,
    L,
    M,
    Squares,
    Frattini,
};

struct SubgroupSpec {
    SubgroupKind kind = SubgroupKind::FullV;
    Involution sigma = Involution::Star;
    unsigned i = 0;               // Stabilizer, H, L
    std::uint64_t z_bits = 0;     // M
    std::shared_ptr<const SubgroupSpec> inner;  // Squares, Frattini

    static SubgroupSpec full_v() { return {}; }
    static SubgroupSpec lower_layer() { return {SubgroupKind::LowerLayer, {}, 0, 0, nullptr}; }
    static SubgroupSpec stabilizer(unsigned i) {
        return {SubgroupKind::Stabilizer, {}, i, 0, nullptr};
    }
    static SubgroupSpec symmetric(Involution s) {
        return {SubgroupKind::Symmetric, s, 0, 0, nullptr};
    }
    static SubgroupSpec unitary(Involution s) { return {SubgroupKind::Unitary, s, 0, 0, nullptr}; }
    static SubgroupSpec phi_image(Involution s) {
        return {SubgroupKind::PhiImage, s, 0, 0, nullptr};
    }
    static SubgroupSpec psi_even(Involution s) { return {SubgroupKind::PsiEven, s, 0, 0, nullptr}; }
    static SubgroupSpec h(Involution s, unsigned i) { return {SubgroupKind::H, s, i, 0, nullptr}; }
    static SubgroupSpec l(Involution s, unsigned i) { return {SubgroupKind::L, s, i, 0, nullptr}; }
    static SubgroupSpec m(Involution s, const AlgElem& z) {
        return {SubgroupKind::M, s, 0, z.bits, nullptr};
    }
    static SubgroupSpec squares_of(SubgroupSpec inner) {
        return {SubgroupKind::Squares, {}, 0, 0,
                std::make_shared<const SubgroupSpec>(std::move(inner))};
    }
    static SubgroupSpec frattini_of(SubgroupSpec inner) {
        return {SubgroupKind::Frattini, {}, 0, 0,
                std::make_shared<const SubgroupSpec>(std::move(inner))};
    }
};

/// Canonical display form, e.g. "V", "V[2]", "S_3", "S_sym(star)",
/// "V_uni(circledast)", "H(star,2)", "M(star,0x06)".
std::string to_string(const SubgroupSpec& spec);

/// Explicitly enumerated subgroup (or subset, for H with odd index, which is
/// legitimately empty). Elements are sorted bit masks.
class EnumeratedSubgroup {
public:
    EnumeratedSubgroup(const CyclicContext& ctx, SubgroupSpec spec,
                       std::vector<std::uint64_t> elements);

    const CyclicContext& ctx() const { return *ctx_; }
    const SubgroupSpec& spec() const { return spec_; }
    const std::vector<std::uint64_t>& elements() const { return elements_; }

    std::size_t order() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains_bits(std::uint64_t bits) const;
    bool contains(const AlgElem& x) const;

    /// Full closure check: every pairwise product and every inverse is a
    /// member, and 1 is present. O(|S|^2) group products.
    bool verify_closure() const;
    /// Closure on a deterministic sample of `pairs` products (for large sets).
    bool verify_closure_sampled(std::size_t pairs, std::uint64_t seed) const;

    friend bool operator==(const EnumeratedSubgroup& a, const EnumeratedSubgroup& b) {
        return a.elements_ == b.elements_;
    }

private:
    const CyclicContext* ctx_;
    SubgroupSpec spec_;
    std::vector<std::uint64_t> elements_;
};

/// Enumerate the subgroup by filtering the 2^(2^n - 1) normalized units
/// (Gray-code order over the free coefficients). Requires n <= 4.
EnumeratedSubgroup enumerate(const CyclicContext& ctx, const SubgroupSpec& spec);

/// Closed-form order where one is known; throws std::invalid_argument for
/// kinds without one (M, Squares, Frattini).
BigInt order_formula(const SubgroupSpec& spec, int n);

/// Order computed as 2^kernel_dim of the affine membership system, for the
/// kinds whose predicate is affine-linear in the coefficients (FullV,
/// LowerLayer, Stabilizer, Symmetric, L, M). Works for any n <= 6.
BigInt order_via_linear(const CyclicContext& ctx, const SubgroupSpec& spec);

/// { h in N : h^2 = g }; empty or exactly |N[2]| elements (N is abelian).
/// Throws std::domain_error if g is not a member of N.
std::vector<AlgElem> square_roots_in(const EnumeratedSubgroup& N, const AlgElem& g);

enum class ChainFamily : std::uint8_t { H, L };

/// One enumerated step of an H- or L-chain.
struct ChainStep {
    unsigned index = 0;
    std::uint64_t order = 0;
};

/// Verification record for the even-index chain of H or L subgroups:
/// strict inclusions with index-2 jumps, terminal equality with V (H) or
/// V[2] (L), emptiness at odd H indices, and L_{2l} = L_{2l+1}.
struct ChainReport {
    ChainFamily family = ChainFamily::H;
    Involution sigma = Involution::Star;
    int n = 0;
    std::vector<ChainStep> steps;   // even indices 0, 2, ..., 2^(n-1)-2
    bool strict_inclusions = false;
    bool index2_jumps = false;
    bool terminal_matches = false;  // H: = V; L: = V[2]
    bool odd_behaviour = false;     // H: odd sets empty; L: L_{2l+1} = L_{2l}

    bool ok() const {
        return strict_inclusions && index2_jumps && terminal_matches && odd_behaviour;
    }
};

/// Requires n <= 4 (enumerated). Throws like enumerate.
ChainReport verify_chain(const CyclicContext& ctx, Involution sigma, ChainFamily family);

}  // namespace maxclass
