#include "maxclass/subgroups.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "maxclass/f2linalg.hpp"

namespace maxclass {

namespace {

using detail::apply_perm;
using detail::convolve;
using detail::parity;
using detail::rotl_bits;
using detail::square_bits;

std::uint64_t even_positions_mask(unsigned dim) {
    std::uint64_t m = 0;
    for (unsigned i = 0; i < dim; i += 2) m |= std::uint64_t(1) << i;
    return m;
}

// Visit every normalized unit (chi = 1) once: Gray-code order over the
// coefficients of a^1..a^(dim-1), with the coefficient of a^0 fixing parity.
template <typename Fn>
void for_each_unit(const CyclicContext& ctx, Fn&& fn) {
    const std::uint64_t count = std::uint64_t(1) << (ctx.dim() - 1);
    for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint64_t g = k ^ (k >> 1);
        fn((g << 1) | (parity(g) ? 0 : 1));
    }
}

void check_enumeration_bounds(const CyclicContext& ctx, const SubgroupSpec& spec) {
    if (ctx.n() > 4)
        throw std::invalid_argument("enumerate: n > 4 exceeds the exhaustive-search budget");
    switch (spec.kind) {
        case SubgroupKind::Symmetric:
        case SubgroupKind::Unitary:
        case SubgroupKind::PhiImage:
        case SubgroupKind::PsiEven:
        case SubgroupKind::H:
        case SubgroupKind::L:
        case SubgroupKind::M:
            detail::exponent_map(ctx, spec.sigma);  // rejects circledast at n = 2
            break;
        default:
            break;
    }
    if ((spec.kind == SubgroupKind::Stabilizer || spec.kind == SubgroupKind::H ||
         spec.kind == SubgroupKind::L) &&
        spec.i >= ctx.dim())
        throw std::invalid_argument("subgroup index i out of range");
    if (spec.kind == SubgroupKind::M && parity(spec.z_bits))
        throw std::invalid_argument("M_z requires a non-invertible z (chi = 0)");
}

}  // namespace

std::string to_string(const SubgroupSpec& spec) {
    const auto sig = [&] { return std::string(to_string(spec.sigma)); };
    switch (spec.kind) {
        case SubgroupKind::FullV: return "V";
        case SubgroupKind::LowerLayer: return "V[2]";
        case SubgroupKind::Stabilizer: return "S_" + std::to_string(spec.i);
        case SubgroupKind::Symmetric: return "S_sym(" + sig() + ")";
        case SubgroupKind::Unitary: return "V_uni(" + sig() + ")";
        case SubgroupKind::PhiImage: return "W(" + sig() + ")";
        case SubgroupKind::PsiEven: return "J(" + sig() + ")";
        case SubgroupKind::H: return "H(" + sig() + "," + std::to_string(spec.i) + ")";
        case SubgroupKind::L: return "L(" + sig() + "," + std::to_string(spec.i) + ")";
        case SubgroupKind::M: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "M(%s,0x%llx)", to_string(spec.sigma),
                          static_cast<unsigned long long>(spec.z_bits));
            return buf;
        }
        case SubgroupKind::Squares: return "Squares(" + to_string(*spec.inner) + ")";
        case SubgroupKind::Frattini: return "Frattini(" + to_string(*spec.inner) + ")";
    }
    return "?";
}

EnumeratedSubgroup::EnumeratedSubgroup(const CyclicContext& ctx, SubgroupSpec spec,
                                       std::vector<std::uint64_t> elements)
    : ctx_(&ctx), spec_(std::move(spec)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty()) {
        if (spec_.kind != SubgroupKind::H)
            throw std::logic_error("enumerated subgroup unexpectedly empty: " + to_string(spec_));
        return;
    }
    if (!contains_bits(1))
        throw std::logic_error("enumerated subgroup misses 1: " + to_string(spec_));
}

bool EnumeratedSubgroup::contains_bits(std::uint64_t bits) const {
    return std::binary_search(elements_.begin(), elements_.end(), bits);
}

bool EnumeratedSubgroup::contains(const AlgElem& x) const {
    return x.ctx->n() == ctx_->n() && contains_bits(x.bits);
}

bool EnumeratedSubgroup::verify_closure() const {
    if (empty()) return true;
    if (!contains_bits(1)) return false;
    const unsigned dim = ctx_->dim();
    const std::uint64_t mask = ctx_->mask();
    for (std::uint64_t e : elements_)
        if (!contains_bits(inverse(make_elem(*ctx_, e)).bits)) return false;
    for (std::uint64_t a : elements_)
        for (std::uint64_t b : elements_)
            if (!contains_bits(convolve(a, b, dim, mask))) return false;
    return true;
}

bool EnumeratedSubgroup::verify_closure_sampled(std::size_t pairs, std::uint64_t seed) const {
    if (empty()) return true;
    if (!contains_bits(1)) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
    const unsigned dim = ctx_->dim();
    const std::uint64_t mask = ctx_->mask();
    for (std::size_t t = 0; t < pairs; ++t) {
        const std::uint64_t a = elements_[pick(rng)];
        const std::uint64_t b = elements_[pick(rng)];
        if (!contains_bits(convolve(a, b, dim, mask))) return false;
        if (!contains_bits(inverse(make_elem(*ctx_, a)).bits)) return false;
    }
    return true;
}

EnumeratedSubgroup enumerate(const CyclicContext& ctx, const SubgroupSpec& spec) {
    check_enumeration_bounds(ctx, spec);
    const unsigned dim = ctx.dim();
    const std::uint64_t mask = ctx.mask();
    const std::uint64_t odd_mask = mask ^ even_positions_mask(dim);
    std::vector<std::uint64_t> out;

    const auto filter = [&](auto&& pred) {
        for_each_unit(ctx, [&](std::uint64_t u) {
            if (pred(u)) out.push_back(u);
        });
    };

    switch (spec.kind) {
        case SubgroupKind::FullV:
            filter([](std::uint64_t) { return true; });
            break;
        case SubgroupKind::LowerLayer:
            filter([&](std::uint64_t u) { return square_bits(u, dim) == 1; });
            break;
        case SubgroupKind::Stabilizer: {
            const std::uint64_t p = ctx.power_of_one_plus_a(spec.i);
            filter([&](std::uint64_t u) { return convolve(u, p, dim, mask) == p; });
            break;
        }
        case SubgroupKind::Symmetric: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            filter([&](std::uint64_t u) { return apply_perm(u, em) == u; });
            break;
        }
        case SubgroupKind::Unitary: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            filter([&](std::uint64_t u) { return convolve(u, apply_perm(u, em), dim, mask) == 1; });
            break;
        }
        case SubgroupKind::PhiImage: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            for_each_unit(ctx, [&](std::uint64_t u) {
                out.push_back(
                    convolve(apply_perm(u, em), inverse(make_elem(ctx, u)).bits, dim, mask));
            });
            break;
        }
        case SubgroupKind::PsiEven: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            for_each_unit(ctx, [&](std::uint64_t u) {
                const std::uint64_t p = convolve(u, apply_perm(u, em), dim, mask);
                if ((p & odd_mask) == 0) out.push_back(p);
            });
            break;
        }
        case SubgroupKind::H: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            // (1+a)^i (1+a^sigma)^i, built once; sigma is an automorphism so
            // (1+a^sigma)^i = ((1+a)^i)^sigma.
            const std::uint64_t p = ctx.power_of_one_plus_a(spec.i);
            const std::uint64_t w = convolve(p, apply_perm(p, em), dim, mask);
            filter([&](std::uint64_t u) {
                const std::uint64_t prod =
                    convolve(convolve(u, apply_perm(u, em), dim, mask), w, dim, mask);
                return (prod & odd_mask) == 0;
            });
            break;
        }
        case SubgroupKind::L: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            const std::uint64_t p = ctx.power_of_one_plus_a(spec.i);
            filter([&](std::uint64_t u) {
                return square_bits(u, dim) == 1 &&
                       convolve(u ^ apply_perm(u, em), p, dim, mask) == 0;
            });
            break;
        }
        case SubgroupKind::M: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            const std::uint64_t z = spec.z_bits & mask;
            filter([&](std::uint64_t u) {
                return convolve(u ^ apply_perm(u, em), z, dim, mask) == 0;
            });
            break;
        }
        case SubgroupKind::Squares:
        case SubgroupKind::Frattini: {
            // Frattini of a finite abelian 2-group is its subgroup of squares.
            const EnumeratedSubgroup inner = enumerate(ctx, *spec.inner);
            for (std::uint64_t e : inner.elements()) out.push_back(square_bits(e, dim));
            break;
        }
    }
    return EnumeratedSubgroup(ctx, spec, std::move(out));
}

BigInt order_formula(const SubgroupSpec& spec, int n) {
    if (n < CyclicContext::kMinN || n > CyclicContext::kMaxN)
        throw std::invalid_argument("order_formula: n out of range");
    const unsigned dim = 1u << n;
    const unsigned half = dim / 2;
    const unsigned quarter = dim / 4;
    const bool circ = spec.sigma == Involution::Circledast;
    const bool sigma_used =
        spec.kind == SubgroupKind::Symmetric || spec.kind == SubgroupKind::Unitary ||
        spec.kind == SubgroupKind::PhiImage || spec.kind == SubgroupKind::PsiEven ||
        spec.kind == SubgroupKind::H || spec.kind == SubgroupKind::L;
    if (sigma_used && circ && n < 3)
        throw std::invalid_argument("order_formula: circledast requires n >= 3");

    switch (spec.kind) {
        case SubgroupKind::FullV:
            return pow2(dim - 1);
        case SubgroupKind::LowerLayer:
            return pow2(half);
        case SubgroupKind::Stabilizer:
            if (spec.i >= dim) throw std::invalid_argument("order_formula: i out of range");
            return pow2(spec.i);
        case SubgroupKind::Symmetric:
            return pow2(half);
        case SubgroupKind::Unitary:
            return circ ? pow2(half) : pow2(half + 1);
        case SubgroupKind::PhiImage:
            return pow2(half - 1);
        case SubgroupKind::PsiEven:
            return circ ? pow2(quarter) : pow2(quarter - 1);
        case SubgroupKind::H:
            if (spec.i >= dim) throw std::invalid_argument("order_formula: i out of range");
            if (spec.i >= half) return pow2(dim - 1);
            if (spec.i % 2) return 0;
            return pow2(3 * quarter + spec.i / 2);
        case SubgroupKind::L:
            if (spec.i >= dim) throw std::invalid_argument("order_formula: i out of range");
            if (spec.i >= half) return pow2(half);
            return pow2(quarter + 1 + spec.i / 2);
        case SubgroupKind::M:
        case SubgroupKind::Squares:
        case SubgroupKind::Frattini:
            break;
    }
    throw std::invalid_argument("order_formula: no closed form for " + to_string(spec));
}

namespace {

// Rows of the matrix x -> x*z (column j is z rotated by j).
void append_mult_rows(F2Matrix& m, std::size_t row0, std::uint64_t z, const CyclicContext& ctx) {
    const unsigned dim = ctx.dim();
    std::vector<std::uint64_t> cols(dim);
    for (unsigned j = 0; j < dim; ++j) cols[j] = rotl_bits(z, j, dim, ctx.mask());
    for (unsigned r = 0; r < dim; ++r) {
        std::uint64_t row = 0;
        for (unsigned j = 0; j < dim; ++j) row |= ((cols[j] >> r) & 1u) << j;
        m.set_row_word(row0 + r, row);
    }
}

// Rows of x -> (x + x^sigma)*z.
void append_skew_mult_rows(F2Matrix& m, std::size_t row0, std::uint64_t z,
                           const CyclicContext& ctx, const std::vector<std::uint8_t>& em) {
    const unsigned dim = ctx.dim();
    std::vector<std::uint64_t> cols(dim);
    for (unsigned j = 0; j < dim; ++j)
        cols[j] = rotl_bits(z, j, dim, ctx.mask()) ^ rotl_bits(z, em[j], dim, ctx.mask());
    for (unsigned r = 0; r < dim; ++r) {
        std::uint64_t row = 0;
        for (unsigned j = 0; j < dim; ++j) row |= ((cols[j] >> r) & 1u) << j;
        m.set_row_word(row0 + r, row);
    }
}

// Rows of the Frobenius square map (row 2i collects alpha_i and alpha_(i+dim/2)).
void append_square_rows(F2Matrix& m, std::size_t row0, const CyclicContext& ctx) {
    const unsigned dim = ctx.dim();
    for (unsigned r = 0; r < dim; ++r) {
        std::uint64_t row = 0;
        if (r % 2 == 0)
            row = (std::uint64_t(1) << (r / 2)) | (std::uint64_t(1) << (r / 2 + dim / 2));
        m.set_row_word(row0 + r, row);
    }
}

}  // namespace

BigInt order_via_linear(const CyclicContext& ctx, const SubgroupSpec& spec) {
    const unsigned dim = ctx.dim();
    const std::uint64_t mask = ctx.mask();

    // All systems include the normalization row chi(x) = 1.
    const auto solve_counting = [&](const F2Matrix& m, const F2Vector& rhs) -> BigInt {
        const SolutionSet s = solve_affine(m, rhs);
        return s.consistent ? pow2(unsigned(s.kernel_dim)) : BigInt(0);
    };

    switch (spec.kind) {
        case SubgroupKind::FullV: {
            F2Matrix m(1, dim);
            m.set_row_word(0, mask);
            F2Vector rhs(1);
            rhs.set(0, true);
            return solve_counting(m, rhs);
        }
        case SubgroupKind::LowerLayer: {
            F2Matrix m(dim + 1, dim);
            append_square_rows(m, 0, ctx);
            m.set_row_word(dim, mask);
            F2Vector rhs(dim + 1);
            rhs.set(0, true);    // x^2 = 1
            rhs.set(dim, true);  // chi(x) = 1
            return solve_counting(m, rhs);
        }
        case SubgroupKind::Stabilizer: {
            if (spec.i >= dim) throw std::invalid_argument("order_via_linear: i out of range");
            const std::uint64_t p = ctx.power_of_one_plus_a(spec.i);
            F2Matrix m(dim + 1, dim);
            append_mult_rows(m, 0, p, ctx);
            m.set_row_word(dim, mask);
            F2Vector rhs(dim + 1);
            for (unsigned r = 0; r < dim; ++r) rhs.set(r, (p >> r) & 1u);
            rhs.set(dim, true);
            return solve_counting(m, rhs);
        }
        case SubgroupKind::Symmetric: {
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            F2Matrix m(dim + 1, dim);
            // x + x^sigma = 0: row r has bits at j with r in {j, sigma(j)}.
            for (unsigned j = 0; j < dim; ++j) {
                m.set(j, j, !m.get(j, j));
                m.set(em[j], j, !m.get(em[j], j));
            }
            m.set_row_word(dim, mask);
            F2Vector rhs(dim + 1);
            rhs.set(dim, true);
            return solve_counting(m, rhs);
        }
        case SubgroupKind::L: {
            if (spec.i >= dim) throw std::invalid_argument("order_via_linear: i out of range");
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            const std::uint64_t p = ctx.power_of_one_plus_a(spec.i);
            F2Matrix m(2 * dim + 1, dim);
            append_square_rows(m, 0, ctx);
            append_skew_mult_rows(m, dim, p, ctx, em);
            m.set_row_word(2 * dim, mask);
            F2Vector rhs(2 * dim + 1);
            rhs.set(0, true);
            rhs.set(2 * dim, true);
            return solve_counting(m, rhs);
        }
        case SubgroupKind::M: {
            if (parity(spec.z_bits))
                throw std::invalid_argument("M_z requires a non-invertible z (chi = 0)");
            const auto& em = detail::exponent_map(ctx, spec.sigma);
            F2Matrix m(dim + 1, dim);
            append_skew_mult_rows(m, 0, spec.z_bits & mask, ctx, em);
            m.set_row_word(dim, mask);
            F2Vector rhs(dim + 1);
            rhs.set(dim, true);
            return solve_counting(m, rhs);
        }
        default:
            throw std::invalid_argument("order_via_linear: predicate not affine-linear for " +
                                        to_string(spec));
    }
}

std::vector<AlgElem> square_roots_in(const EnumeratedSubgroup& N, const AlgElem& g) {
    if (!N.contains(g)) throw std::domain_error("square_roots_in: g is not a member of N");
    const unsigned dim = N.ctx().dim();
    std::vector<AlgElem> roots;
    for (std::uint64_t h : N.elements())
        if (square_bits(h, dim) == g.bits) roots.push_back(make_elem(N.ctx(), h));
    return roots;
}

ChainReport verify_chain(const CyclicContext& ctx, Involution sigma, ChainFamily family) {
    const unsigned half = ctx.dim() / 2;
    ChainReport rep;
    rep.family = family;
    rep.sigma = sigma;
    rep.n = ctx.n();

    const auto make_spec = [&](unsigned i) {
        return family == ChainFamily::H ? SubgroupSpec::h(sigma, i) : SubgroupSpec::l(sigma, i);
    };

    std::vector<EnumeratedSubgroup> groups;
    for (unsigned i = 0; i + 2 <= half; i += 2) {
        groups.push_back(enumerate(ctx, make_spec(i)));
        rep.steps.push_back({i, groups.back().order()});
    }

    rep.strict_inclusions = true;
    rep.index2_jumps = true;
    for (std::size_t k = 0; k + 1 < groups.size(); ++k) {
        const auto& lo = groups[k];
        const auto& hi = groups[k + 1];
        bool subset = lo.order() < hi.order();
        for (std::uint64_t e : lo.elements())
            if (!hi.contains_bits(e)) { subset = false; break; }
        rep.strict_inclusions = rep.strict_inclusions && subset;
        rep.index2_jumps = rep.index2_jumps && (hi.order() == 2 * lo.order());
    }

    const SubgroupSpec terminal_spec = family == ChainFamily::H ? SubgroupSpec::full_v()
                                                                : SubgroupSpec::lower_layer();
    rep.terminal_matches = groups.back() == enumerate(ctx, terminal_spec);

    rep.odd_behaviour = true;
    for (unsigned i = 1; i < half; i += 2) {
        const auto odd = enumerate(ctx, make_spec(i));
        if (family == ChainFamily::H)
            rep.odd_behaviour = rep.odd_behaviour && odd.empty();
        else
            rep.odd_behaviour = rep.odd_behaviour && (odd == groups[i / 2]);
    }
    return rep;
}

}  // namespace maxclass
