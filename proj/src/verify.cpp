#include "maxclass/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "maxclass/involutions.hpp"
#include "maxclass/subgroups.hpp"
#include "maxclass/textio.hpp"

namespace maxclass {

namespace {

using detail::apply_perm;
using detail::convolve;
using detail::parity;
using detail::rotl_bits;
using detail::square_bits;

using Clock = std::chrono::steady_clock;

struct Collector {
    std::vector<VerifyCheck> checks;

    void add(std::string name, int n, std::string expected, std::string actual, bool pass) {
        checks.push_back({std::move(name), n, std::move(expected), std::move(actual), pass});
    }
    void expect_big(const std::string& name, int n, const BigInt& want, const BigInt& got) {
        add(name, n, want.str(), got.str(), want == got);
    }
    void expect_true(const std::string& name, int n, bool ok, const std::string& detail = "") {
        add(name, n, "true", ok ? "true" : (detail.empty() ? "false" : detail), ok);
    }
};

std::mt19937_64 seeded_rng(const VerifyOptions& opts, int n, std::uint64_t salt) {
    return std::mt19937_64(opts.seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(n) * 977 + salt)));
}

// Visit all dim-bit masks when n <= cap_exhaustive, otherwise `samples`
// seeded random masks.
template <typename Fn>
void for_masks(const CyclicContext& ctx, const VerifyOptions& opts, int cap_exhaustive,
               std::uint64_t salt, Fn&& fn) {
    if (ctx.n() <= cap_exhaustive) {
        const std::uint64_t count = std::uint64_t(1) << ctx.dim();
        for (std::uint64_t x = 0; x < count; ++x) fn(x);
    } else {
        auto rng = seeded_rng(opts, ctx.n(), salt);
        for (int s = 0; s < opts.samples; ++s) fn(rng() & ctx.mask());
    }
}

void suite_lemma1(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    std::string bad;
    for (unsigned i = 0; i < ctx.dim(); ++i) {
        const auto s = enumerate(ctx, SubgroupSpec::stabilizer(i));
        if (BigInt(s.order()) != pow2(i)) {
            bad = "i=" + std::to_string(i) + ": " + std::to_string(s.order());
            break;
        }
    }
    col.add("lemma1.stabilizer_orders", n, "|S_i| = 2^i for all i", bad.empty() ? "all match" : bad,
            bad.empty());
}

void suite_lemma3(Collector& col, int n, const VerifyOptions& opts) {
    const CyclicContext ctx = make_context(n);
    const unsigned half = ctx.dim() / 2;
    bool sq_ok = true, prod_ok = true, gamma_ok = true;
    for_masks(ctx, opts, 3, 3, [&](std::uint64_t bits) {
        const AlgElem x = make_elem(ctx, bits);
        const AlgElem direct = mul(x, x);
        sq_ok = sq_ok && square(x) == direct;
        const AlgElem closed = sigma_product_closed_form(Involution::Star, x);
        prod_ok = prod_ok && closed == mul(x, apply(Involution::Star, x));
        gamma_ok = gamma_ok && (closed.bits & 1u) == (augmentation(x) ? 1u : 0u) &&
                   ((closed.bits >> half) & 1u) == 0;
    });
    col.expect_true("lemma3.square_closed_form", n, sq_ok);
    col.expect_true("lemma3.star_product_closed_form", n, prod_ok);
    col.expect_true("lemma3.gamma0_is_chi_and_gamma_half_vanishes", n, gamma_ok);
}

void suite_lemma4(Collector& col, int n, const VerifyOptions& opts) {
    const CyclicContext ctx = make_context(n);
    const unsigned dim = ctx.dim();
    const unsigned half = dim / 2;

    const auto rho = rho_permutation(ctx);
    bool rho_ok = true;
    for (unsigned i = 0; i < dim; ++i) rho_ok = rho_ok && rho[rho[i]] == i;
    col.expect_true("lemma4.rho_is_an_involution", n, rho_ok);

    std::uint64_t even_mask = 0;
    for (unsigned i = 0; i < dim; i += 2) even_mask |= std::uint64_t(1) << i;

    bool prod_ok = true, gamma_ok = true, rho_form_ok = true;
    for_masks(ctx, opts, 3, 4, [&](std::uint64_t bits) {
        const AlgElem x = make_elem(ctx, bits);
        const AlgElem xs = apply(Involution::Circledast, x);
        const AlgElem closed = sigma_product_closed_form(Involution::Circledast, x);
        prod_ok = prod_ok && closed == mul(x, xs);
        gamma_ok = gamma_ok && (closed.bits & 1u) == (parity(bits & even_mask) ? 1u : 0u) &&
                   ((closed.bits >> half) & 1u) == (parity(bits & ~even_mask & ctx.mask()) ? 1u : 0u);
        // x^circledast = sum_i alpha_rho(i) a^(-i)
        std::uint64_t via_rho = 0;
        for (unsigned i = 0; i < dim; ++i)
            if ((bits >> rho[i]) & 1u) via_rho |= std::uint64_t(1) << ((dim - i) % dim);
        rho_form_ok = rho_form_ok && via_rho == xs.bits;
    });
    col.expect_true("lemma4.circledast_product_closed_form", n, prod_ok);
    col.expect_true("lemma4.gamma0_gamma_half_coefficient_sums", n, gamma_ok);
    col.expect_true("lemma4.involution_via_rho", n, rho_form_ok);
}

void suite_lemma5(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    const std::uint64_t one_plus_hat = ctx.mask() ^ 1u;
    const std::uint64_t one_plus_hat_sq = hat_even(ctx).bits ^ 1u;

    const auto w = enumerate(ctx, SubgroupSpec::phi_image(Involution::Circledast));
    col.expect_true("lemma5.one_plus_hatC_outside_W", n, !w.contains_bits(one_plus_hat));

    const auto squares =
        enumerate(ctx, SubgroupSpec::squares_of(SubgroupSpec::unitary(Involution::Circledast)));
    col.expect_true("lemma5.one_plus_hatC2_is_not_a_unitary_square", n,
                    !squares.contains_bits(one_plus_hat_sq));
}

void suite_lemma6(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    const auto vu = enumerate(ctx, SubgroupSpec::unitary(Involution::Circledast));
    col.expect_big("lemma6.unitary_order", n, pow2(ctx.dim() / 2), vu.order());

    const auto w = enumerate(ctx, SubgroupSpec::phi_image(Involution::Circledast));
    const std::uint64_t one_plus_hat = ctx.mask() ^ 1u;
    std::vector<std::uint64_t> product;
    for (std::uint64_t e : w.elements()) {
        product.push_back(e);
        product.push_back(convolve(e, one_plus_hat, ctx.dim(), ctx.mask()));
    }
    std::sort(product.begin(), product.end());
    product.erase(std::unique(product.begin(), product.end()), product.end());
    const bool decomposes = product == vu.elements() && 2 * w.order() == vu.order();
    col.expect_true("lemma6.unitary_splits_as_W_times_one_plus_hatC", n, decomposes);
}

void suite_lemma7(Collector& col, int n, const VerifyOptions& opts) {
    const CountOptions copts{opts.workers, std::nullopt};
    const MCContext d = make_group_algebra(Family::Dihedral, n);
    const MCContext q = make_group_algebra(Family::Quaternion, n);
    const bool use_brute = n <= 3;
    const CensusReport rd = use_brute ? count_brute(d, copts) : count_structural(d, copts);
    const CensusReport rq = use_brute ? count_brute(q, copts) : count_structural(q, copts);
    col.expect_big("lemma7.type1_counts_agree_D_vs_Q", n, rd.type1, rq.type1);
}

void suite_lemma8(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    const auto full = enumerate(ctx, SubgroupSpec::full_v());

    for (Involution sigma : {Involution::Star, Involution::Circledast}) {
        if (sigma == Involution::Circledast && n < 3) continue;
        const std::string tag = std::string("lemma8.") + to_string(sigma);

        const auto chain = verify_chain(ctx, sigma, ChainFamily::H);
        col.expect_true(tag + ".chain_strict_inclusions", n, chain.strict_inclusions);
        col.expect_true(tag + ".chain_index2_jumps", n, chain.index2_jumps);
        col.expect_true(tag + ".chain_terminal_is_V", n, chain.terminal_matches);
        col.expect_true(tag + ".odd_sets_empty", n, chain.odd_behaviour);

        std::string bad;
        for (const auto& step : chain.steps)
            if (BigInt(step.order) != order_formula(SubgroupSpec::h(sigma, step.index), n)) {
                bad = "i=" + std::to_string(step.index) + ": " + std::to_string(step.order);
                break;
            }
        col.add(tag + ".chain_orders", n, "2^(3*2^(n-2)+l)", bad.empty() ? "all match" : bad,
                bad.empty());

        const unsigned half = ctx.dim() / 2;
        const bool saturates =
            enumerate(ctx, SubgroupSpec::h(sigma, half)) == full &&
            enumerate(ctx, SubgroupSpec::h(sigma, half + 1)) == full;
        col.expect_true(tag + ".H_is_V_from_half_onward", n, saturates);
    }

    if (n >= 3) {
        const auto j_star = enumerate(ctx, SubgroupSpec::psi_even(Involution::Star));
        const auto sym_sq =
            enumerate(ctx, SubgroupSpec::squares_of(SubgroupSpec::symmetric(Involution::Star)));
        col.expect_true("lemma8.J_star_equals_symmetric_squares", n, j_star == sym_sq);
        col.expect_big("lemma8.J_star_order", n, pow2(ctx.dim() / 4 - 1), j_star.order());

        const auto j_circ = enumerate(ctx, SubgroupSpec::psi_even(Involution::Circledast));
        const auto circ_sq = enumerate(
            ctx, SubgroupSpec::squares_of(SubgroupSpec::symmetric(Involution::Circledast)));
        std::vector<std::uint64_t> product;
        const unsigned half = ctx.dim() / 2;
        for (std::uint64_t e : circ_sq.elements()) {
            product.push_back(e);
            product.push_back(rotl_bits(e, half, ctx.dim(), ctx.mask()));
        }
        std::sort(product.begin(), product.end());
        product.erase(std::unique(product.begin(), product.end()), product.end());
        const bool splits = product == j_circ.elements() && 2 * circ_sq.order() == j_circ.order();
        col.expect_true("lemma8.J_circledast_splits_off_a_half", n, splits);
    }
}

void suite_lemma10(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    const auto chain = verify_chain(ctx, Involution::Star, ChainFamily::L);
    col.expect_true("lemma10.chain_strict_inclusions", n, chain.strict_inclusions);
    col.expect_true("lemma10.chain_index2_jumps", n, chain.index2_jumps);
    col.expect_true("lemma10.chain_terminal_is_lower_layer", n, chain.terminal_matches);
    col.expect_true("lemma10.odd_index_collapses", n, chain.odd_behaviour);

    std::string bad;
    for (const auto& step : chain.steps)
        if (BigInt(step.order) != order_formula(SubgroupSpec::l(Involution::Star, step.index), n)) {
            bad = "i=" + std::to_string(step.index) + ": " + std::to_string(step.order);
            break;
        }
    col.add("lemma10.chain_orders", n, "2^(2^(n-2)+1+l)", bad.empty() ? "all match" : bad,
            bad.empty());

    const auto v2 = enumerate(ctx, SubgroupSpec::lower_layer());
    col.expect_true("lemma10.L_is_lower_layer_from_half_onward", n,
                    enumerate(ctx, SubgroupSpec::l(Involution::Star, ctx.dim() / 2)) == v2);
}

void suite_eq2(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    const auto vu = enumerate(ctx, SubgroupSpec::unitary(Involution::Star));
    col.expect_big("eq2.star_unitary_order", n, pow2(ctx.dim() / 2 + 1), vu.order());
}

void suite_eq13(Collector& col, int n, const VerifyOptions&) {
    const CyclicContext ctx = make_context(n);
    std::string bad;
    for (unsigned i = 0; i < ctx.dim() && bad.empty(); ++i) {
        if (!(enumerate(ctx, SubgroupSpec::l(Involution::Circledast, i)) ==
              enumerate(ctx, SubgroupSpec::l(Involution::Star, i))))
            bad = "i=" + std::to_string(i);
    }
    col.add("eq13.L_circledast_equals_L_star", n, "equal for all i", bad.empty() ? "all equal" : bad,
            bad.empty());

    bool pointwise = true;
    const auto lower = enumerate(ctx, SubgroupSpec::lower_layer());
    for (std::uint64_t h : lower.elements()) {
        const AlgElem e = make_elem(ctx, h);
        pointwise = pointwise && apply(Involution::Circledast, e) == apply(Involution::Star, e);
    }
    col.expect_true("eq13.involutions_agree_on_lower_layer", n, pointwise);
}

void suite_theorem(Collector& col, int n, const VerifyOptions& opts) {
    const CountOptions copts{opts.workers, std::nullopt};
    for (Family family : {Family::Dihedral, Family::Semidihedral, Family::Quaternion}) {
        if (family == Family::Semidihedral && n < 3) continue;
        const std::string tag = std::string("theorem.") + to_string(family);
        const BigInt want = theta_formula(family, n);
        const unsigned dim = 1u << n;

        const BigInt want_type1 = pow2(dim) * (pow2(n - 1) - 1);
        const BigInt want_type2 = family == Family::Dihedral       ? pow2(dim + 1)
                                  : family == Family::Semidihedral ? pow2(dim)
                                                                   : BigInt(0);

        const MCContext ctx = make_group_algebra(family, n);
        if (n <= 3) {
            const CensusReport b = count_brute(ctx, copts);
            col.expect_big(tag + ".brute_total", n, want, b.total);
            col.expect_big(tag + ".brute_type1", n, want_type1, b.type1);
            col.expect_big(tag + ".brute_type2", n, want_type2, b.type2);
        }
        const CensusReport s = count_structural(ctx, copts);
        col.expect_big(tag + ".structural_total", n, want, s.total);
        col.expect_big(tag + ".structural_type1", n, want_type1, s.type1);
        col.expect_big(tag + ".structural_type2", n, want_type2, s.type2);

        col.expect_big(tag + ".proof_formula_total", n, want,
                       count_proof_decomposition(family, n, OrderSource::Formula).total);
        if (n <= 4)
            col.expect_big(tag + ".proof_enumerated_total", n, want,
                           count_proof_decomposition(family, n, OrderSource::Enumerated).total);

        col.expect_true(tag + ".total_even_involutions_odd", n,
                        s.total % 2 == 0 && (s.total - 1) % 2 == 1);
    }
}

void suite_corollary(Collector& col, int n, const VerifyOptions&) {
    col.expect_true("corollary.theta_values_pairwise_distinct", n, corollary_check(n));
}

using SuiteFn = void (*)(Collector&, int, const VerifyOptions&);

SuiteFn suite_fn(Suite suite) {
    switch (suite) {
        case Suite::Lemma1: return suite_lemma1;
        case Suite::Lemma3: return suite_lemma3;
        case Suite::Lemma4: return suite_lemma4;
        case Suite::Lemma5: return suite_lemma5;
        case Suite::Lemma6: return suite_lemma6;
        case Suite::Lemma7: return suite_lemma7;
        case Suite::Lemma8: return suite_lemma8;
        case Suite::Lemma10: return suite_lemma10;
        case Suite::Eq2: return suite_eq2;
        case Suite::Eq13: return suite_eq13;
        case Suite::Theorem: return suite_theorem;
        case Suite::Corollary: return suite_corollary;
        case Suite::All: break;
    }
    throw std::logic_error("no direct runner for suite");
}

constexpr Suite kConcreteSuites[] = {
    Suite::Lemma1, Suite::Lemma3,  Suite::Lemma4, Suite::Lemma5,   Suite::Lemma6,
    Suite::Lemma7, Suite::Lemma8,  Suite::Lemma10, Suite::Eq2,     Suite::Eq13,
    Suite::Theorem, Suite::Corollary,
};

}  // namespace

const char* to_string(Suite suite) {
    switch (suite) {
        case Suite::Lemma1: return "lemma1";
        case Suite::Lemma3: return "lemma3";
        case Suite::Lemma4: return "lemma4";
        case Suite::Lemma5: return "lemma5";
        case Suite::Lemma6: return "lemma6";
        case Suite::Lemma7: return "lemma7";
        case Suite::Lemma8: return "lemma8";
        case Suite::Lemma10: return "lemma10";
        case Suite::Eq2: return "eq2";
        case Suite::Eq13: return "eq13";
        case Suite::Theorem: return "theorem";
        case Suite::Corollary: return "corollary";
        case Suite::All: return "all";
    }
    return "?";
}

Suite suite_from_string(const std::string& name) {
    for (Suite s : kConcreteSuites)
        if (name == to_string(s)) return s;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown verify suite: " + name);
}

NRange default_range(Suite suite) {
    switch (suite) {
        case Suite::Lemma1: return {2, 4};
        case Suite::Lemma3: return {2, 5};
        case Suite::Lemma4: return {3, 5};
        case Suite::Lemma5: return {3, 4};
        case Suite::Lemma6: return {3, 4};
        case Suite::Lemma7: return {2, 4};
        case Suite::Lemma8: return {2, 4};
        case Suite::Lemma10: return {2, 4};
        case Suite::Eq2: return {2, 4};
        case Suite::Eq13: return {3, 4};
        case Suite::Theorem: return {2, 4};
        case Suite::Corollary: return {2, 6};
        case Suite::All: return {2, 6};
    }
    return {2, 4};
}

VerifyReport run_verify(Suite suite, const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");

    VerifyReport rep;
    rep.suite = suite;
    Collector col;

    if (suite == Suite::All) {
        const NRange requested = opts.range.value_or(default_range(Suite::All));
        for (Suite s : kConcreteSuites) {
            const NRange cap = default_range(s);
            const int lo = std::max(requested.lo, cap.lo);
            const int hi = std::min(requested.hi, cap.hi);
            for (int n = lo; n <= hi; ++n) suite_fn(s)(col, n, opts);
        }
    } else {
        const NRange cap = default_range(suite);
        const NRange range = opts.range.value_or(cap);
        if (range.lo > range.hi || range.lo < cap.lo || range.hi > cap.hi)
            throw std::invalid_argument(std::string("n-range out of cap for suite ") +
                                        to_string(suite) + " (cap " + std::to_string(cap.lo) +
                                        ".." + std::to_string(cap.hi) + ")");
        for (int n = range.lo; n <= range.hi; ++n) suite_fn(suite)(col, n, opts);
    }

    rep.checks = std::move(col.checks);
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const VerifyCheck& c) { return c.pass; });
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

}  // namespace maxclass
