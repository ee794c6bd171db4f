#include "maxclass/census.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "maxclass/f2linalg.hpp"
#include "maxclass/subgroups.hpp"

namespace maxclass {

namespace {

using detail::apply_perm;
using detail::convolve;
using detail::parity;
using detail::rotl_bits;
using detail::square_bits;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int clamp_workers(int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    return workers > 256 ? 256 : workers;
}

struct Tally {
    std::uint64_t type1 = 0;
    std::uint64_t type2 = 0;
};

// Run fn(x2, tally) over x2 in [0, 2^dim), partitioned contiguously across
// workers; merge is addition, so the result is independent of the schedule.
// Each worker owns a copy of fn (fn may carry scratch buffers).
template <typename PerX2>
bool parallel_over_x2(unsigned dim, const CountOptions& opts, Tally& out, PerX2 fn) {
    const std::uint64_t count = std::uint64_t(1) << dim;
    const int workers = clamp_workers(opts.workers);
    const auto t0 = Clock::now();
    std::atomic<bool> exhausted{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    std::vector<Tally> partial(workers);
    const auto make_worker = [&](int w) {
        return [&, w, f = fn]() mutable {
            const std::uint64_t lo = count * std::uint64_t(w) / workers;
            const std::uint64_t hi = count * std::uint64_t(w + 1) / workers;
            Tally local;
            try {
                for (std::uint64_t x2 = lo; x2 < hi; ++x2) {
                    if ((x2 & 63) == 0) {
                        if (exhausted.load(std::memory_order_relaxed)) return;
                        if (opts.budget_seconds &&
                            ms_since(t0) > *opts.budget_seconds * 1000.0) {
                            exhausted.store(true, std::memory_order_relaxed);
                            return;
                        }
                    }
                    f(x2, local);
                }
            } catch (...) {
                const std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
            partial[w] = local;
        };
    };

    if (workers == 1) {
        make_worker(0)();
    } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(make_worker(w));
        make_worker(0)();
        for (auto& t : pool) t.join();
    }

    if (error) std::rethrow_exception(error);
    if (exhausted.load()) return false;
    for (const auto& p : partial) {
        out.type1 += p.type1;
        out.type2 += p.type2;
    }
    return true;
}

CensusReport finish_report(const MCContext& ctx, CountMethod method, const Tally& tally,
                           bool completed, Clock::time_point t0) {
    CensusReport rep;
    rep.family = ctx.family();
    rep.n = ctx.cyclic().n();
    rep.method = method;
    rep.budget_exhausted = !completed;
    if (completed) {
        rep.type1 = tally.type1;
        rep.type2 = tally.type2;
        rep.total = rep.type1 + rep.type2;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace

const char* to_string(CountMethod method) {
    switch (method) {
        case CountMethod::Formula: return "formula";
        case CountMethod::Brute: return "brute";
        case CountMethod::Structural: return "structural";
        case CountMethod::ProofDecomposition: return "proof";
    }
    return "?";
}

BigInt theta_formula(Family family, int n) {
    if (family == Family::Semidihedral && n < 3)
        throw std::invalid_argument("semidihedral group requires n >= 3");
    if (n < CyclicContext::kMinN || n > CyclicContext::kMaxN)
        throw std::invalid_argument("theta_formula: n out of range");
    const unsigned dim = 1u << n;
    const BigInt main_term = pow2(dim + n - 1);
    switch (family) {
        case Family::Dihedral: return main_term + pow2(dim);
        case Family::Semidihedral: return main_term;
        case Family::Quaternion: return main_term - pow2(dim);
    }
    throw std::logic_error("unreachable");
}

CensusReport count_brute(const MCContext& ctx, const CountOptions& opts) {
    const auto& cyc = ctx.cyclic();
    if (cyc.n() > 4)
        throw std::invalid_argument("count_brute: n > 4 exceeds the exhaustive budget");
    const unsigned dim = cyc.dim();
    const std::uint64_t mask = cyc.mask();
    const auto& twist_map = detail::exponent_map(cyc, ctx.twist());
    const unsigned bshift = ctx.b_square_shift();
    const auto t0 = Clock::now();

    Tally tally;
    const bool completed = parallel_over_x2(dim, opts, tally, [&](std::uint64_t x2, Tally& local) {
        const bool chi2 = parity(x2);
        const std::uint64_t x2t = apply_perm(x2, twist_map);
        // first component of u^2 is x1^2 + x2 x2^s b^2; precompute the constant part
        const std::uint64_t quad = rotl_bits(convolve(x2, x2t, dim, mask), bshift, dim, mask);
        const std::uint64_t want_sq = quad ^ 1u;

        std::uint64_t hits = 0;
        const std::uint64_t free_count = std::uint64_t(1) << (dim - 1);
        for (std::uint64_t f = 0; f < free_count; ++f) {
            // force chi(x1) = 1 + chi(x2) via the a^0 coefficient
            const std::uint64_t x1 =
                (f << 1) | ((parity(f) == chi2) ? 1u : 0u);
            if (square_bits(x1, dim) != want_sq) continue;
            const std::uint64_t x1t = apply_perm(x1, twist_map);
            if (convolve(x1 ^ x1t, x2, dim, mask) == 0) ++hits;
        }
        (chi2 ? local.type2 : local.type1) += hits;
    });

    return finish_report(ctx, CountMethod::Brute, tally, completed, t0);
}

CensusReport count_structural(const MCContext& ctx, const CountOptions& opts) {
    const auto& cyc = ctx.cyclic();
    if (cyc.n() > 5)
        throw std::invalid_argument("count_structural: n > 5 exceeds the outer-loop budget");
    const unsigned dim = cyc.dim();
    const unsigned half = dim / 2;
    const std::uint64_t mask = cyc.mask();
    const auto& twist_map = detail::exponent_map(cyc, ctx.twist());
    const unsigned bshift = ctx.b_square_shift();
    const bool tripwire = cyc.n() <= 3;  // odd-valuation x2 must contribute nothing
    const auto t0 = Clock::now();

    // Constant rows: Frobenius block (rows 0..dim-1) and the parity row (2*dim).
    F2Matrix base(2 * dim + 1, dim);
    for (unsigned r = 0; r < dim; r += 2)
        base.set_row_word(r, (std::uint64_t(1) << (r / 2)) | (std::uint64_t(1) << (r / 2 + half)));
    base.set_row_word(2 * dim, mask);

    Tally tally;
    const bool completed = parallel_over_x2(dim, opts, tally, [&, base](std::uint64_t x2,
                                                                        Tally& local) mutable {
        // Annihilation block: rows of x -> (x + x^s) x2.
        std::uint64_t cols[64];
        for (unsigned j = 0; j < dim; ++j)
            cols[j] = rotl_bits(x2, j, dim, mask) ^ rotl_bits(x2, twist_map[j], dim, mask);
        for (unsigned r = 0; r < dim; ++r) {
            std::uint64_t row = 0;
            for (unsigned j = 0; j < dim; ++j) row |= ((cols[j] >> r) & 1u) << j;
            base.set_row_word(dim + r, row);
        }

        const bool chi2 = parity(x2);
        const std::uint64_t x2t = apply_perm(x2, twist_map);
        const std::uint64_t c =
            rotl_bits(convolve(x2, x2t, dim, mask), bshift, dim, mask) ^ 1u;

        F2Vector rhs(2 * dim + 1);
        for (unsigned r = 0; r < dim; ++r)
            if ((c >> r) & 1u) rhs.set(r, true);
        rhs.set(2 * dim, !chi2);

        const SolutionSet sol = solve_affine(base, rhs);
        const std::uint64_t hits = sol.consistent ? (std::uint64_t(1) << sol.kernel_dim) : 0;

        if (tripwire && x2 != 0 && !chi2) {
            const unsigned deg = filtration_degree(make_elem(cyc, x2));
            if (deg % 2 == 1 && deg < half && hits != 0)
                throw std::logic_error("structural count: odd-valuation x2 produced solutions");
        }
        (chi2 ? local.type2 : local.type1) += hits;
    });

    return finish_report(ctx, CountMethod::Structural, tally, completed, t0);
}

CensusReport count_proof_decomposition(Family family, int n, OrderSource source) {
    if (family == Family::Semidihedral && n < 3)
        throw std::invalid_argument("semidihedral group requires n >= 3");
    if (n < CyclicContext::kMinN || n > CyclicContext::kMaxN)
        throw std::invalid_argument("count_proof_decomposition: n out of range");
    const auto t0 = Clock::now();
    const Involution tw = family == Family::Semidihedral ? Involution::Circledast
                                                         : Involution::Star;

    const auto assemble = [&](const std::function<BigInt(const SubgroupSpec&)>& o) {
        const unsigned dim = 1u << n;
        const unsigned half = dim / 2;
        const unsigned quarter = dim / 4;

        const auto exact_div = [](const BigInt& a, const BigInt& b) {
            if (b == 0 || a % b != 0) throw std::logic_error("non-exact order quotient");
            return BigInt(a / b);
        };

        const BigInt v = o(SubgroupSpec::full_v());
        const BigInt v2 = o(SubgroupSpec::lower_layer());

        BigInt type1 = v2;
        for (unsigned l = 1; l < quarter; ++l)
            type1 += exact_div(o(SubgroupSpec::h(tw, 2 * l)), o(SubgroupSpec::stabilizer(2 * l))) *
                     o(SubgroupSpec::l(tw, 2 * l));
        for (unsigned j = half; j < dim; ++j)
            type1 += exact_div(v, o(SubgroupSpec::stabilizer(j))) * v2;

        BigInt type2 = 0;
        if (family == Family::Dihedral)
            type2 = o(SubgroupSpec::h(Involution::Star, 0)) * o(SubgroupSpec::l(Involution::Star, 0));
        else if (family == Family::Semidihedral)
            type2 = exact_div(o(SubgroupSpec::h(Involution::Circledast, 0)), 2) *
                    o(SubgroupSpec::l(Involution::Circledast, 0));

        CensusReport rep;
        rep.family = family;
        rep.n = n;
        rep.method = CountMethod::ProofDecomposition;
        rep.type1 = type1;
        rep.type2 = type2;
        rep.total = type1 + type2;
        rep.elapsed_ms = ms_since(t0);
        return rep;
    };

    if (source == OrderSource::Formula)
        return assemble([n](const SubgroupSpec& s) { return order_formula(s, n); });

    // Enumerated orders need the explicit subgroups (n <= 4).
    const CyclicContext cyc = make_context(n);
    return assemble([&cyc](const SubgroupSpec& s) { return BigInt(enumerate(cyc, s).order()); });
}

bool corollary_check(int n) {
    if (n < CyclicContext::kMinN || n > CyclicContext::kMaxN)
        throw std::invalid_argument("corollary_check: n out of range");
    const BigInt d = theta_formula(Family::Dihedral, n);
    const BigInt q = theta_formula(Family::Quaternion, n);
    if (n == 2) return d != q;
    const BigInt sd = theta_formula(Family::Semidihedral, n);
    return d != q && d != sd && sd != q;
}

}  // namespace maxclass
