#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "maxclass/bigint.hpp"
#include "maxclass/maxclass_algebra.hpp"

namespace maxclass {

enum class CountMethod : std::uint8_t { Formula, Brute, Structural, ProofDecomposition };

const char* to_string(CountMethod method);

/// Result of one Theta computation. `total` counts all solutions of x^2 = 1
/// in V(F2G), identity included; the involution count is total - 1.
/// When budget_exhausted is set the counts are not meaningful and are zeroed.
struct CensusReport {
    Family family = Family::Dihedral;
    int n = 0;
    CountMethod method = CountMethod::Formula;
    BigInt type1;
    BigInt type2;
    BigInt total;
    double elapsed_ms = 0.0;
    bool budget_exhausted = false;
};

struct CountOptions {
    int workers = 1;
    std::optional<double> budget_seconds;
};

/// Closed-form Theta_G(2):
///   D: 2^(2^n+n-1) + 2^(2^n),  SD: 2^(2^n+n-1),  Q: 2^(2^n+n-1) - 2^(2^n).
BigInt theta_formula(Family family, int n);

/// Exhaustive scan of all 2^(2 dim - 1) normalized units. n <= 3 completes
/// unconditionally; n = 4 is allowed (2^31 candidates) and should be budgeted.
CensusReport count_brute(const MCContext& ctx, const CountOptions& opts = {});

/// Per-x2 affine-linear solve: for each x2 the order-two conditions on x1 are
/// one stacked GF(2) system (Frobenius rows, annihilation rows, parity row);
/// consistent systems contribute 2^kernel_dim solutions. n <= 5.
CensusReport count_structural(const MCContext& ctx, const CountOptions& opts = {});

enum class OrderSource : std::uint8_t { Formula, Enumerated };

/// Assemble Theta from subgroup orders the way the type-1/type-2 splitting
/// does: |V[2]| + sum over even 0 < 2l < 2^(n-1) of |H_2l|/|S_2l| * |L_2l|
/// + sum over 2^(n-1) <= j < 2^n of |V|/|S_j| * |V[2]| for type 1, plus the
/// family's type-2 product (|H_0||L_0| for D, |H_0|/2 * |L_0| for SD, 0 for Q).
CensusReport count_proof_decomposition(Family family, int n, OrderSource source);

/// True iff the formula values are pairwise distinct at this n
/// (D and Q only at n = 2).
bool corollary_check(int n);

}  // namespace maxclass
