#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maopt/ising.hpp"
#include "maopt/segment.hpp"

namespace maopt {

/// Uniform partition of the total approximation budget over the R canonical
/// rotations: eps_gate = eps_total / R, L = log2(1/eps_gate).
struct EpsilonBudget {
    double eps_total = 0.0;
    long long R = 0;
    double eps_gate = 0.0;
    double L = 0.0;
};

/// Returns nullopt for circuits with R = 0 (nothing to approximate — the
/// trivially-Clifford outcome). Throws std::invalid_argument unless
/// 0 < eps_total < 1.
std::optional<EpsilonBudget> epsilon_budget(const SegmentedCircuit& segmented, double eps_total);

/// Continuous T-count of a strategy assignment, in units of 1 (L folded in).
/// Per segment: σ = -1 costs 3L per confined rotation; σ = +1 costs 1L for
/// the MA'd central rotation plus 3L per boundary-less outer slot (residuals
/// that cannot be exported). Per boundary: 3L when it carries a rotation
/// under σ (pre-existing r_b = 1, or either adjacent segment chose MA),
/// charged once no matter how many contributions merged into it.
///
/// `sigmas` parallels the rotation-bearing lines of `segmented` in order
/// (lines with no rotations have zero cost under every assignment).
double direct_cost(const SegmentedCircuit& segmented, std::span<const SpinConfig> sigmas,
                   double L);

struct SegmentReport {
    int r = 0;
    int e = 0;
    bool ma = false;  // strategy: true = MA, false = DIAG
};

struct BoundaryReport {
    int r = 0;
};

struct QubitChainReport {
    int qubit = 0;
    std::vector<double> h;
    std::vector<double> J;
    std::vector<int> sigma;
    std::vector<SegmentReport> segments;
    std::vector<BoundaryReport> boundaries;
};

struct OptimizationReport {
    bool trivially_clifford = false;
    std::optional<EpsilonBudget> budget;  // engaged iff not trivially clifford
    long long baseline_tcount = 0;
    long long optimized_tcount = 0;
    double reduction_pct = 0.0;
    std::vector<QubitChainReport> qubits;
};

/// Integerized report: ceil(3L) per diagonal rotation instance, ceil(L) per
/// MA instance, ceilings applied to the chosen configuration after
/// optimization. baseline = R * ceil(3L). If integerization would push the
/// chosen configuration above baseline (possible only for continuous-cost
/// co-optima), the all-diagonal plan is reported instead so that
/// optimized <= baseline always holds.
OptimizationReport tcount_report(const SegmentedCircuit& segmented,
                                 std::span<const ChainSpec> chains,
                                 std::span<const SolveResult> solves,
                                 const std::optional<EpsilonBudget>& budget);

inline constexpr int max_consistency_sites = 12;

struct ConsistencyResult {
    bool pass = false;
    double max_deviation = 0.0;
    long long configs_checked = 0;
};

/// Exhaustively verifies, per qubit chain (<= 12 sites), that
///   energy(σ) - energy(all -1) == direct_cost(σ) - direct_cost(all -1)
/// within 1e-9 * L — i.e. that the Ising coefficients are an exact rewriting
/// of the direct accounting model. Failure is a returned result, not an
/// exception.
ConsistencyResult consistency_check(const SegmentedCircuit& segmented, double L);

}  // namespace maopt
