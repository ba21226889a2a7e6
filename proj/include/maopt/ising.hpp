#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maopt/segment.hpp"

namespace maopt {

/// One 1D Ising instance per qubit: N local fields, N-1 couplings, both in
/// T-count units (the ε-budget scale L is folded into the values).
struct ChainSpec {
    int qubit = 0;
    std::vector<double> h;
    std::vector<double> J;
    std::vector<int> site_segment;  // per-site back-reference: segment position

    std::size_t size() const { return h.size(); }
};

struct SpinConfig {
    std::vector<std::int8_t> sigma;  // +1 = Magnitude Approximation, -1 = Diagonal only
};

enum class SolveMethod { DP, BruteForce };

struct SolveResult {
    SpinConfig sigma;
    double energy = 0.0;  // always re-evaluated via energy(chain, sigma)
    SolveMethod method = SolveMethod::DP;
};

/// Fields and couplings of one qubit line, scaled by L = log2(1/eps_gate):
///   J_b = (3/4) (1 - r_b) L
///   h_i = [ (3/2) r_i + (3/4) Σ_adjacent r_b - 2 - (3/4) e_i ] L
/// The h formula is the edge-corrected symmetrization of the interior-only
/// field; for an interior segment whose two boundaries carry equal r it
/// reduces to ((3/2)(r_i + r_b) - 2) L. Both are exact rewritings of the
/// direct cost model (see cost.hpp: direct_cost / consistency_check).
/// Throws std::invalid_argument for L <= 0.
ChainSpec build_chain(const QubitLine& line, double L);

/// H(σ) = -Σ_i (J_i σ_i σ_{i+1} + h_i σ_i), summed left to right.
/// Throws std::invalid_argument on length mismatch.
double energy(const ChainSpec& chain, const SpinConfig& sigma);

/// Exact ground state in O(N) time and memory: forward recursion over the
/// minimal energies of the partial chain ending in σ_i = ±1, then
/// backtracking. Ties take the else branch (predecessor -1); a final tie
/// resolves to σ_N = -1.
SolveResult solve_dp(const ChainSpec& chain);

inline constexpr int max_brute_force_sites = 24;

/// Exhaustive 2^N sweep; verification oracle. Among co-optimal configurations
/// only the energy is guaranteed to match solve_dp. Throws for N > 24.
SolveResult brute_force_solve(const ChainSpec& chain);

/// Solve every chain with solve_dp. Serial reference implementation.
std::vector<SolveResult> solve_chains(std::span<const ChainSpec> chains);

/// OpenMP version; one chain per task, results in input order (bit-identical
/// to the serial path). threads == 0 uses the OpenMP default.
std::vector<SolveResult> solve_chains_omp(std::span<const ChainSpec> chains, int threads = 0);

}  // namespace maopt
