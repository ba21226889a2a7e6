#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maopt/circuit.hpp"
#include "maopt/prng.hpp"

namespace maopt {

struct BenchParams {
    int num_circuits = 100;
    int qubits = 5;
    int depth = 40;  // gate layers
    double cnot_probability = 0.3;
    double eps_total = 1e-3;
    std::uint64_t seed = 42;
};

/// Layered random circuit from stream (seed, index) of the pinned SplitMix64
/// generator. Per layer, each qubit draws u ~ U[0,1); with u < cnot_probability
/// (and at least two qubits) it gets a CNOT with a uniformly chosen distinct
/// partner and uniform control/target order, otherwise a rotation with uniform
/// axis in {X, Y, Z} and angle uniform in [0, 2π). Draw order per gate is
/// pinned: u, then partner, direction — or axis, angle.
Circuit random_circuit(const BenchParams& params, int index);

/// Haar-seeded random SU(2) element (quaternion of four normal deviates,
/// normalized). Used by the verification suites and tests.
Unitary2 random_unitary(SplitMix64& rng);

struct BenchRow {
    int index = 0;
    long long baseline = 0;
    long long optimized = 0;
    double reduction_pct = 0.0;
};

struct BenchSummary {
    BenchParams params;
    std::vector<BenchRow> rows;
    double mean_reduction_pct = 0.0;
    double median_reduction_pct = 0.0;
    double min_reduction_pct = 0.0;
    double max_reduction_pct = 0.0;
};

/// Generate + optimize every circuit of the ensemble. Serial reference.
BenchSummary run_bench(const BenchParams& params);

/// OpenMP version, one circuit per task; rows are collected in index order so
/// the summary is identical to the serial one for any schedule.
BenchSummary run_bench_omp(const BenchParams& params, int threads = 0);

std::string bench_csv(const BenchSummary& summary);

// --- Self-verification oracle suites -------------------------------------

struct VerifySuite {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    double max_deviation = 0.0;
};

struct VerifyReport {
    std::vector<VerifySuite> suites;
    bool pass = true;
    bool vacuous = false;  // trials == 0
};

inline constexpr int max_verify_sites = 16;

/// Runs the oracle suites: DP vs brute force on random chains, Hamiltonian vs
/// direct accounting on random circuits, canonicalization round trips against
/// the dense unitary oracle, and Euler reconstruction over all 12 axis
/// triples. max_sites caps the brute-force chains (<= 16). trials == 0 is a
/// vacuous pass.
VerifyReport run_verify(int max_sites, long long trials, std::uint64_t seed, int threads = 0);

}  // namespace maopt
