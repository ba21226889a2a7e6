#pragma once

#include <string>
#include <vector>

#include "maopt/cost.hpp"

namespace maopt {

struct OptimizeOptions {
    double eps_total = 1e-3;
    int threads = 1;  // 1 = serial reference path, 0 = OpenMP default, n = n threads
};

struct OptimizeResult {
    SegmentedCircuit segmented;
    std::vector<ChainSpec> chains;      // aligned with rotation-bearing lines
    std::vector<SolveResult> solves;    // strategy per chain
    OptimizationReport report;
};

/// Full pipeline: segment, budget, per-qubit chains, exact ground states,
/// integerized report. Strategy selection runs on the unit-scale (L = 1)
/// chain, whose fields are exact dyadic rationals, so the chosen σ* is
/// bit-identical for every eps_total; reported chains and energies carry L.
OptimizeResult optimize_circuit(const Circuit& circuit, const OptimizeOptions& options);

/// Canonical circuit of the result with per-rotation strategy labels
/// ("MA" / "DIAG") suitable for emit_qasm annotation.
Circuit annotated_circuit(const OptimizeResult& result, std::vector<std::string>& labels_out);

}  // namespace maopt
