#include "maopt/optimize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maopt {

OptimizeResult optimize_circuit(const Circuit& circuit, const OptimizeOptions& options) {
    OptimizeResult result;
    result.segmented = options.threads == 1 ? segment_circuit(circuit)
                                            : segment_circuit_omp(circuit, options.threads);

    const auto budget = epsilon_budget(result.segmented, options.eps_total);
    if (!budget) {
        result.report = tcount_report(result.segmented, {}, {}, std::nullopt);
        return result;
    }

    std::vector<const QubitLine*> active;
    for (const QubitLine& line : result.segmented.lines)
        if (line.has_rotations()) active.push_back(&line);

    result.chains.resize(active.size());
    result.solves.resize(active.size());
    const auto n = static_cast<std::ptrdiff_t>(active.size());
    const double L = budget->L;

    auto solve_one = [&](std::ptrdiff_t k) {
        result.chains[k] = build_chain(*active[k], L);
        // Strategy selection runs at unit scale: those fields are exact
        // dyadic rationals, so ties break identically for every eps_total.
        SolveResult solved = solve_dp(build_chain(*active[k], 1.0));
        solved.energy = energy(result.chains[k], solved.sigma);
        result.solves[k] = std::move(solved);
    };

    if (options.threads == 1) {
        for (std::ptrdiff_t k = 0; k < n; ++k) solve_one(k);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(options.threads > 0 ? options.threads : omp_get_max_threads())
#endif
        for (std::ptrdiff_t k = 0; k < n; ++k) solve_one(k);
    }

    result.report = tcount_report(result.segmented, result.chains, result.solves, budget);
    return result;
}

Circuit annotated_circuit(const OptimizeResult& result, std::vector<std::string>& labels_out) {
    std::vector<std::vector<bool>> ma(result.segmented.lines.size());
    for (std::size_t li = 0; li < result.segmented.lines.size(); ++li)
        ma[li].assign(result.segmented.lines[li].segments.size(), false);

    std::size_t k = 0;
    for (std::size_t li = 0; li < result.segmented.lines.size(); ++li) {
        if (!result.segmented.lines[li].has_rotations()) continue;
        const auto& qr = result.report.qubits[k];  // post-fallback strategies
        for (std::size_t j = 0; j < qr.sigma.size(); ++j) ma[li][j] = qr.sigma[j] > 0;
        ++k;
    }
    return resynthesize_annotated(result.segmented, ma, labels_out);
}

}  // namespace maopt
