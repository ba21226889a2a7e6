#include "maopt/json_io.hpp"

namespace maopt {

using nlohmann::ordered_json;

ordered_json report_json(const OptimizationReport& report, const std::optional<Timings>& timings) {
    ordered_json j;
    j["version"] = 1;
    j["trivially_clifford"] = report.trivially_clifford;
    if (report.budget) {
        j["budget"] = {{"eps_total", report.budget->eps_total},
                       {"eps_gate", report.budget->eps_gate},
                       {"R", report.budget->R},
                       {"L", report.budget->L}};
    } else {
        j["budget"] = nullptr;
    }
    j["baseline_tcount"] = report.baseline_tcount;
    j["optimized_tcount"] = report.optimized_tcount;
    j["reduction_pct"] = report.reduction_pct;

    ordered_json qubits = ordered_json::array();
    for (const QubitChainReport& qr : report.qubits) {
        ordered_json q;
        q["qubit"] = qr.qubit;
        q["h"] = qr.h;
        q["J"] = qr.J;
        q["sigma"] = qr.sigma;
        ordered_json segments = ordered_json::array();
        for (const SegmentReport& sr : qr.segments)
            segments.push_back(
                {{"r", sr.r}, {"e", sr.e}, {"strategy", sr.ma ? "MA" : "DIAG"}});
        q["segments"] = std::move(segments);
        ordered_json boundaries = ordered_json::array();
        for (const BoundaryReport& br : qr.boundaries) boundaries.push_back({{"r", br.r}});
        q["boundaries"] = std::move(boundaries);
        qubits.push_back(std::move(q));
    }
    j["qubits"] = std::move(qubits);

    if (timings) {
        j["timings"] = {{"parse_ms", timings->parse_ms},
                        {"segment_ms", timings->segment_ms},
                        {"solve_ms", timings->solve_ms},
                        {"total_ms", timings->total_ms}};
    }
    return j;
}

ordered_json bench_json(const BenchSummary& summary) {
    ordered_json j;
    j["version"] = 1;
    j["params"] = {{"num_circuits", summary.params.num_circuits},
                   {"qubits", summary.params.qubits},
                   {"depth", summary.params.depth},
                   {"cnot_probability", summary.params.cnot_probability},
                   {"eps_total", summary.params.eps_total},
                   {"seed", summary.params.seed}};
    ordered_json rows = ordered_json::array();
    for (const BenchRow& row : summary.rows)
        rows.push_back({{"index", row.index},
                        {"baseline", row.baseline},
                        {"optimized", row.optimized},
                        {"reduction_pct", row.reduction_pct}});
    j["circuits"] = std::move(rows);
    j["summary"] = {{"mean_reduction_pct", summary.mean_reduction_pct},
                    {"median_reduction_pct", summary.median_reduction_pct},
                    {"min_reduction_pct", summary.min_reduction_pct},
                    {"max_reduction_pct", summary.max_reduction_pct}};
    return j;
}

ordered_json verify_json(const VerifyReport& report) {
    ordered_json j;
    j["version"] = 1;
    j["pass"] = report.pass;
    j["vacuous"] = report.vacuous;
    ordered_json suites = ordered_json::array();
    for (const VerifySuite& suite : report.suites)
        suites.push_back({{"name", suite.name},
                          {"cases", suite.cases},
                          {"failures", suite.failures},
                          {"max_deviation", suite.max_deviation}});
    j["suites"] = std::move(suites);
    return j;
}

std::string to_text(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace maopt
