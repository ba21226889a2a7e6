#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "maopt/bench.hpp"
#include "maopt/optimize.hpp"

namespace maopt {

struct Timings {
    double parse_ms = 0.0;
    double segment_ms = 0.0;
    double solve_ms = 0.0;
    double total_ms = 0.0;
};

/// Stable-schema report (see schemas/report.schema.json). Timings are
/// optional: omitting them keeps equal inputs byte-identical.
nlohmann::ordered_json report_json(const OptimizationReport& report,
                                   const std::optional<Timings>& timings = std::nullopt);

nlohmann::ordered_json bench_json(const BenchSummary& summary);

nlohmann::ordered_json verify_json(const VerifyReport& report);

/// dump(2) plus trailing newline — the single serialization used everywhere.
std::string to_text(const nlohmann::ordered_json& j);

}  // namespace maopt
