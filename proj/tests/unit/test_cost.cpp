#include <doctest.h>

#include "helpers.hpp"
#include "maopt/cost.hpp"
#include "maopt/optimize.hpp"
#include "maopt/qasm.hpp"

using namespace maopt;

namespace {

// Generic single-qubit block: full Euler triple once canonicalized.
const char* isolated_su2 = "qreg q[1]; rz(0.3) q[0]; ry(0.7) q[0]; rz(1.1) q[0];";

std::vector<SpinConfig> uniform_sigmas(const SegmentedCircuit& seg, std::int8_t value) {
    std::vector<SpinConfig> out(seg.lines.size());
    for (std::size_t i = 0; i < seg.lines.size(); ++i)
        out[i].sigma.assign(seg.lines[i].segments.size(), value);
    return out;
}

}  // namespace

TEST_CASE("epsilon_budget partition") {
    const auto seg = segment_circuit(random_circuit({1, 4, 10, 0.25, 1e-3, 3}, 0));
    const long long R = seg.total_rotations();
    REQUIRE(R >= 1);

    SUBCASE("power-of-two example") {
        // R = 4, eps_total = 2^-10 -> eps_gate = 2^-12, L = 12
        Circuit c = parse("qreg q[1]; rx(0.4) q[0];");
        SegmentedCircuit s1 = segment_circuit(c);
        REQUIRE(s1.total_rotations() == 1);
        const auto b1 = epsilon_budget(s1, 0.5);
        REQUIRE(b1.has_value());
        CHECK(b1->L == 1.0);  // R = 1, eps = 0.5

        const auto b = epsilon_budget(seg, std::pow(2.0, -10.0));
        REQUIRE(b.has_value());
        CHECK(b->eps_gate == std::pow(2.0, -10.0) / static_cast<double>(R));
        if (R == 4) CHECK(b->L == 12.0);
    }
    SUBCASE("domain checks") {
        CHECK_THROWS_AS(epsilon_budget(seg, 1.5), std::invalid_argument);
        CHECK_THROWS_AS(epsilon_budget(seg, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(epsilon_budget(seg, -0.1), std::invalid_argument);
    }
    SUBCASE("trivially Clifford outcome") {
        const auto empty = segment_circuit(parse("qreg q[2]; cx q[0],q[1]; cx q[0],q[1];"));
        CHECK(empty.total_rotations() == 0);
        CHECK(!epsilon_budget(empty, 1e-3).has_value());
    }
}

TEST_CASE("direct_cost anchors") {
    const double L = 8.0;  // power of two keeps the sums exact

    SUBCASE("all-diagonal equals 3 L R") {
        for (int t = 0; t < 20; ++t) {
            SplitMix64 rng(70, t);
            const auto seg = segment_circuit(test::random_mixed_circuit(rng));
            const double cost = direct_cost(seg, uniform_sigmas(seg, -1), L);
            CHECK(cost == 3.0 * L * seg.total_rotations());
        }
    }
    SUBCASE("isolated full-Euler block: 9L diagonal vs 7L MA") {
        const auto seg = segment_circuit(parse(isolated_su2));
        REQUIRE(seg.total_rotations() == 3);
        CHECK(direct_cost(seg, uniform_sigmas(seg, -1), L) == 9.0 * L);
        CHECK(direct_cost(seg, uniform_sigmas(seg, +1), L) == 7.0 * L);
    }
    SUBCASE("empty circuit") {
        Circuit empty;
        empty.num_qubits = 2;
        const auto seg = segment_circuit(empty);
        CHECK(direct_cost(seg, uniform_sigmas(seg, -1), L) == 0.0);
    }
}

TEST_CASE("tcount_report integerization") {
    SUBCASE("baseline anchor at L = 12") {
        // eps_total = 3 * 2^-12 with R = 3 gives eps_gate = 2^-12, L = 12
        const OptimizeResult res =
            optimize_circuit(parse(isolated_su2), {3.0 * std::pow(2.0, -12.0), 1});
        REQUIRE(res.report.budget.has_value());
        CHECK(res.report.budget->L == 12.0);
        CHECK(res.report.baseline_tcount == 108);  // 3 * ceil(36)
        CHECK(res.report.optimized_tcount == 84);  // ceil(12) + 2 * ceil(36)
        CHECK(test::approx(res.report.reduction_pct, 100.0 * (1.0 - 84.0 / 108.0), 1e-12));
        REQUIRE(res.report.qubits.size() == 1);
        CHECK(res.report.qubits[0].sigma == std::vector<int>{+1});
        CHECK(res.report.qubits[0].segments[0].ma);
    }
    SUBCASE("trivially Clifford reports zeros") {
        const OptimizeResult res =
            optimize_circuit(parse("qreg q[2]; cx q[0],q[1];"), {1e-3, 1});
        CHECK(res.report.trivially_clifford);
        CHECK(res.report.baseline_tcount == 0);
        CHECK(res.report.optimized_tcount == 0);
        CHECK(res.report.reduction_pct == 0.0);
        CHECK(res.report.qubits.empty());
    }
    SUBCASE("optimized never exceeds baseline and recomputes") {
        for (int t = 0; t < 40; ++t) {
            const Circuit c = random_circuit({1, 5, 20, 0.3, 1e-3, 44}, t);
            const OptimizeResult res = optimize_circuit(c, {1e-3, 1});
            CHECK(res.report.optimized_tcount <= res.report.baseline_tcount);
            if (!res.report.budget) continue;

            const auto c3 = static_cast<long long>(std::ceil(3.0 * res.report.budget->L));
            const auto c1 = static_cast<long long>(std::ceil(res.report.budget->L));
            long long recomputed = 0;
            for (const auto& qr : res.report.qubits) {
                for (std::size_t j = 0; j < qr.segments.size(); ++j)
                    recomputed += qr.segments[j].ma ? c1 + qr.segments[j].e * c3
                                                    : qr.segments[j].r * c3;
                for (std::size_t j = 0; j < qr.boundaries.size(); ++j)
                    if (qr.boundaries[j].r == 1 || qr.sigma[j] > 0 || qr.sigma[j + 1] > 0)
                        recomputed += c3;
            }
            CHECK(recomputed == res.report.optimized_tcount);
            CHECK(res.report.baseline_tcount == res.report.budget->R * c3);
        }
    }
}

TEST_CASE("hamiltonian is an exact rewriting of the direct cost") {
    SUBCASE("single site is exact analytically") {
        const auto seg = segment_circuit(parse(isolated_su2));
        const ConsistencyResult res = consistency_check(seg, 12.0);
        CHECK(res.pass);
        CHECK(res.max_deviation <= 1e-12);
    }
    SUBCASE("random circuit sweep") {
        int checked = 0;
        for (int t = 0; checked < 50 && t < 500; ++t) {
            const Circuit c = random_circuit({1, 4, 8, 0.3, 1e-3, 71}, t);
            const auto seg = segment_circuit(c);
            bool small = true;
            for (const auto& line : seg.lines)
                small = small && line.segments.size() <= std::size_t(max_consistency_sites);
            if (!small || seg.total_rotations() == 0) continue;
            const auto budget = epsilon_budget(seg, 1e-3);
            const ConsistencyResult res = consistency_check(seg, budget->L);
            CHECK(res.pass);
            ++checked;
        }
        CHECK(checked == 50);
    }
    SUBCASE("circuits with folded fixed gates") {
        int checked = 0;
        for (int t = 0; checked < 25 && t < 500; ++t) {
            SplitMix64 rng(75, t);
            const Circuit c = test::random_mixed_circuit(rng, 3, 20);
            const auto seg = segment_circuit(c);
            bool small = seg.total_rotations() > 0;
            for (const auto& line : seg.lines)
                small = small && line.segments.size() <= std::size_t(max_consistency_sites);
            if (!small) continue;
            const ConsistencyResult res = consistency_check(seg, 10.0);
            CHECK(res.pass);
            ++checked;
        }
        CHECK(checked == 25);
    }
    SUBCASE("site cap enforced") {
        const Circuit c = random_circuit({1, 2, 60, 0.9, 1e-3, 72}, 0);
        const auto seg = segment_circuit(c);
        bool any_large = false;
        for (const auto& line : seg.lines)
            any_large = any_large || line.segments.size() > std::size_t(max_consistency_sites);
        REQUIRE(any_large);
        CHECK_THROWS_AS(consistency_check(seg, 10.0), std::invalid_argument);
    }
}

TEST_CASE("budget monotonicity and strategy invariance") {
    const Circuit c = random_circuit({1, 5, 24, 0.3, 1e-3, 73}, 0);
    SUBCASE("smaller eps_total never decreases counts") {
        long long prev_base = 0, prev_opt = 0;
        for (double eps : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
            const OptimizeResult res = optimize_circuit(c, {eps, 1});
            CHECK(res.report.baseline_tcount >= prev_base);
            CHECK(res.report.optimized_tcount >= prev_opt);
            prev_base = res.report.baseline_tcount;
            prev_opt = res.report.optimized_tcount;
        }
    }
    SUBCASE("sigma star is eps-invariant") {
        for (int t = 0; t < 20; ++t) {
            const Circuit circ = random_circuit({1, 5, 24, 0.3, 1e-3, 74}, t);
            const OptimizeResult a = optimize_circuit(circ, {1e-2, 1});
            const OptimizeResult b = optimize_circuit(circ, {1e-6, 1});
            const OptimizeResult d = optimize_circuit(circ, {1e-10, 1});
            REQUIRE(a.report.qubits.size() == b.report.qubits.size());
            REQUIRE(a.report.qubits.size() == d.report.qubits.size());
            for (std::size_t i = 0; i < a.report.qubits.size(); ++i) {
                CHECK(a.report.qubits[i].sigma == b.report.qubits[i].sigma);
                CHECK(a.report.qubits[i].sigma == d.report.qubits[i].sigma);
            }
        }
    }
}
