#include "maopt/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "maopt/cost.hpp"
#include "maopt/dense.hpp"
#include "maopt/optimize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maopt {

Circuit random_circuit(const BenchParams& params, int index) {
    SplitMix64 rng(params.seed, static_cast<std::uint64_t>(index));
    Circuit circuit;
    circuit.num_qubits = params.qubits;
    circuit.gates.reserve(static_cast<std::size_t>(params.depth) * params.qubits);

    for (int layer = 0; layer < params.depth; ++layer) {
        for (int q = 0; q < params.qubits; ++q) {
            const double u = rng.next_double();
            if (u < params.cnot_probability && params.qubits > 1) {
                int partner = static_cast<int>(rng.next_below(params.qubits - 1));
                if (partner >= q) ++partner;
                const bool q_controls = rng.next_below(2) == 0;
                circuit.gates.push_back(q_controls ? CnotGate{q, partner}
                                                   : CnotGate{partner, q});
            } else {
                const Axis axis = static_cast<Axis>(rng.next_below(3));
                circuit.gates.push_back(RotationGate{q, axis, rng.next_double() * two_pi});
            }
        }
    }
    return circuit;
}

Unitary2 random_unitary(SplitMix64& rng) {
    auto normal_pair = [&rng](double& a, double& b) {
        const double u1 = 1.0 - rng.next_double();  // (0, 1]
        const double u2 = rng.next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = r * std::cos(two_pi * u2);
        b = r * std::sin(two_pi * u2);
    };
    double w, x, y, z;
    normal_pair(w, x);
    normal_pair(y, z);
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n;
    x /= n;
    y /= n;
    z /= n;

    const Unitary2 su{{w, -z}, {-y, -x}, {y, -x}, {w, z}};
    const double phi = rng.next_double() * two_pi;
    return cplx{std::cos(phi), std::sin(phi)} * su;
}

namespace {

void summarize(BenchSummary& summary) {
    if (summary.rows.empty()) return;
    std::vector<double> reductions;
    reductions.reserve(summary.rows.size());
    double sum = 0.0;
    for (const BenchRow& row : summary.rows) {
        reductions.push_back(row.reduction_pct);
        sum += row.reduction_pct;
    }
    std::sort(reductions.begin(), reductions.end());
    const std::size_t n = reductions.size();
    summary.mean_reduction_pct = sum / static_cast<double>(n);
    summary.median_reduction_pct = n % 2 == 1
                                       ? reductions[n / 2]
                                       : (reductions[n / 2 - 1] + reductions[n / 2]) / 2.0;
    summary.min_reduction_pct = reductions.front();
    summary.max_reduction_pct = reductions.back();
}

BenchRow bench_one(const BenchParams& params, int index) {
    const Circuit circuit = random_circuit(params, index);
    const OptimizeResult opt = optimize_circuit(circuit, {params.eps_total, 1});
    return {index, opt.report.baseline_tcount, opt.report.optimized_tcount,
            opt.report.reduction_pct};
}

}  // namespace

BenchSummary run_bench(const BenchParams& params) {
    BenchSummary summary;
    summary.params = params;
    summary.rows.resize(params.num_circuits);
    for (int i = 0; i < params.num_circuits; ++i) summary.rows[i] = bench_one(params, i);
    summarize(summary);
    return summary;
}

BenchSummary run_bench_omp(const BenchParams& params, int threads) {
    BenchSummary summary;
    summary.params = params;
    summary.rows.resize(params.num_circuits);
    const int n = params.num_circuits;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int i = 0; i < n; ++i) summary.rows[i] = bench_one(params, i);
    summarize(summary);
    return summary;
}

std::string bench_csv(const BenchSummary& summary) {
    std::ostringstream out;
    out << "index,baseline,optimized,reduction_pct\n";
    char buf[64];
    for (const BenchRow& row : summary.rows) {
        std::snprintf(buf, sizeof(buf), "%.10g", row.reduction_pct);
        out << row.index << ',' << row.baseline << ',' << row.optimized << ',' << buf << '\n';
    }
    return out.str();
}

// --- verification suites ---------------------------------------------------

namespace {

ChainSpec random_chain(SplitMix64& rng, int max_sites) {
    const auto n = static_cast<std::size_t>(1 + rng.next_below(max_sites));
    ChainSpec chain;
    chain.h.resize(n);
    chain.J.resize(n - 1);
    for (double& h : chain.h) h = rng.next_double() * 20.0 - 10.0;
    for (double& j : chain.J) j = rng.next_double() * 20.0 - 10.0;
    return chain;
}

// Mixed random circuit for canonicalization tests: rotations, fixed Clifford
// gates and CNOTs, <= 4 qubits, <= 40 gates.
Circuit random_mixed_circuit(SplitMix64& rng) {
    Circuit circuit;
    circuit.num_qubits = static_cast<int>(1 + rng.next_below(4));
    const auto gates = rng.next_below(41);
    for (std::uint64_t g = 0; g < gates; ++g) {
        const auto kind = rng.next_below(100);
        if (kind < 20 && circuit.num_qubits > 1) {
            const int c = static_cast<int>(rng.next_below(circuit.num_qubits));
            int t = static_cast<int>(rng.next_below(circuit.num_qubits - 1));
            if (t >= c) ++t;
            circuit.gates.push_back(CnotGate{c, t});
        } else if (kind < 45) {
            const int q = static_cast<int>(rng.next_below(circuit.num_qubits));
            circuit.gates.push_back(FixedGate{q, static_cast<FixedGateKind>(rng.next_below(8))});
        } else {
            const int q = static_cast<int>(rng.next_below(circuit.num_qubits));
            circuit.gates.push_back(
                RotationGate{q, static_cast<Axis>(rng.next_below(3)), rng.next_double() * two_pi});
        }
    }
    return circuit;
}

std::vector<std::array<Axis, 3>> all_axis_triples() {
    std::vector<std::array<Axis, 3>> triples;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (a != b && b != c)
                    triples.push_back({static_cast<Axis>(a), static_cast<Axis>(b),
                                       static_cast<Axis>(c)});
    return triples;
}

template <typename Fn>
void parallel_cases(long long cases, int threads, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (long long t = 0; t < cases; ++t) fn(t);
    (void)threads;
}

}  // namespace

VerifyReport run_verify(int max_sites, long long trials, std::uint64_t seed, int threads) {
    if (max_sites < 1 || max_sites > max_verify_sites)
        throw std::invalid_argument("run_verify: max_sites must lie in [1, 16]");
    if (trials < 0) throw std::invalid_argument("run_verify: trials must be >= 0");

    VerifyReport report;
    if (trials == 0) {
        report.vacuous = true;
        report.pass = true;
        return report;
    }

    {  // DP vs exhaustive enumeration on random chains
        VerifySuite suite{"dp-vs-brute-force", trials, 0, 0.0};
        std::vector<double> devs(trials, 0.0);
        parallel_cases(trials, threads, [&](long long t) {
            SplitMix64 rng(seed, 1000 + static_cast<std::uint64_t>(t));
            const ChainSpec chain = random_chain(rng, max_sites);
            const SolveResult dp = solve_dp(chain);
            const SolveResult bf = brute_force_solve(chain);
            double dev = std::abs(dp.energy - bf.energy);
            // the returned energy must re-evaluate exactly
            dev = std::max(dev, std::abs(dp.energy - energy(chain, dp.sigma)));
            devs[t] = dev;
        });
        for (double dev : devs) {
            suite.max_deviation = std::max(suite.max_deviation, dev);
            if (dev > tol::energy_match) ++suite.failures;
        }
        report.suites.push_back(suite);
    }

    {  // Hamiltonian coefficients vs direct cost accounting
        const long long wanted = std::min<long long>(trials, 200);
        const BenchParams gen{1, 4, 8, 0.3, 1e-3, seed};
        std::vector<Circuit> circuits;
        for (int j = 0; static_cast<long long>(circuits.size()) < wanted && j < 100000; ++j) {
            Circuit c = random_circuit(gen, j);
            const SegmentedCircuit seg = segment_circuit(c);
            bool ok = seg.total_rotations() > 0;
            for (const QubitLine& line : seg.lines)
                ok = ok && line.segments.size() <= std::size_t(max_consistency_sites);
            if (ok) circuits.push_back(std::move(c));
        }
        VerifySuite suite{"hamiltonian-vs-direct", static_cast<long long>(circuits.size()), 0,
                          0.0};
        std::vector<double> devs(circuits.size(), 0.0);
        std::vector<char> ok(circuits.size(), 1);
        parallel_cases(static_cast<long long>(circuits.size()), threads, [&](long long t) {
            const SegmentedCircuit seg = segment_circuit(circuits[t]);
            const auto budget = epsilon_budget(seg, gen.eps_total);
            const ConsistencyResult res = consistency_check(seg, budget->L);
            devs[t] = res.max_deviation / budget->L;  // report in units of L
            ok[t] = res.pass ? 1 : 0;
        });
        for (std::size_t t = 0; t < circuits.size(); ++t) {
            suite.max_deviation = std::max(suite.max_deviation, devs[t]);
            if (!ok[t]) ++suite.failures;
        }
        report.suites.push_back(suite);
    }

    {  // canonical form preserves the circuit unitary
        const long long cases = std::min<long long>(trials, 100);
        VerifySuite suite{"canonicalization-roundtrip", cases, 0, 0.0};
        std::vector<double> devs(cases, 0.0);
        parallel_cases(cases, threads, [&](long long t) {
            SplitMix64 rng(seed, 3000 + static_cast<std::uint64_t>(t));
            const Circuit circuit = random_mixed_circuit(rng);
            const Circuit resynth = resynthesize(segment_circuit(circuit));
            devs[t] = phase_aligned_distance(circuit_unitary(circuit), circuit_unitary(resynth));
        });
        for (double dev : devs) {
            suite.max_deviation = std::max(suite.max_deviation, dev);
            if (dev > tol::resynth_frobenius) ++suite.failures;
        }
        report.suites.push_back(suite);
    }

    {  // Euler reconstruction over all 12 axis triples
        const long long cases = std::min<long long>(trials, 1000);
        const auto triples = all_axis_triples();
        VerifySuite suite{"euler-roundtrip", cases * static_cast<long long>(triples.size()), 0,
                          0.0};
        std::vector<double> devs(cases, 0.0);
        parallel_cases(cases, threads, [&](long long t) {
            SplitMix64 rng(seed, 4000 + static_cast<std::uint64_t>(t));
            const Unitary2 u = random_unitary(rng);
            double worst = 0.0;
            for (const auto& axes : triples) {
                const EulerTriple triple = euler_decompose(u, axes);
                worst = std::max(worst, frobenius_distance(u, triple.reconstruct()));
            }
            devs[t] = worst;
        });
        for (double dev : devs) {
            suite.max_deviation = std::max(suite.max_deviation, dev);
            if (dev > tol::euler_roundtrip) ++suite.failures;
        }
        report.suites.push_back(suite);
    }

    for (const VerifySuite& suite : report.suites) report.pass = report.pass && suite.failures == 0;
    return report;
}

}  // namespace maopt
