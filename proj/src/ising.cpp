#include "maopt/ising.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maopt {

ChainSpec build_chain(const QubitLine& line, double L) {
    if (L <= 0.0) throw std::invalid_argument("build_chain: L must be positive");

    const std::size_t n = line.segments.size();
    ChainSpec chain;
    chain.qubit = line.qubit;
    chain.h.reserve(n);
    chain.J.reserve(n > 0 ? n - 1 : 0);
    chain.site_segment.reserve(n);

    for (std::size_t i = 0; i < n; ++i) {
        const Segment& seg = line.segments[i];
        int rb_sum = 0;
        if (i > 0) rb_sum += line.boundaries[i - 1].r;
        if (i < line.boundaries.size()) rb_sum += line.boundaries[i].r;
        chain.h.push_back(L * (1.5 * seg.r + 0.75 * rb_sum - 2.0 - 0.75 * seg.e));
        chain.site_segment.push_back(seg.position);
    }
    for (const Boundary& bd : line.boundaries) chain.J.push_back(L * 0.75 * (1 - bd.r));
    return chain;
}

double energy(const ChainSpec& chain, const SpinConfig& sigma) {
    const std::size_t n = chain.size();
    if (sigma.sigma.size() != n || (n > 0 && chain.J.size() != n - 1))
        throw std::invalid_argument("energy: length mismatch");

    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += chain.h[i] * sigma.sigma[i];
        if (i + 1 < n) acc += chain.J[i] * sigma.sigma[i] * sigma.sigma[i + 1];
    }
    return -acc;
}

SolveResult solve_dp(const ChainSpec& chain) {
    const std::size_t n = chain.size();
    if (n == 0) return {SpinConfig{}, 0.0, SolveMethod::DP};

    double e_plus = -chain.h[0];
    double e_minus = chain.h[0];
    std::vector<std::int8_t> trace_plus(n), trace_minus(n);

    for (std::size_t i = 1; i < n; ++i) {
        const double j = chain.J[i - 1];
        double next_plus, next_minus;
        if (e_plus - j < e_minus + j) {
            next_plus = e_plus - j - chain.h[i];
            trace_plus[i] = +1;
        } else {
            next_plus = e_minus + j - chain.h[i];
            trace_plus[i] = -1;
        }
        if (e_plus + j < e_minus - j) {
            next_minus = e_plus + j + chain.h[i];
            trace_minus[i] = +1;
        } else {
            next_minus = e_minus - j + chain.h[i];
            trace_minus[i] = -1;
        }
        e_plus = next_plus;
        e_minus = next_minus;
    }

    SpinConfig sigma;
    sigma.sigma.resize(n);
    sigma.sigma[n - 1] = e_plus < e_minus ? +1 : -1;  // tie resolves to -1
    for (std::size_t i = n - 1; i > 0; --i)
        sigma.sigma[i - 1] = sigma.sigma[i] > 0 ? trace_plus[i] : trace_minus[i];

    const double e = energy(chain, sigma);
    return {std::move(sigma), e, SolveMethod::DP};
}

SolveResult brute_force_solve(const ChainSpec& chain) {
    const std::size_t n = chain.size();
    if (n > std::size_t(max_brute_force_sites))
        throw std::invalid_argument("brute_force_solve: capped at 24 sites");
    if (n == 0) return {SpinConfig{}, 0.0, SolveMethod::BruteForce};

    SpinConfig cfg;
    cfg.sigma.resize(n);
    SpinConfig best;
    double best_energy = 0.0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            cfg.sigma[i] = (mask >> i) & 1 ? std::int8_t{+1} : std::int8_t{-1};
        const double e = energy(chain, cfg);
        if (mask == 0 || e < best_energy) {
            best_energy = e;
            best = cfg;
        }
    }
    return {std::move(best), best_energy, SolveMethod::BruteForce};
}

std::vector<SolveResult> solve_chains(std::span<const ChainSpec> chains) {
    std::vector<SolveResult> results(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) results[i] = solve_dp(chains[i]);
    return results;
}

std::vector<SolveResult> solve_chains_omp(std::span<const ChainSpec> chains, int threads) {
    std::vector<SolveResult> results(chains.size());
    const auto n = static_cast<std::ptrdiff_t>(chains.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) results[i] = solve_dp(chains[i]);
    return results;
}

}  // namespace maopt
