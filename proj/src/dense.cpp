#include "maopt/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace maopt {

namespace {

void apply_single_qubit(DenseUnitary& u, int qubit, const Unitary2& g) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t col = 0; col < u.dim; ++col) {
        for (std::size_t r0 = 0; r0 < u.dim; ++r0) {
            if (r0 & bit) continue;
            const std::size_t r1 = r0 | bit;
            const cplx v0 = u.at(r0, col), v1 = u.at(r1, col);
            u.at(r0, col) = g.a * v0 + g.b * v1;
            u.at(r1, col) = g.c * v0 + g.d * v1;
        }
    }
}

void apply_cnot(DenseUnitary& u, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t col = 0; col < u.dim; ++col) {
        for (std::size_t r = 0; r < u.dim; ++r) {
            if ((r & cbit) && !(r & tbit)) std::swap(u.at(r, col), u.at(r | tbit, col));
        }
    }
}

}  // namespace

DenseUnitary circuit_unitary(const Circuit& circuit) {
    if (circuit.num_qubits > max_oracle_qubits)
        throw std::invalid_argument("circuit_unitary: oracle capped at 10 qubits");
    const std::size_t dim = std::size_t{1} << circuit.num_qubits;
    DenseUnitary u{dim, std::vector<cplx>(dim * dim)};
    for (std::size_t i = 0; i < dim; ++i) u.at(i, i) = 1.0;

    for (const Gate& g : circuit.gates) {
        if (const auto* cx = std::get_if<CnotGate>(&g)) {
            apply_cnot(u, cx->control, cx->target);
        } else {
            const int q = std::holds_alternative<RotationGate>(g)
                              ? std::get<RotationGate>(g).qubit
                              : std::get<FixedGate>(g).qubit;
            apply_single_qubit(u, q, single_qubit_matrix(g));
        }
    }
    return u;
}

double phase_aligned_distance(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dim != b.dim) throw std::invalid_argument("phase_aligned_distance: dimension mismatch");
    // W = a†b is unitary when a and b are, and the phase-minimized squared
    // distance 2d - 2|tr W| equals 2 ||W - (trW/d) I||_F^2 / (1 + |trW|/d).
    // The latter form has no catastrophic cancellation near W = phase * I,
    // where the naive difference bottoms out at sqrt(d * eps).
    DenseUnitary w{a.dim, std::vector<cplx>(a.dim * a.dim)};
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < a.dim; ++k) acc += std::conj(a.at(k, r)) * b.at(k, c);
            w.at(r, c) = acc;
        }
    cplx tr{0.0, 0.0};
    for (std::size_t r = 0; r < a.dim; ++r) tr += w.at(r, r);
    const cplx mean = tr / static_cast<double>(a.dim);
    double off = 0.0;
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c)
            off += std::norm(w.at(r, c) - (r == c ? mean : cplx{0.0, 0.0}));
    return std::sqrt(std::max(0.0, 2.0 * off / (1.0 + std::abs(mean))));
}

}  // namespace maopt
