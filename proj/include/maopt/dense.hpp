#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "maopt/circuit.hpp"

namespace maopt {

/// Dense 2^n x 2^n matrix, row-major. Test oracle for circuit equivalence,
/// capped at 10 qubits.
struct DenseUnitary {
    std::size_t dim = 0;
    std::vector<cplx> m;  // dim*dim entries

    cplx& at(std::size_t r, std::size_t c) { return m[r * dim + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return m[r * dim + c]; }
};

inline constexpr int max_oracle_qubits = 10;

/// Ordered product of the circuit's gate matrices (strict left-to-right gate
/// application, qubit q mapped to bit q of the basis index). Throws on
/// circuits wider than max_oracle_qubits.
DenseUnitary circuit_unitary(const Circuit& circuit);

/// Frobenius distance minimized over a global phase:
/// sqrt(max(0, 2*dim - 2*|tr(a†b)|)). Inputs must be unitary.
double phase_aligned_distance(const DenseUnitary& a, const DenseUnitary& b);

}  // namespace maopt
