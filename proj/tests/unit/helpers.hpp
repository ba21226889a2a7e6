#pragma once

#include <cmath>
#include <vector>

#include "maopt/bench.hpp"
#include "maopt/circuit.hpp"
#include "maopt/prng.hpp"

namespace maopt::test {

inline bool approx(double a, double b, double eps = 1e-12) { return std::abs(a - b) <= eps; }

// Rotation/CNOT/fixed-gate circuit for canonicalization tests.
inline Circuit random_mixed_circuit(SplitMix64& rng, int max_qubits = 4, int max_gates = 40) {
    Circuit circuit;
    circuit.num_qubits = static_cast<int>(1 + rng.next_below(max_qubits));
    const auto gates = rng.next_below(max_gates + 1);
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

}  // namespace maopt::test
