#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "maopt/su2.hpp"

namespace maopt {

struct RotationGate {
    int qubit;
    Axis axis;
    double angle;
    friend bool operator==(const RotationGate&, const RotationGate&) = default;
};

enum class FixedGateKind : std::uint8_t { X, Y, Z, H, S, Sdg, T, Tdg };

const char* fixed_gate_name(FixedGateKind kind);

struct FixedGate {
    int qubit;
    FixedGateKind kind;
    friend bool operator==(const FixedGate&, const FixedGate&) = default;
};

struct CnotGate {
    int control;
    int target;
    friend bool operator==(const CnotGate&, const CnotGate&) = default;
};

using Gate = std::variant<RotationGate, FixedGate, CnotGate>;

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Exact SU(2) matrix of a fixed single-qubit gate.
Unitary2 fixed_gate_matrix(FixedGateKind kind);

/// Matrix of any single-qubit gate; throws on CNOT.
Unitary2 single_qubit_matrix(const Gate& gate);

inline bool is_cnot(const Gate& g) { return std::holds_alternative<CnotGate>(g); }

/// True if the gate acts on the given qubit (either role for a CNOT).
bool touches_qubit(const Gate& g, int qubit);

}  // namespace maopt
