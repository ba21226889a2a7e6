#include "maopt/circuit.hpp"

#include <stdexcept>

namespace maopt {

const char* fixed_gate_name(FixedGateKind kind) {
    switch (kind) {
        case FixedGateKind::X: return "x";
        case FixedGateKind::Y: return "y";
        case FixedGateKind::Z: return "z";
        case FixedGateKind::H: return "h";
        case FixedGateKind::S: return "s";
        case FixedGateKind::Sdg: return "sdg";
        case FixedGateKind::T: return "t";
        case FixedGateKind::Tdg: return "tdg";
    }
    return "?";
}

Unitary2 fixed_gate_matrix(FixedGateKind kind) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const cplx i{0.0, 1.0};
    switch (kind) {
        case FixedGateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case FixedGateKind::Y: return {0.0, -i, i, 0.0};
        case FixedGateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case FixedGateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case FixedGateKind::S: return {1.0, 0.0, 0.0, i};
        case FixedGateKind::Sdg: return {1.0, 0.0, 0.0, -i};
        case FixedGateKind::T: return {1.0, 0.0, 0.0, {inv_sqrt2, inv_sqrt2}};
        case FixedGateKind::Tdg: return {1.0, 0.0, 0.0, {inv_sqrt2, -inv_sqrt2}};
    }
    throw std::invalid_argument("fixed_gate_matrix: bad kind");
}

Unitary2 single_qubit_matrix(const Gate& gate) {
    if (const auto* rot = std::get_if<RotationGate>(&gate))
        return rotation_matrix(rot->axis, rot->angle);
    if (const auto* fixed = std::get_if<FixedGate>(&gate)) return fixed_gate_matrix(fixed->kind);
    throw std::invalid_argument("single_qubit_matrix: CNOT has no 2x2 matrix");
}

bool touches_qubit(const Gate& g, int qubit) {
    if (const auto* rot = std::get_if<RotationGate>(&g)) return rot->qubit == qubit;
    if (const auto* fixed = std::get_if<FixedGate>(&g)) return fixed->qubit == qubit;
    const auto& cx = std::get<CnotGate>(g);
    return cx.control == qubit || cx.target == qubit;
}

}  // namespace maopt
