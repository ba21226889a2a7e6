#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "maopt/circuit.hpp"

namespace maopt {

enum class BoundaryRole : std::uint8_t { ControlSide, TargetSide };

/// Rz commutes with the control qubit of a CNOT, Rx with the target qubit.
inline Axis commuting_axis(BoundaryRole role) {
    return role == BoundaryRole::ControlSide ? Axis::Z : Axis::X;
}

/// One CNOT incidence on a qubit line. After merge_boundaries it carries the
/// single rotation (about the commuting axis) merged from both neighbouring
/// segments' exported slots.
struct Boundary {
    int qubit = 0;
    std::size_t gate_position = 0;  // index of the CNOT in Circuit.gates
    BoundaryRole role = BoundaryRole::ControlSide;
    double merged_angle = 0.0;
    int r = 0;  // 0 or 1
};

/// Canonical slot indices, in circuit-time order: slot 0 sits next to the
/// earlier (left) boundary, slot 2 next to the later (right) one. As a matrix
/// the segment block equals R[2] * R[1] * R[0].
inline constexpr int slot_left = 0;
inline constexpr int slot_mid = 1;
inline constexpr int slot_right = 2;

struct ConfinedRotation {
    Axis axis;
    double angle;
};

struct Segment {
    int qubit = 0;
    int position = 0;  // index along the qubit line
    Unitary2 block;    // product of all folded single-qubit gates

    // Canonical decomposition, filled by canonicalize_segment.
    std::array<Axis, 3> slot_axes{Axis::Z, Axis::X, Axis::Z};
    std::array<double, 3> slot_angles{0.0, 0.0, 0.0};
    double phase = 0.0;
    bool export_left = false;   // slot 0 merges into the left boundary
    bool export_right = false;  // slot 2 merges into the right boundary

    std::vector<ConfinedRotation> confined;  // non-exported slots, time order
    int r = 0;  // nonzero confined rotations
    int e = 0;  // missing boundaries: 0 interior, 1 circuit edge, 2 isolated line
};

/// Alternating S B S B ... S structure of one qubit line.
struct QubitLine {
    int qubit = 0;
    std::vector<Segment> segments;
    std::vector<Boundary> boundaries;  // segments.size() - 1

    bool has_rotations() const;  // Σ r_i + Σ r_b > 0
    int total_rotations() const;
};

struct SegmentedCircuit {
    Circuit source;
    std::vector<QubitLine> lines;  // qubits with at least one gate, ascending

    /// R = Σ r_i + Σ r_b over all lines.
    int total_rotations() const;
};

/// Re-decompose one segment block into boundary-aligned rotations.
/// left_axis/right_axis are the commuting axes of the adjacent boundaries
/// (nullopt at circuit edges). Slots aligned with a present boundary are
/// marked exported; the rest become confined rotations. The middle axis is
/// X/Z when the outer axes are equal (the one not used), Y when they differ;
/// absent outer slots default to Z.
void canonicalize_segment(Segment& segment, std::optional<Axis> left_axis,
                          std::optional<Axis> right_axis);

/// Sum the two exported slots meeting at each boundary into merged_angle and
/// set r from the zero tolerance.
void merge_boundaries(SegmentedCircuit& segmented);

/// Cut each qubit line at its CNOT incidences, fold single-qubit gates into
/// segment blocks, canonicalize every segment and merge boundary rotations.
/// Serial reference implementation.
SegmentedCircuit segment_circuit(const Circuit& circuit);

/// Same result as segment_circuit, canonicalizing qubit lines in parallel.
/// threads == 0 uses the OpenMP default. Output is bit-identical to the
/// serial version for any schedule.
SegmentedCircuit segment_circuit_omp(const Circuit& circuit, int threads = 0);

/// Emit the canonical circuit: confined rotations, boundary rotations (placed
/// immediately before their CNOT on the commuting side) and CNOTs, in circuit
/// order. The result equals the source circuit up to global phase.
Circuit resynthesize(const SegmentedCircuit& segmented);

/// Per-gate labels for an annotated resynthesized circuit. `ma_segments`
/// holds, per line (same order as segmented.lines), which segment positions
/// got Magnitude Approximation; rotations from those segments' middle slots
/// are labeled "MA", every other rotation "DIAG".
Circuit resynthesize_annotated(const SegmentedCircuit& segmented,
                               const std::vector<std::vector<bool>>& ma_segments,
                               std::vector<std::string>& labels_out);

}  // namespace maopt
