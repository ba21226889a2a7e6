#include "maopt/segment.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maopt {

bool QubitLine::has_rotations() const { return total_rotations() > 0; }

int QubitLine::total_rotations() const {
    int r = 0;
    for (const Segment& s : segments) r += s.r;
    for (const Boundary& b : boundaries) r += b.r;
    return r;
}

int SegmentedCircuit::total_rotations() const {
    int r = 0;
    for (const QubitLine& line : lines) r += line.total_rotations();
    return r;
}

namespace {

// Middle axis for a pair of outer axes: the unused one of {X, Z} when they
// are equal, Y when they differ. Missing outer slots default to Z, which
// reproduces the (Z, X, Z) triple on boundary-free segments and always keeps
// adjacent axes distinct.
Axis middle_axis(Axis left, Axis right) {
    if (left == right) return left == Axis::Z ? Axis::X : Axis::Z;
    return Axis::Y;
}

}  // namespace

void canonicalize_segment(Segment& segment, std::optional<Axis> left_axis,
                          std::optional<Axis> right_axis) {
    const Axis left = left_axis.value_or(Axis::Z);
    const Axis right = right_axis.value_or(Axis::Z);
    const Axis mid = middle_axis(left, right);

    // The block is the matrix product of the segment's gates, so the
    // time-first (left) slot is the rightmost factor of the decomposition.
    const EulerTriple triple = euler_decompose(segment.block, {right, mid, left});
    double ang_right = triple.angles[0];
    const double ang_mid = triple.angles[1];
    double ang_left = triple.angles[2];

    // Axis-aligned degenerate blocks collapse onto the first decomposition
    // slot, which is the time-last one. Move that mass to the time-first slot
    // unless only the right boundary could absorb it: content must stay
    // exportable, and ties prefer the earlier boundary.
    if (left == right && is_zero_angle(ang_mid)) {
        const bool only_right_exports = !left_axis.has_value() && right_axis.has_value();
        if (!only_right_exports) {
            ang_left += ang_right;
            ang_right = 0.0;
        }
    }

    segment.slot_axes = {left, mid, right};
    segment.slot_angles = {ang_left, ang_mid, ang_right};
    segment.phase = triple.phase;
    segment.export_left = left_axis.has_value();
    segment.export_right = right_axis.has_value();

    segment.confined.clear();
    if (!segment.export_left) segment.confined.push_back({left, ang_left});
    segment.confined.push_back({mid, ang_mid});
    if (!segment.export_right) segment.confined.push_back({right, ang_right});

    segment.r = 0;
    for (const ConfinedRotation& rot : segment.confined)
        if (!is_zero_angle(rot.angle)) ++segment.r;
    segment.e = (left_axis ? 0 : 1) + (right_axis ? 0 : 1);
}

void merge_boundaries(SegmentedCircuit& segmented) {
    for (QubitLine& line : segmented.lines) {
        for (std::size_t j = 0; j < line.boundaries.size(); ++j) {
            Boundary& bd = line.boundaries[j];
            const Segment& lhs = line.segments[j];
            const Segment& rhs = line.segments[j + 1];
            double merged = 0.0;
            if (lhs.export_right) merged += lhs.slot_angles[slot_right];
            if (rhs.export_left) merged += rhs.slot_angles[slot_left];
            bd.merged_angle = merged;
            bd.r = is_zero_angle(merged) ? 0 : 1;
        }
    }
}

namespace {

SegmentedCircuit accumulate_lines(const Circuit& circuit) {
    SegmentedCircuit segmented;
    segmented.source = circuit;

    std::vector<int> line_of(circuit.num_qubits, -1);
    auto line_for = [&](int q) -> QubitLine& {
        if (line_of[q] < 0) {
            line_of[q] = static_cast<int>(segmented.lines.size());
            QubitLine line;
            line.qubit = q;
            Segment first;
            first.qubit = q;
            line.segments.push_back(std::move(first));
            segmented.lines.push_back(std::move(line));
        }
        return segmented.lines[line_of[q]];
    };

    for (std::size_t pos = 0; pos < circuit.gates.size(); ++pos) {
        const Gate& g = circuit.gates[pos];
        if (const auto* cx = std::get_if<CnotGate>(&g)) {
            const std::pair<int, BoundaryRole> ends[2] = {
                {cx->control, BoundaryRole::ControlSide}, {cx->target, BoundaryRole::TargetSide}};
            for (const auto& [q, role] : ends) {
                QubitLine& line = line_for(q);
                line.boundaries.push_back(Boundary{q, pos, role, 0.0, 0});
                Segment next;
                next.qubit = q;
                next.position = static_cast<int>(line.segments.size());
                line.segments.push_back(std::move(next));
            }
        } else {
            const int q = std::holds_alternative<RotationGate>(g) ? std::get<RotationGate>(g).qubit
                                                                  : std::get<FixedGate>(g).qubit;
            QubitLine& line = line_for(q);
            line.segments.back().block = single_qubit_matrix(g) * line.segments.back().block;
        }
    }

    // Lines are keyed by first appearance; order them by qubit index.
    std::vector<QubitLine> ordered;
    ordered.reserve(segmented.lines.size());
    for (int q = 0; q < circuit.num_qubits; ++q)
        if (line_of[q] >= 0) ordered.push_back(std::move(segmented.lines[line_of[q]]));
    segmented.lines = std::move(ordered);
    return segmented;
}

void canonicalize_line(QubitLine& line) {
    for (std::size_t j = 0; j < line.segments.size(); ++j) {
        std::optional<Axis> left, right;
        if (j > 0) left = commuting_axis(line.boundaries[j - 1].role);
        if (j < line.boundaries.size()) right = commuting_axis(line.boundaries[j].role);
        canonicalize_segment(line.segments[j], left, right);
    }
}

}  // namespace

SegmentedCircuit segment_circuit(const Circuit& circuit) {
    SegmentedCircuit segmented = accumulate_lines(circuit);
    for (QubitLine& line : segmented.lines) canonicalize_line(line);
    merge_boundaries(segmented);
    return segmented;
}

SegmentedCircuit segment_circuit_omp(const Circuit& circuit, int threads) {
    SegmentedCircuit segmented = accumulate_lines(circuit);
    const auto n = static_cast<std::ptrdiff_t>(segmented.lines.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) canonicalize_line(segmented.lines[i]);
    merge_boundaries(segmented);
    return segmented;
}

namespace {

Circuit resynthesize_impl(const SegmentedCircuit& segmented,
                          const std::vector<std::vector<bool>>* ma_segments,
                          std::vector<std::string>* labels) {
    Circuit out;
    out.num_qubits = segmented.source.num_qubits;

    std::vector<int> line_of(segmented.source.num_qubits, -1);
    for (std::size_t i = 0; i < segmented.lines.size(); ++i)
        line_of[segmented.lines[i].qubit] = static_cast<int>(i);
    std::vector<std::size_t> cursor(segmented.lines.size(), 0);

    auto push = [&](Gate gate, const char* label) {
        out.gates.push_back(std::move(gate));
        if (labels) labels->emplace_back(label);
    };

    auto emit_segment = [&](int line_idx, const Segment& seg) {
        const bool ma = ma_segments && (*ma_segments)[line_idx].size() > std::size_t(seg.position) &&
                        (*ma_segments)[line_idx][seg.position];
        std::size_t slot = seg.export_left ? 1 : 0;  // confined slots start at this time slot
        for (const ConfinedRotation& rot : seg.confined) {
            if (!is_zero_angle(rot.angle)) {
                const bool is_mid = slot == 1;
                push(RotationGate{seg.qubit, rot.axis, rot.angle},
                     labels ? (ma && is_mid ? "MA" : "DIAG") : "");
            }
            ++slot;
        }
    };

    auto flush_to_boundary = [&](int q) {
        const int li = line_of[q];
        const QubitLine& line = segmented.lines[li];
        const std::size_t j = cursor[li];
        emit_segment(li, line.segments[j]);
        const Boundary& bd = line.boundaries[j];
        if (bd.r != 0)
            push(RotationGate{q, commuting_axis(bd.role), bd.merged_angle}, labels ? "DIAG" : "");
        ++cursor[li];
    };

    for (std::size_t pos = 0; pos < segmented.source.gates.size(); ++pos) {
        const Gate& g = segmented.source.gates[pos];
        if (const auto* cx = std::get_if<CnotGate>(&g)) {
            flush_to_boundary(cx->control);
            flush_to_boundary(cx->target);
            push(CnotGate{cx->control, cx->target}, "");
        }
    }
    for (std::size_t li = 0; li < segmented.lines.size(); ++li)
        emit_segment(static_cast<int>(li), segmented.lines[li].segments[cursor[li]]);

    return out;
}

}  // namespace

Circuit resynthesize(const SegmentedCircuit& segmented) {
    return resynthesize_impl(segmented, nullptr, nullptr);
}

Circuit resynthesize_annotated(const SegmentedCircuit& segmented,
                               const std::vector<std::vector<bool>>& ma_segments,
                               std::vector<std::string>& labels_out) {
    labels_out.clear();
    return resynthesize_impl(segmented, &ma_segments, &labels_out);
}

}  // namespace maopt
