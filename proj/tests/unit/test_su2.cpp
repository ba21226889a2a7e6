#include <doctest.h>

#include "helpers.hpp"
#include "maopt/dense.hpp"
#include "maopt/qasm.hpp"
#include "maopt/su2.hpp"

using namespace maopt;

namespace {

const std::array<Axis, 3> all_axes{Axis::X, Axis::Y, Axis::Z};

std::vector<std::array<Axis, 3>> valid_triples() {
    std::vector<std::array<Axis, 3>> out;
    for (Axis a : all_axes)
        for (Axis b : all_axes)
            for (Axis c : all_axes)
                if (a != b && b != c) out.push_back({a, b, c});
    return out;
}

}  // namespace

TEST_CASE("rotation_matrix closed forms") {
    const Unitary2 id{};
    CHECK(frobenius_distance(rotation_matrix(Axis::Z, 0.0), id) < 1e-15);

    const Unitary2 full_turn = rotation_matrix(Axis::X, two_pi);
    const Unitary2 minus_id = cplx{-1.0, 0.0} * id;
    CHECK(frobenius_distance(full_turn, minus_id) < 1e-15);

    const Unitary2 z_quarter = rotation_matrix(Axis::Z, pi / 2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(z_quarter.a - cplx{inv_sqrt2, -inv_sqrt2}) < 1e-15);
    CHECK(std::abs(z_quarter.d - cplx{inv_sqrt2, inv_sqrt2}) < 1e-15);
    CHECK(std::abs(z_quarter.b) == 0.0);
    CHECK(std::abs(z_quarter.c) == 0.0);
}

TEST_CASE("same-axis rotations compose additively") {
    SplitMix64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const Axis axis = static_cast<Axis>(rng.next_below(3));
        const double a = rng.next_double() * 4 * pi - two_pi;
        const double b = rng.next_double() * 4 * pi - two_pi;
        const Unitary2 prod = rotation_matrix(axis, a) * rotation_matrix(axis, b);
        CHECK(frobenius_distance(prod, rotation_matrix(axis, a + b)) < 1e-12);
    }
}

TEST_CASE("euler_decompose fixed points") {
    const auto id_triple = euler_decompose(Unitary2{}, {Axis::Z, Axis::X, Axis::Z});
    CHECK(id_triple.angles[0] == 0.0);
    CHECK(id_triple.angles[1] == 0.0);
    CHECK(id_triple.angles[2] == 0.0);
    CHECK(id_triple.phase == 0.0);

    const auto rz = euler_decompose(rotation_matrix(Axis::Z, 0.8), {Axis::Z, Axis::X, Axis::Z});
    CHECK(test::approx(rz.angles[0], 0.8, 1e-14));
    CHECK(rz.angles[1] == 0.0);
    CHECK(rz.angles[2] == 0.0);

    CHECK_THROWS_AS(euler_decompose(Unitary2{}, {Axis::Z, Axis::Z, Axis::X}),
                    std::invalid_argument);
    CHECK_THROWS_AS(euler_decompose(Unitary2{}, {Axis::X, Axis::Y, Axis::Y}),
                    std::invalid_argument);
}

TEST_CASE("euler_decompose round trips over all 12 triples") {
    const auto triples = valid_triples();
    REQUIRE(triples.size() == 12);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        SplitMix64 rng(7, t);
        const Unitary2 u = random_unitary(rng);
        for (const auto& axes : triples) {
            const EulerTriple triple = euler_decompose(u, axes);
            worst = std::max(worst, frobenius_distance(u, triple.reconstruct()));
            if (axes[0] == axes[2]) {
                CHECK(triple.angles[1] >= 0.0);
                CHECK(triple.angles[1] <= pi);
            } else {
                CHECK(triple.angles[1] >= -pi / 2);
                CHECK(triple.angles[1] <= pi / 2);
            }
        }
    }
    CHECK(worst <= tol::euler_roundtrip);
}

TEST_CASE("euler_decompose near gimbal lock") {
    const auto triples = valid_triples();
    const double offsets[] = {0.0,   1e-15, 1e-13, 1e-11, 1e-9,  1e-7,
                              1e-5,  -1e-15, -1e-13, -1e-11, -1e-9, -1e-7};
    double worst = 0.0;
    for (int t = 0; t < 40; ++t) {
        SplitMix64 rng(23, t);
        const double outer1 = rng.next_double() * two_pi - pi;
        const double outer2 = rng.next_double() * two_pi - pi;
        for (const auto& axes : triples) {
            // lock angles: 0 and π for proper triples, ±π/2 for Tait-Bryan
            const bool proper = axes[0] == axes[2];
            const double locks[2] = {proper ? 0.0 : pi / 2, proper ? pi : -pi / 2};
            for (double lock : locks) {
                for (double off : offsets) {
                    const Unitary2 u = rotation_matrix(axes[0], outer1) *
                                       rotation_matrix(axes[1], lock + off) *
                                       rotation_matrix(axes[2], outer2);
                    const EulerTriple triple = euler_decompose(u, axes);
                    worst = std::max(worst, frobenius_distance(u, triple.reconstruct()));
                }
            }
        }
    }
    CHECK(worst <= tol::euler_roundtrip);
}

TEST_CASE("phase_distance") {
    SplitMix64 rng(13);
    const Unitary2 u = random_unitary(rng);
    CHECK(phase_distance(u, u) <= 1e-12);

    const Unitary2 shifted = cplx{std::cos(1.1), std::sin(1.1)} * u;
    CHECK(phase_distance(u, shifted) <= 1e-12);

    const Unitary2 x = fixed_gate_matrix(FixedGateKind::X);
    CHECK(test::approx(phase_distance(Unitary2{}, x), std::sqrt(2.0), 1e-15));
}

TEST_CASE("circuit_unitary basics") {
    Circuit empty;
    empty.num_qubits = 2;
    const DenseUnitary u = circuit_unitary(empty);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(u.at(r, c) == (r == c ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));

    Circuit twice;
    twice.num_qubits = 2;
    twice.gates.push_back(CnotGate{0, 1});
    twice.gates.push_back(CnotGate{0, 1});
    CHECK(phase_aligned_distance(circuit_unitary(twice), circuit_unitary(empty)) < 1e-15);

    Circuit wide;
    wide.num_qubits = 11;
    CHECK_THROWS_AS(circuit_unitary(wide), std::invalid_argument);
}

TEST_CASE("rotations commute through CNOT on their commuting side") {
    // 4x4 identities: Rz on the control, Rx on the target.
    for (const auto& [axis, on_control] :
         {std::pair{Axis::Z, true}, std::pair{Axis::X, false}}) {
        Circuit before, after;
        before.num_qubits = after.num_qubits = 2;
        const int q = on_control ? 0 : 1;
        before.gates.push_back(RotationGate{q, axis, 0.7});
        before.gates.push_back(CnotGate{0, 1});
        after.gates.push_back(CnotGate{0, 1});
        after.gates.push_back(RotationGate{q, axis, 0.7});
        CHECK(phase_aligned_distance(circuit_unitary(before), circuit_unitary(after)) <= 1e-12);
    }
}

TEST_CASE("commutation inside a random 3-qubit circuit") {
    SplitMix64 rng(17);
    for (int t = 0; t < 20; ++t) {
        Circuit base = test::random_mixed_circuit(rng, 3, 20);
        base.num_qubits = 3;
        base.gates.push_back(RotationGate{0, Axis::Z, 1.3});
        base.gates.push_back(CnotGate{0, 2});

        Circuit commuted = base;
        std::swap(commuted.gates[commuted.gates.size() - 2],
                  commuted.gates[commuted.gates.size() - 1]);
        CHECK(phase_aligned_distance(circuit_unitary(base), circuit_unitary(commuted)) <= 1e-12);
    }
}
