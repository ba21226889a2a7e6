#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace maopt {

using cplx = std::complex<double>;

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

constexpr char axis_name(Axis a) { return a == Axis::X ? 'X' : (a == Axis::Y ? 'Y' : 'Z'); }

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Tolerances shared across the pipeline.
namespace tol {
inline constexpr double unitary = 1e-12;        // U†U = I, |det| = 1
inline constexpr double angle_zero = 1e-12;     // angles below this (mod 2π) count as no rotation
inline constexpr double euler_roundtrip = 1e-10;
inline constexpr double resynth_frobenius = 1e-9;
inline constexpr double energy_match = 1e-9;    // DP vs brute force, Hamiltonian vs direct cost
}  // namespace tol

/// True if the rotation angle is a no-op modulo full turns (2π itself is a
/// pure global phase in SU(2) and counts as zero).
bool is_zero_angle(double angle);

/// 2x2 complex matrix, row-major [[a, b], [c, d]]. Not constrained to be
/// unitary by the type; is_unitary() checks when it matters.
struct Unitary2 {
    cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    friend Unitary2 operator*(const Unitary2& l, const Unitary2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend Unitary2 operator*(cplx s, const Unitary2& u) { return {s * u.a, s * u.b, s * u.c, s * u.d}; }
};

Unitary2 adjoint(const Unitary2& u);
cplx det(const Unitary2& u);
cplx trace(const Unitary2& u);
double frobenius_distance(const Unitary2& u, const Unitary2& v);
bool is_unitary(const Unitary2& u, double eps = tol::unitary);

/// R_axis(angle) = exp(-i * angle/2 * P_axis).
Unitary2 rotation_matrix(Axis axis, double angle);

/// Angles of a three-rotation product u = R_axes[0](theta[0]) * R_axes[1](theta[1])
/// * R_axes[2](theta[2]) * e^{i phase} (matrix product; the rightmost factor acts
/// first on states).
struct EulerTriple {
    std::array<Axis, 3> axes;
    std::array<double, 3> angles;
    double phase = 0.0;

    Unitary2 reconstruct() const;
};

/// Decompose a unitary over the given axis triple. Adjacent axes must differ;
/// both proper-Euler (axes[0] == axes[2]) and Tait-Bryan triples are handled.
/// theta[1] lies in [0, π] for proper triples and [-π/2, π/2] for Tait-Bryan
/// ones. At gimbal lock the whole free angle goes to theta[0] and theta[2] is 0.
/// Throws std::invalid_argument on equal adjacent axes.
EulerTriple euler_decompose(const Unitary2& u, std::array<Axis, 3> axes);

/// sqrt(max(0, 2 - |tr(u†v)|)): zero iff u and v agree up to global phase.
double phase_distance(const Unitary2& u, const Unitary2& v);

/// Unit quaternion (w, x, y, z) with u = e^{iφ} (w I - i x σx - i y σy - i z σz),
/// sign-canonicalized: w > 0, or the first nonzero component positive when
/// w == 0. The rotation angle about axis P is 2 atan2(v_P, w).
std::array<double, 4> su2_quaternion(const Unitary2& u);

}  // namespace maopt
