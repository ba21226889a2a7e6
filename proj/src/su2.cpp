#include "maopt/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace maopt {

namespace {

// Threshold below which sin(theta2) (or cos for Tait-Bryan triples) is
// treated as exactly degenerate; the forced-lock reconstruction error is of
// the same order, well under tol::euler_roundtrip.
constexpr double lock_eps = 1e-12;

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mat3_mul(const Mat3& l, const Mat3& r) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j] + l[i][2] * r[2][j];
    return out;
}

// Right-handed rotation about a coordinate axis, the adjoint image of
// rotation_matrix(axis, t).
Mat3 so3_axis_rotation(int axis, double t) {
    const double c = std::cos(t), s = std::sin(t);
    Mat3 m{};
    const int u = (axis + 1) % 3, v = (axis + 2) % 3;
    m[axis][axis] = 1.0;
    m[u][u] = c;
    m[v][v] = c;
    m[v][u] = s;
    m[u][v] = -s;
    return m;
}

// Angle of a matrix known to be a rotation about the given axis.
double angle_about(const Mat3& m, int axis) {
    const int u = (axis + 1) % 3, v = (axis + 2) % 3;
    return std::atan2(m[v][u], m[u][u]);
}

// u normalized to SU(2) and mapped through the double cover: column j is the
// image of basis axis j under v -> u (v·σ) u†.
Mat3 adjoint_so3(const Unitary2& u) {
    const auto [w, x, y, z] = su2_quaternion(u);
    Mat3 m;
    m[0] = {1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)};
    m[1] = {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)};
    m[2] = {2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)};
    return m;
}

}  // namespace

bool is_zero_angle(double angle) {
    double m = std::fmod(angle, two_pi);
    if (m < 0.0) m += two_pi;
    return m < tol::angle_zero || m > two_pi - tol::angle_zero;
}

Unitary2 adjoint(const Unitary2& u) {
    return {std::conj(u.a), std::conj(u.c), std::conj(u.b), std::conj(u.d)};
}

cplx det(const Unitary2& u) { return u.a * u.d - u.b * u.c; }

cplx trace(const Unitary2& u) { return u.a + u.d; }

double frobenius_distance(const Unitary2& u, const Unitary2& v) {
    return std::sqrt(std::norm(u.a - v.a) + std::norm(u.b - v.b) + std::norm(u.c - v.c) +
                     std::norm(u.d - v.d));
}

bool is_unitary(const Unitary2& u, double eps) {
    const Unitary2 g = adjoint(u) * u;
    const Unitary2 id{};
    return frobenius_distance(g, id) <= eps && std::abs(std::abs(det(u)) - 1.0) <= eps;
}

std::array<double, 4> su2_quaternion(const Unitary2& u) {
    const cplx s = std::sqrt(det(u));  // |det| ~ 1 for unitary input
    const cplx a = u.a / s, b = u.b / s, c = u.c / s, d = u.d / s;

    // u/s = w·I - i(x·σx + y·σy + z·σz)
    double w = (a.real() + d.real()) / 2.0;
    double z = (d.imag() - a.imag()) / 2.0;
    double x = -(b.imag() + c.imag()) / 2.0;
    double y = (c.real() - b.real()) / 2.0;
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n;
    x /= n;
    y /= n;
    z /= n;

    double lead = w;
    if (lead == 0.0) lead = x != 0.0 ? x : (y != 0.0 ? y : z);
    if (lead < 0.0) {
        w = -w;
        x = -x;
        y = -y;
        z = -z;
    }
    return {w, x, y, z};
}

Unitary2 rotation_matrix(Axis axis, double angle) {
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    switch (axis) {
        case Axis::X:
            return {{c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0}};
        case Axis::Y:
            return {{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
        case Axis::Z:
        default:
            return {{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}};
    }
}

Unitary2 EulerTriple::reconstruct() const {
    const Unitary2 prod = rotation_matrix(axes[0], angles[0]) *
                          rotation_matrix(axes[1], angles[1]) *
                          rotation_matrix(axes[2], angles[2]);
    return cplx{std::cos(phase), std::sin(phase)} * prod;
}

namespace {

double wrap_pi(double angle) {
    double m = std::fmod(angle + pi, two_pi);
    if (m < 0.0) m += two_pi;
    return m - pi == -pi ? pi : m - pi;
}

}  // namespace

EulerTriple euler_decompose(const Unitary2& u, std::array<Axis, 3> axes) {
    if (axes[0] == axes[1] || axes[1] == axes[2])
        throw std::invalid_argument("euler_decompose: adjacent axes must differ");

    const int a = static_cast<int>(axes[0]);
    const int b = static_cast<int>(axes[1]);
    const int c = static_cast<int>(axes[2]);
    const double eps_par = (b == (a + 1) % 3) ? 1.0 : -1.0;  // parity of (axes[0], axes[1])

    double t1 = 0.0, t2 = 0.0, t3 = 0.0;

    if (a == c) {  // proper Euler
        const Mat3 m = adjoint_so3(u);
        const int d = 3 - a - b;
        const double sy = std::hypot(m[a][b], m[a][d]);
        if (sy > lock_eps) {
            t2 = std::atan2(sy, m[a][a]);
            t1 = std::atan2(m[b][a], -eps_par * m[d][a]);
            t3 = std::atan2(m[a][b], eps_par * m[a][d]);
        } else {
            t2 = m[a][a] > 0.0 ? 0.0 : pi;
            t3 = 0.0;
            const Mat3 peeled = mat3_mul(m, so3_axis_rotation(b, -t2));
            t1 = angle_about(peeled, a);
        }
    } else {
        // Tait-Bryan, reduced to the proper triple (A, B, A): appending
        // R_b(-σπ/2) turns the trailing R_c factor into one about ±A. The
        // proper extraction stays relatively accurate arbitrarily close to
        // the TB lock, where direct entry reads cancel catastrophically.
        const Mat3 m = adjoint_so3(u);
        const double sigma = eps_par * m[a][c] >= 0.0 ? 1.0 : -1.0;
        const Unitary2 reduced = u * rotation_matrix(axes[1], -sigma * pi / 2.0);
        const EulerTriple proper =
            euler_decompose(reduced, {axes[0], axes[1], axes[0]});

        // e_b x e_a = ±e_c fixes the sign the trailing angle picks up.
        const double eps_bac = (a == (b + 1) % 3) ? 1.0 : -1.0;
        t1 = proper.angles[0];
        t2 = proper.angles[1] + sigma * pi / 2.0;
        t3 = -sigma * eps_bac * proper.angles[2];
        if (t2 > pi / 2.0) {  // (t1, t2, t3) ~ (t1+π, π-t2, t3+π)
            t1 = wrap_pi(t1 + pi);
            t2 = pi - t2;
            t3 = wrap_pi(t3 + pi);
        } else if (t2 < -pi / 2.0) {
            t1 = wrap_pi(t1 + pi);
            t2 = -pi - t2;
            t3 = wrap_pi(t3 + pi);
        }
    }

    EulerTriple triple{axes, {t1, t2, t3}, 0.0};
    const Unitary2 recon = triple.reconstruct();

    // Largest entry of the reconstruction fixes the global phase.
    const cplx ru[4] = {recon.a, recon.b, recon.c, recon.d};
    const cplx uu[4] = {u.a, u.b, u.c, u.d};
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(ru[i]) > std::abs(ru[k])) k = i;
    triple.phase = std::arg(uu[k] / ru[k]);
    return triple;
}

double phase_distance(const Unitary2& u, const Unitary2& v) {
    // Equals sqrt(max(0, 2 - |tr(u†v)|)), evaluated through the traceless
    // part of w = u†v: 2 - |tr w| = ||w - (trw/2) I||_F^2 / (1 + |trw|/2),
    // which stays accurate near w = phase * I.
    const Unitary2 w = adjoint(u) * v;
    const cplx mean = trace(w) / 2.0;
    const double off = std::norm(w.a - mean) + std::norm(w.b) + std::norm(w.c) +
                       std::norm(w.d - mean);
    return std::sqrt(std::max(0.0, off / (1.0 + std::abs(mean))));
}

}  // namespace maopt
