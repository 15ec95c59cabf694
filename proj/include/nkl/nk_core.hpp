#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "nkl/quat.hpp"

namespace nkl {

// Structure tensors of the homogeneous nearly Kähler S³×S³ in body-frame
// coordinates. A tangent vector Z = (p·a, q·b) at (p, q) is stored as the
// pair (a|b) of imaginary quaternions, which makes g, J, P, Q and G
// point-independent algebra; the base point enters only through
// embed/pullback.

struct NKPoint {
    Quat p, q;
};

struct NKTangent {
    ImQuat a, b;
};

inline constexpr double kUnitPointTol = 1e-12;

inline bool is_unit_point(const NKPoint& at, double tol = kUnitPointTol) {
    return std::abs(norm(at.p) - 1.0) < tol && std::abs(norm(at.q) - 1.0) < tol;
}

inline NKTangent operator+(const NKTangent& x, const NKTangent& y) {
    return {x.a + y.a, x.b + y.b};
}
inline NKTangent operator-(const NKTangent& x, const NKTangent& y) {
    return {x.a - y.a, x.b - y.b};
}
inline NKTangent operator-(const NKTangent& x) { return {-x.a, -x.b}; }
inline NKTangent operator*(double s, const NKTangent& x) { return {s * x.a, s * x.b}; }

/// Nearly Kähler metric: (4/3)(<a,a'> + <b,b'>) - (2/3)(<a,b'> + <a',b>).
inline double g_metric(const NKTangent& z, const NKTangent& z2) {
    return (4.0 / 3.0) * (dot(z.a, z2.a) + dot(z.b, z2.b))
         - (2.0 / 3.0) * (dot(z.a, z2.b) + dot(z2.a, z.b));
}

inline double g_norm(const NKTangent& z) { return std::sqrt(g_metric(z, z)); }

/// Almost complex structure: (a|b) -> (2b-a | b-2a)/sqrt(3).
inline NKTangent j_apply(const NKTangent& z) {
    const double s = 1.0 / std::sqrt(3.0);
    return {s * (2.0 * z.b - z.a), s * (z.b - 2.0 * z.a)};
}

/// Almost product structure P: the body-frame swap.
inline NKTangent p_apply(const NKTangent& z) { return {z.b, z.a}; }

/// Usual product structure Q(U,V) = (-U,V).
inline NKTangent q_apply(const NKTangent& z) { return {-z.a, z.b}; }

/// G = (nabla J) evaluated from the closed form
///   G(X,Y) = 2/(3 sqrt 3) ( b×c + a×d + a×c - 2 b×d | -a×d - b×c + 2 a×c - b×d )
/// for X = (a|b), Y = (c|d). Skew in (X,Y).
inline NKTangent g_tensor(const NKTangent& x, const NKTangent& y) {
    const double s = 2.0 / (3.0 * std::sqrt(3.0));
    const ImQuat bc = imcross(x.b, y.a);
    const ImQuat ad = imcross(x.a, y.b);
    const ImQuat ac = imcross(x.a, y.a);
    const ImQuat bd = imcross(x.b, y.b);
    return {s * (bc + ad + ac - 2.0 * bd), s * (-1.0 * ad - 1.0 * bc + 2.0 * ac - 1.0 * bd)};
}

/// Difference between the Euclidean and nearly Kähler connections:
/// (JG(X,PY) + JG(Y,PX))/2.
inline NKTangent euclid_correction(const NKTangent& x, const NKTangent& y) {
    const NKTangent t1 = j_apply(g_tensor(x, p_apply(y)));
    const NKTangent t2 = j_apply(g_tensor(y, p_apply(x)));
    return 0.5 * (t1 + t2);
}

/// Ambient representative (U,V) = (p a, q b) of a body-frame tangent.
inline std::pair<Quat, Quat> embed(const NKPoint& at, const NKTangent& z) {
    if (!is_unit_point(at)) throw std::domain_error("embed: base point not on S3xS3");
    return {qmul(at.p, as_quat(z.a)), qmul(at.q, as_quat(z.b))};
}

struct PullbackResult {
    NKTangent z;
    double defect;  // magnitude of the discarded radial parts
};

/// Body-frame components of an ambient pair (U,V); tolerates small
/// non-tangency (finite-difference tangents carry O(h^2) radial parts)
/// and reports its size instead of failing.
inline PullbackResult pullback(const NKPoint& at, const Quat& u, const Quat& v) {
    const Quat pu = qmul(qinv(at.p), u);
    const Quat qv = qmul(qinv(at.q), v);
    const double defect = std::max(std::abs(re_part(pu)), std::abs(re_part(qv)));
    return {{im_part(pu), im_part(qv)}, defect};
}

// Frame fields of the paper's basis, as body-frame constants:
// E~1=(pi,0), E~2=(pj,0), E~3=-(pk,0) and F~i the q-side mirror.
inline NKTangent e_frame(int i) {
    switch (i) {
        case 1: return {kImI, {}};
        case 2: return {kImJ, {}};
        case 3: return {-1.0 * kImK, {}};
    }
    throw std::out_of_range("e_frame: index in {1,2,3}");
}
inline NKTangent f_frame(int i) {
    switch (i) {
        case 1: return {{}, kImI};
        case 2: return {{}, kImJ};
        case 3: return {{}, -1.0 * kImK};
    }
    throw std::out_of_range("f_frame: index in {1,2,3}");
}

inline double epsilon_ijk(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    // parity of the permutation (i j k) of (1 2 3)
    const bool even = (j == i % 3 + 1);
    return even ? 1.0 : -1.0;
}

} // namespace nkl
