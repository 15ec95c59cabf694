#pragma once

#include <cmath>
#include <stdexcept>

#include "nkl/dual.hpp"

namespace nkl {

/// Quaternion w + x i + y j + z k over a scalar type (double in normal use,
/// Dual3 when derivatives ride along).
template <class T>
struct QuatT {
    T w{}, x{}, y{}, z{};
};

/// Imaginary quaternion x i + y j + z k. Kept as its own type so "real part
/// is zero" is structural, not a runtime check; conversions are explicit.
template <class T>
struct ImQuatT {
    T x{}, y{}, z{};
};

using Quat = QuatT<double>;
using ImQuat = ImQuatT<double>;

// ---- Quat algebra ----------------------------------------------------------

template <class T>
QuatT<T> operator+(const QuatT<T>& a, const QuatT<T>& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
template <class T>
QuatT<T> operator-(const QuatT<T>& a, const QuatT<T>& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
template <class T>
QuatT<T> operator-(const QuatT<T>& a) { return {-a.w, -a.x, -a.y, -a.z}; }
template <class T>
QuatT<T> operator*(const T& s, const QuatT<T>& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}
inline Quat operator*(double s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

/// Hamilton product.
template <class T>
QuatT<T> qmul(const QuatT<T>& a, const QuatT<T>& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

template <class T>
QuatT<T> qconj(const QuatT<T>& a) { return {a.w, -a.x, -a.y, -a.z}; }

template <class T>
T norm_sq(const QuatT<T>& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }

inline double norm(const Quat& a) { return std::sqrt(norm_sq(a)); }

inline double dot(const Quat& a, const Quat& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Quat qinv(const Quat& a) {
    const double n2 = norm_sq(a);
    if (n2 <= 0.0) throw std::domain_error("qinv: zero-norm quaternion");
    const double inv = 1.0 / n2;
    return {a.w * inv, -a.x * inv, -a.y * inv, -a.z * inv};
}

inline Quat normalized(const Quat& a) {
    const double n = norm(a);
    if (n <= 0.0) throw std::domain_error("normalized: zero-norm quaternion");
    return (1.0 / n) * a;
}

// ---- ImQuat algebra ---------------------------------------------------------

template <class T>
ImQuatT<T> operator+(const ImQuatT<T>& a, const ImQuatT<T>& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
template <class T>
ImQuatT<T> operator-(const ImQuatT<T>& a, const ImQuatT<T>& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
template <class T>
ImQuatT<T> operator-(const ImQuatT<T>& a) { return {-a.x, -a.y, -a.z}; }
template <class T, class S>
ImQuatT<T> operator*(const S& s, const ImQuatT<T>& a) {
    return {s * a.x, s * a.y, s * a.z};
}

template <class T>
T dot(const ImQuatT<T>& a, const ImQuatT<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
T norm_sq(const ImQuatT<T>& a) { return dot(a, a); }

inline double norm(const ImQuat& a) { return std::sqrt(norm_sq(a)); }

/// Vector cross product; equals (ab - ba)/2 as quaternions.
template <class T>
ImQuatT<T> imcross(const ImQuatT<T>& a, const ImQuatT<T>& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

template <class T>
QuatT<T> as_quat(const ImQuatT<T>& a) { return {T{}, a.x, a.y, a.z}; }

template <class T>
ImQuatT<T> im_part(const QuatT<T>& a) { return {a.x, a.y, a.z}; }

template <class T>
T re_part(const QuatT<T>& a) { return a.w; }

/// exp of an imaginary quaternion: cos|a| + (sin|a|/|a|) a. Unit by
/// construction; the Taylor branch keeps small integrator steps exact.
inline Quat qexp_im(const ImQuat& a) {
    const double n2 = norm_sq(a);
    const double n = std::sqrt(n2);
    double s;  // sin(n)/n
    if (n < 1e-6) {
        s = 1.0 - n2 / 6.0 + n2 * n2 / 120.0;
    } else {
        s = std::sin(n) / n;
    }
    return {std::cos(n), s * a.x, s * a.y, s * a.z};
}

inline const ImQuat kImI{1, 0, 0};
inline const ImQuat kImJ{0, 1, 0};
inline const ImQuat kImK{0, 0, 1};
inline const Quat kQuatOne{1, 0, 0, 0};

} // namespace nkl
