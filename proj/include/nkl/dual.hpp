#pragma once

#include <cmath>

namespace nkl {

/// Forward-mode scalar carrying exact first partials in (t, u, v).
/// Used to evaluate connection-form fields together with the analytic
/// derivatives their integrability residuals need.
struct Dual3 {
    double v = 0.0;   // value
    double dt = 0.0;
    double du = 0.0;
    double dv = 0.0;

    Dual3() = default;
    Dual3(double value) : v(value) {}
    Dual3(double value, double pt, double pu, double pv)
        : v(value), dt(pt), du(pu), dv(pv) {}

    static Dual3 var_t(double value) { return {value, 1, 0, 0}; }
    static Dual3 var_u(double value) { return {value, 0, 1, 0}; }
    static Dual3 var_v(double value) { return {value, 0, 0, 1}; }

    Dual3 operator-() const { return {-v, -dt, -du, -dv}; }

    Dual3& operator+=(const Dual3& o) {
        v += o.v; dt += o.dt; du += o.du; dv += o.dv;
        return *this;
    }
    Dual3& operator-=(const Dual3& o) {
        v -= o.v; dt -= o.dt; du -= o.du; dv -= o.dv;
        return *this;
    }
};

inline Dual3 operator+(Dual3 a, const Dual3& b) { return a += b; }
inline Dual3 operator-(Dual3 a, const Dual3& b) { return a -= b; }

inline Dual3 operator*(const Dual3& a, const Dual3& b) {
    return {a.v * b.v,
            a.dt * b.v + a.v * b.dt,
            a.du * b.v + a.v * b.du,
            a.dv * b.v + a.v * b.dv};
}

inline Dual3 operator/(const Dual3& a, const Dual3& b) {
    const double inv = 1.0 / b.v;
    const double q = a.v * inv;
    return {q,
            (a.dt - q * b.dt) * inv,
            (a.du - q * b.du) * inv,
            (a.dv - q * b.dv) * inv};
}

inline Dual3 chain(double f, double fprime, const Dual3& x) {
    return {f, fprime * x.dt, fprime * x.du, fprime * x.dv};
}

inline Dual3 sin(const Dual3& x)  { return chain(std::sin(x.v),  std::cos(x.v), x); }
inline Dual3 cos(const Dual3& x)  { return chain(std::cos(x.v), -std::sin(x.v), x); }
inline Dual3 tan(const Dual3& x) {
    const double t = std::tan(x.v);
    return chain(t, 1.0 + t * t, x);
}
inline Dual3 exp(const Dual3& x)  { const double e = std::exp(x.v); return chain(e, e, x); }
inline Dual3 log(const Dual3& x)  { return chain(std::log(x.v), 1.0 / x.v, x); }
inline Dual3 sqrt(const Dual3& x) {
    const double s = std::sqrt(x.v);
    return chain(s, 0.5 / s, x);
}
inline Dual3 atan(const Dual3& x) { return chain(std::atan(x.v), 1.0 / (1.0 + x.v * x.v), x); }

inline double value_of(double x) { return x; }
inline double value_of(const Dual3& x) { return x.v; }

} // namespace nkl
