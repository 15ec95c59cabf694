#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <vector>

namespace nkl {

/// Scalar samples on a uniform rectangular (u,v) grid. values[j*nu + i]
/// holds the sample at (u0 + i*hu, v0 + j*hv).
struct ScalarField2D {
    int nu = 0, nv = 0;
    double u0 = 0, v0 = 0, hu = 0, hv = 0;
    std::vector<double> values;

    ScalarField2D() = default;
    ScalarField2D(int nu_, int nv_, double u0_, double v0_, double hu_, double hv_)
        : nu(nu_), nv(nv_), u0(u0_), v0(v0_), hu(hu_), hv(hv_),
          values(static_cast<size_t>(nu_) * nv_, 0.0) {
        if (nu < 3 || nv < 3) throw std::domain_error("ScalarField2D: need at least 3x3");
        if (hu <= 0 || hv <= 0) throw std::domain_error("ScalarField2D: spacing must be positive");
    }

    double& at(int i, int j) { return values[static_cast<size_t>(j) * nu + i]; }
    double at(int i, int j) const { return values[static_cast<size_t>(j) * nu + i]; }
    double u_of(int i) const { return u0 + i * hu; }
    double v_of(int j) const { return v0 + j * hv; }
    bool boundary(int i, int j) const { return i == 0 || j == 0 || i == nu - 1 || j == nv - 1; }

    /// Sup-norm over interior sites, skipping NaN sentinels.
    double interior_sup() const {
        double m = 0;
        for (int j = 1; j < nv - 1; ++j)
            for (int i = 1; i < nu - 1; ++i)
                if (!std::isnan(at(i, j))) m = std::max(m, std::abs(at(i, j)));
        return m;
    }
};

inline ScalarField2D field_from(int nu, int nv, double u0, double v0, double hu, double hv,
                                const std::function<double(double, double)>& f) {
    ScalarField2D s(nu, nv, u0, v0, hu, hv);
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) s.at(i, j) = f(s.u_of(i), s.v_of(j));
    return s;
}

/// Value plus first and second partials of a scalar field at a point.
struct Field2Eval {
    double v = 0, du = 0, dv = 0;
    double duu = 0, duv = 0, dvv = 0;
};

/// A scalar field with derivatives, either analytic (exact partials) or
/// sampled (interpolated partials). Consumers pick tolerances by provenance.
class Field2 {
public:
    virtual ~Field2() = default;
    virtual Field2Eval eval(double u, double v) const = 0;
    virtual bool analytic() const = 0;
};

class ConstantField2 final : public Field2 {
public:
    explicit ConstantField2(double c) : c_(c) {}
    Field2Eval eval(double, double) const override { return {c_, 0, 0, 0, 0, 0}; }
    bool analytic() const override { return true; }

private:
    double c_;
};

/// mu(u,v) = ln(8 c^2 / (1 + c^2 (u^2+v^2))^2), the Liouville family for
/// f(z) = c z. Solves  Delta mu = -e^mu  identically.
class LiouvilleField2 final : public Field2 {
public:
    explicit LiouvilleField2(double c) : c(c) {
        if (c <= 0) throw std::domain_error("liouville_analytic: c must be positive");
    }
    Field2Eval eval(double u, double v) const override {
        const double c2 = c * c;
        const double w = 1.0 + c2 * (u * u + v * v);
        Field2Eval e;
        e.v = std::log(8.0 * c2 / (w * w));
        const double s = -4.0 * c2 / w;
        e.du = s * u;
        e.dv = s * v;
        e.duu = s + 8.0 * c2 * c2 * u * u / (w * w);
        e.dvv = s + 8.0 * c2 * c2 * v * v / (w * w);
        e.duv = 8.0 * c2 * c2 * u * v / (w * w);
        return e;
    }
    bool analytic() const override { return true; }

    const double c;
};

/// Arbitrary closed-form field given by callables for value and partials.
class AnalyticField2 final : public Field2 {
public:
    using Fn = std::function<double(double, double)>;
    AnalyticField2(Fn v, Fn du, Fn dv, Fn duu = nullptr, Fn duv = nullptr, Fn dvv = nullptr)
        : v_(std::move(v)), du_(std::move(du)), dv_(std::move(dv)),
          duu_(std::move(duu)), duv_(std::move(duv)), dvv_(std::move(dvv)) {}
    Field2Eval eval(double u, double v) const override {
        return {v_(u, v), du_(u, v), dv_(u, v),
                duu_ ? duu_(u, v) : 0.0, duv_ ? duv_(u, v) : 0.0, dvv_ ? dvv_(u, v) : 0.0};
    }
    bool analytic() const override { return true; }

private:
    Fn v_, du_, dv_, duu_, duv_, dvv_;
};

/// Catmull-Rom bicubic interpolation of a sampled field; derivatives come
/// from the interpolant. Clamped one cell inside the boundary.
class SampledField2 final : public Field2 {
public:
    explicit SampledField2(ScalarField2D f) : f_(std::move(f)) {
        if (f_.nu < 4 || f_.nv < 4)
            throw std::domain_error("SampledField2: need at least 4x4 samples");
    }

    Field2Eval eval(double u, double v) const override {
        const double su = (u - f_.u0) / f_.hu;
        const double sv = (v - f_.v0) / f_.hv;
        int i = static_cast<int>(std::floor(su));
        int j = static_cast<int>(std::floor(sv));
        i = std::clamp(i, 1, f_.nu - 3);
        j = std::clamp(j, 1, f_.nv - 3);
        const double x = su - i;
        const double y = sv - j;

        double wy[4], wy1[4], wy2[4];
        weights(y, wy, wy1, wy2);
        double wx[4], wx1[4], wx2[4];
        weights(x, wx, wx1, wx2);

        Field2Eval e;
        double col[4], col1[4], col2[4];
        for (int a = 0; a < 4; ++a) {  // a indexes u-offsets, collapse v first
            double s = 0, s1 = 0, s2 = 0;
            for (int b = 0; b < 4; ++b) {
                const double val = f_.at(i + a - 1, j + b - 1);
                s += wy[b] * val;
                s1 += wy1[b] * val;
                s2 += wy2[b] * val;
            }
            col[a] = s; col1[a] = s1; col2[a] = s2;
        }
        double f = 0, fu = 0, fv = 0, fuu = 0, fuv = 0, fvv = 0;
        for (int a = 0; a < 4; ++a) {
            f += wx[a] * col[a];
            fu += wx1[a] * col[a];
            fuu += wx2[a] * col[a];
            fv += wx[a] * col1[a];
            fuv += wx1[a] * col1[a];
            fvv += wx[a] * col2[a];
        }
        e.v = f;
        e.du = fu / f_.hu;
        e.dv = fv / f_.hv;
        e.duu = fuu / (f_.hu * f_.hu);
        e.duv = fuv / (f_.hu * f_.hv);
        e.dvv = fvv / (f_.hv * f_.hv);
        return e;
    }

    bool analytic() const override { return false; }
    const ScalarField2D& data() const { return f_; }

private:
    static void weights(double t, double* w, double* w1, double* w2) {
        // Catmull-Rom basis on nodes {-1,0,1,2}
        w[0] = 0.5 * (-t * t * t + 2 * t * t - t);
        w[1] = 0.5 * (3 * t * t * t - 5 * t * t + 2);
        w[2] = 0.5 * (-3 * t * t * t + 4 * t * t + t);
        w[3] = 0.5 * (t * t * t - t * t);
        w1[0] = 0.5 * (-3 * t * t + 4 * t - 1);
        w1[1] = 0.5 * (9 * t * t - 10 * t);
        w1[2] = 0.5 * (-9 * t * t + 8 * t + 1);
        w1[3] = 0.5 * (3 * t * t - 2 * t);
        w2[0] = 0.5 * (-6 * t + 4);
        w2[1] = 0.5 * (18 * t - 10);
        w2[2] = 0.5 * (-18 * t + 8);
        w2[3] = 0.5 * (6 * t - 2);
    }

    ScalarField2D f_;
};

} // namespace nkl
