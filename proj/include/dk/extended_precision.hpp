#pragma once

// Compensated complex Horner evaluation carrying three doubles per component
// (roughly triple working precision). The iteration in solver.cpp needs
// residual-level accuracy far below what plain double evaluation can deliver
// for ill-conditioned coefficient sets (Wilkinson-type), where the naive
// error bound eps * sum |a_k| |z|^(n-k) dwarfs the polynomial value itself.

#include <array>
#include <cmath>
#include <complex>
#include <span>

namespace dk::detail {

inline double two_sum(double a, double b, double& err) {
    const double s = a + b;
    const double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    const double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

// Unevaluated sum x0 + x1 + x2 with components of decreasing magnitude.
struct Triple {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0;
};

// Collapses up to five doubles (any magnitude order) into a Triple whose
// components carry the exact sum up to an O(eps^3) residue. Two error-free
// two_sum sweeps, then the leftover tail is folded in floating point.
inline Triple renorm(std::array<double, 5> v, int n) {
    for (int i = n - 2; i >= 0; --i) {
        double e;
        v[i] = two_sum(v[i], v[i + 1], e);
        v[i + 1] = e;
    }
    for (int i = n - 2; i >= 1; --i) {
        double e;
        v[i] = two_sum(v[i], v[i + 1], e);
        v[i + 1] = e;
    }
    Triple t;
    t.x0 = v[0];
    t.x1 = n > 1 ? v[1] : 0.0;
    for (int i = 2; i < n; ++i) t.x2 += v[i];
    return t;
}

inline Triple triple_from(double d) { return Triple{d, 0.0, 0.0}; }

inline Triple add(const Triple& a, const Triple& b) {
    return renorm({a.x0, b.x0, a.x1, b.x1, a.x2 + b.x2}, 5);
}

inline Triple add(const Triple& a, double d) {
    return renorm({a.x0, d, a.x1, a.x2, 0.0}, 4);
}

inline Triple sub(const Triple& a, const Triple& b) {
    return renorm({a.x0, -b.x0, a.x1, -b.x1, a.x2 - b.x2}, 5);
}

inline Triple mul(const Triple& a, double d) {
    double e0, e1;
    const double p0 = two_prod(a.x0, d, e0);
    const double p1 = two_prod(a.x1, d, e1);
    const double p2 = a.x2 * d;
    return renorm({p0, p1, e0, e1, p2}, 5);
}

inline double collapse(const Triple& a) { return a.x0 + (a.x1 + a.x2); }

struct ComplexTriple {
    Triple re, im;
};

inline ComplexTriple mul(const ComplexTriple& s, std::complex<double> z) {
    ComplexTriple r;
    r.re = sub(mul(s.re, z.real()), mul(s.im, z.imag()));
    r.im = add(mul(s.re, z.imag()), mul(s.im, z.real()));
    return r;
}

// p(z) for real coefficients in descending powers, compensated Horner.
inline std::complex<double> eval_horner_accurate(std::span<const double> coeffs,
                                                 std::complex<double> z) {
    ComplexTriple acc;
    acc.re = triple_from(coeffs.empty() ? 0.0 : coeffs[0]);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        acc = mul(acc, z);
        acc.re = add(acc.re, coeffs[k]);
    }
    return {collapse(acc.re), collapse(acc.im)};
}

}  // namespace dk::detail
