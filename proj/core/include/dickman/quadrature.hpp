#pragma once

#include <cmath>
#include <cstddef>

namespace dickman {

// 4-point Gauss-Legendre on [a, b]; exact through degree 7.
template <class F>
double gauss4(F&& f, double a, double b) {
    static constexpr double x1 = 0.33998104358485626;
    static constexpr double x2 = 0.86113631159405258;
    static constexpr double w1 = 0.65214515486254614;
    static constexpr double w2 = 0.34785484513745386;
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    return h * (w1 * (f(c - h * x1) + f(c + h * x1)) +
                w2 * (f(c - h * x2) + f(c + h * x2)));
}

// 8-point Gauss-Legendre on [a, b].
template <class F>
double gauss8(F&& f, double a, double b) {
    static constexpr double xs[4] = {0.18343464249564980, 0.52553240991632899,
                                     0.79666647741362674, 0.96028985649753623};
    static constexpr double ws[4] = {0.36268378337836198, 0.31370664587788729,
                                     0.22238103445337447, 0.10122853629037626};
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
        acc += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
    return h * acc;
}

namespace detail {

template <class F>
double adaptive_simpson_rec(F& f, double a, double m, double b,
                            double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson with Richardson correction; tol is absolute.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace dickman
