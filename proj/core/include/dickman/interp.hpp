#pragma once

namespace dickman {

// Cubic Lagrange through (x0 + k*h, y[k]), k = 0..3, evaluated at x.
inline double lagrange4(const double* y, double x0, double h, double x) {
    double u = (x - x0) / h; // in node units
    double u1 = u - 1.0, u2 = u - 2.0, u3 = u - 3.0;
    return (-y[0] * u1 * u2 * u3 + 3.0 * y[1] * u * u2 * u3 -
            3.0 * y[2] * u * u1 * u3 + y[3] * u * u1 * u2) / 6.0;
}

} // namespace dickman
