#include "siac/legendre.hpp"

#include <cmath>

namespace siac {

void legendre_orthonormal(int degree, double s, double* values) {
    double p0 = 1.0;
    values[0] = std::sqrt(0.5);
    if (degree == 0) return;
    double p1 = s;
    values[1] = std::sqrt(1.5) * p1;
    for (int m = 2; m <= degree; ++m) {
        const double p2 = ((2.0 * m - 1.0) * s * p1 - (m - 1.0) * p0) / m;
        values[m] = std::sqrt(m + 0.5) * p2;
        p0 = p1;
        p1 = p2;
    }
}

void legendre_orthonormal_derivative(int degree, double s, double* values) {
    // P_m and P_m' by the coupled recurrence; stable for |s| <= 1.
    double p0 = 1.0, d0 = 0.0;
    values[0] = 0.0;
    if (degree == 0) return;
    double p1 = s, d1 = 1.0;
    values[1] = std::sqrt(1.5);
    for (int m = 2; m <= degree; ++m) {
        const double p2 = ((2.0 * m - 1.0) * s * p1 - (m - 1.0) * p0) / m;
        const double d2 = d0 + (2.0 * m - 1.0) * p1;
        values[m] = std::sqrt(m + 0.5) * d2;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
    }
}

}  // namespace siac
