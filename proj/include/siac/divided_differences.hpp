#pragma once

#include <functional>

namespace siac {

/// A direction in the plane. Callers that use one as a rotation direction are
/// expected to pass a unit vector (checked where it matters).
struct Direction2 {
    double ux = 0.0;
    double uy = 0.0;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

using ScalarFn = std::function<double(double)>;
using PlaneFn = std::function<double(double, double)>;

/// Scaled symmetric divided difference, applied alpha times:
/// d_h f(x) = (f(x + h/2) - f(x - h/2)) / h.
double divided_difference_1d(const ScalarFn& f, double h, int alpha, double x);

/// Scaled directional divided difference along u, applied alpha times:
/// d_{u,H} f(p) = (f(p + (H/2) u) - f(p - (H/2) u)) / H.
double directional_divided_difference(const PlaneFn& f, Direction2 u, double H,
                                      int alpha, Point2 p);

/// Binomial expansion of the alpha-fold divided difference along
/// u_theta = (cos theta, sin theta) into mixed differences along the axis
/// directions (cos theta, 0) and (0, sin theta), evaluated at the shifted
/// points of the expansion. Algebraically identical to
/// directional_divided_difference with u = u_theta; kept as a separate code
/// path so the identity can be tested.
double directional_dd_binomial_expansion(const PlaneFn& f, double theta, double H,
                                         int alpha, Point2 p);

}  // namespace siac
