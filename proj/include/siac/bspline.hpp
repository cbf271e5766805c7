#pragma once

#include <vector>

namespace siac {

/// Central B-spline of a given order: the `order`-fold convolution of the unit
/// indicator on [-1/2, 1/2), a piecewise polynomial of degree order-1 supported
/// on [-order/2, order/2). The half-open support convention makes integer
/// translates tile the line without double counting.
class CentralBSpline {
public:
    explicit CentralBSpline(int order);

    int order() const { return order_; }

    /// Value at x, from the convolution recurrence. Exact polynomial pieces.
    double value(double x) const;

    /// alpha-th derivative at x, computed as the alpha-fold unit-width divided
    /// difference of the order-(order-alpha) spline. Requires alpha < order;
    /// higher derivatives are distributional.
    double derivative(int alpha, double x) const;

    /// Knot locations: -order/2 + j for j = 0..order.
    std::vector<double> knots() const;

    /// Raw moment E[t^r] of the spline, exact (zero for odd r).
    static double moment(int order, int r);

private:
    int order_;
};

}  // namespace siac
