#include "siac/bspline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace siac {

namespace {

double eval_recurrence(int order, double x) {
    if (order == 1) return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0;
    if (std::abs(x) >= 0.5 * order) return 0.0;
    const double half = 0.5 * order;
    return ((half + x) * eval_recurrence(order - 1, x + 0.5) +
            (half - x) * eval_recurrence(order - 1, x - 0.5)) /
           (order - 1);
}

// alpha-fold unit-width symmetric divided difference of psi^(order).
double unit_divided_difference(int order, int alpha, double x) {
    if (alpha == 0) return eval_recurrence(order, x);
    return unit_divided_difference(order, alpha - 1, x + 0.5) -
           unit_divided_difference(order, alpha - 1, x - 0.5);
}

}  // namespace

CentralBSpline::CentralBSpline(int order) : order_(order) {
    if (order < 1) {
        throw std::invalid_argument("CentralBSpline: order must be >= 1, got " +
                                    std::to_string(order));
    }
}

double CentralBSpline::value(double x) const { return eval_recurrence(order_, x); }

double CentralBSpline::derivative(int alpha, double x) const {
    if (alpha < 0) throw std::invalid_argument("CentralBSpline: negative derivative order");
    if (alpha >= order_) {
        throw std::invalid_argument("CentralBSpline: derivative order exceeds smoothness");
    }
    return unit_divided_difference(order_ - alpha, alpha, x);
}

std::vector<double> CentralBSpline::knots() const {
    std::vector<double> result(order_ + 1);
    for (int j = 0; j <= order_; ++j) result[j] = -0.5 * order_ + j;
    return result;
}

double CentralBSpline::moment(int order, int r) {
    if (r % 2 == 1) return 0.0;
    // Moments of a sum of independent U[-1/2,1/2] variables, assembled by the
    // binomial convolution of the single-factor moments u_j = 2^-j / (j+1).
    std::vector<double> uni(r + 1, 0.0);
    for (int j = 0; j <= r; j += 2) uni[j] = std::pow(0.5, j) / (j + 1);
    std::vector<double> m = uni;
    for (int ell = 2; ell <= order; ++ell) {
        std::vector<double> next(r + 1, 0.0);
        for (int q = 0; q <= r; ++q) {
            double c = 1.0;  // C(q, j), updated multiplicatively
            double acc = 0.0;
            for (int j = 0; j <= q; ++j) {
                if (j > 0) c = c * (q - j + 1) / j;
                acc += c * uni[j] * m[q - j];
            }
            next[q] = acc;
        }
        m = std::move(next);
    }
    return m[r];
}

}  // namespace siac
