#include "siac/divided_differences.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace siac {

namespace {

void require_positive(double h, const char* what) {
    if (!(h > 0.0)) throw std::invalid_argument(std::string(what) + ": step must be > 0");
}

// Mixed difference d_{ux,H}^a d_{uy,H}^b f at p, by recursion on a then b.
double mixed_dd(const PlaneFn& f, Direction2 ux, Direction2 uy, double H, int a,
                int b, Point2 p) {
    if (a > 0) {
        Point2 plus{p.x + 0.5 * H * ux.ux, p.y + 0.5 * H * ux.uy};
        Point2 minus{p.x - 0.5 * H * ux.ux, p.y - 0.5 * H * ux.uy};
        return (mixed_dd(f, ux, uy, H, a - 1, b, plus) -
                mixed_dd(f, ux, uy, H, a - 1, b, minus)) /
               H;
    }
    if (b > 0) {
        Point2 plus{p.x + 0.5 * H * uy.ux, p.y + 0.5 * H * uy.uy};
        Point2 minus{p.x - 0.5 * H * uy.ux, p.y - 0.5 * H * uy.uy};
        return (mixed_dd(f, ux, uy, H, a, b - 1, plus) -
                mixed_dd(f, ux, uy, H, a, b - 1, minus)) /
               H;
    }
    return f(p.x, p.y);
}

}  // namespace

double divided_difference_1d(const ScalarFn& f, double h, int alpha, double x) {
    require_positive(h, "divided_difference_1d");
    if (alpha == 0) return f(x);
    return (divided_difference_1d(f, h, alpha - 1, x + 0.5 * h) -
            divided_difference_1d(f, h, alpha - 1, x - 0.5 * h)) /
           h;
}

double directional_divided_difference(const PlaneFn& f, Direction2 u, double H,
                                      int alpha, Point2 p) {
    require_positive(H, "directional_divided_difference");
    if (alpha == 0) return f(p.x, p.y);
    Point2 plus{p.x + 0.5 * H * u.ux, p.y + 0.5 * H * u.uy};
    Point2 minus{p.x - 0.5 * H * u.ux, p.y - 0.5 * H * u.uy};
    return (directional_divided_difference(f, u, H, alpha - 1, plus) -
            directional_divided_difference(f, u, H, alpha - 1, minus)) /
           H;
}

double directional_dd_binomial_expansion(const PlaneFn& f, double theta, double H,
                                         int alpha, Point2 p) {
    require_positive(H, "directional_dd_binomial_expansion");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Direction2 ux{c, 0.0};
    const Direction2 uy{0.0, s};
    double sum = 0.0;
    double binom = 1.0;  // C(alpha, m)
    for (int m = 0; m <= alpha; ++m) {
        if (m > 0) binom = binom * (alpha - m + 1) / m;
        Point2 shifted{p.x - 0.5 * m * H * c, p.y + 0.5 * (alpha - m) * H * s};
        sum += binom * mixed_dd(f, ux, uy, H, alpha - m, m, shifted);
    }
    return sum;
}

}  // namespace siac
