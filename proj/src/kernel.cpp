#include "siac/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "siac/quadrature.hpp"

namespace siac {

namespace {

// Solves A x = b in place, partial pivoting. Small dense systems only.
std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) < 1e-14) {
            throw std::runtime_error("kernel coefficient system is singular");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < n; ++r) {
            const double factor = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

}  // namespace

std::vector<double> SiacKernel::solve_coefficients(int k) {
    if (k < 0) throw std::invalid_argument("SiacKernel: k must be >= 0");
    const int n = 2 * k + 1;
    const int order = k + 1;
    // Raw moments of the shifted spline: integral psi(t - gamma) t^q dt
    // = sum_r C(q,r) m_r gamma^(q-r), with m_r the central-spline moments.
    std::vector<double> m(n);
    for (int r = 0; r < n; ++r) m[r] = CentralBSpline::moment(order, r);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, 0.0);
    b[0] = 1.0;
    for (int q = 0; q < n; ++q) {
        for (int g = 0; g < n; ++g) {
            const double gamma = g - k;
            double binom = 1.0;
            double acc = 0.0;
            for (int r = 0; r <= q; ++r) {
                if (r > 0) binom = binom * (q - r + 1) / r;
                acc += binom * m[r] * std::pow(gamma, q - r);
            }
            a[q][g] = acc;
        }
    }
    return solve_dense(std::move(a), std::move(b));
}

SiacKernel::SiacKernel(int k, double scaling)
    : k_(k), scaling_(scaling), coeffs_(solve_coefficients(k)), spline_(k + 1) {
    if (!(scaling > 0.0)) throw std::invalid_argument("SiacKernel: scaling must be > 0");
}

double SiacKernel::evaluate_unscaled(double eta) const {
    if (std::abs(eta) > 0.5 * (3 * k_ + 1)) return 0.0;
    double sum = 0.0;
    for (int g = 0; g < num_splines(); ++g) {
        sum += coeffs_[g] * spline_.value(eta - (g - k_));
    }
    return sum;
}

double SiacKernel::evaluate(double t) const {
    return evaluate_unscaled(t / scaling_) / scaling_;
}

std::vector<double> SiacKernel::breakpoints() const {
    std::vector<double> raw;
    raw.reserve(num_splines() * (spline_order() + 1));
    for (int g = -k_; g <= k_; ++g) {
        for (int j = 0; j <= spline_order(); ++j) {
            raw.push_back((g + j - 0.5 * spline_order()) * scaling_);
        }
    }
    std::sort(raw.begin(), raw.end());
    const double tol = 1e-12 * scaling_;
    std::vector<double> merged;
    for (double t : raw) {
        if (merged.empty() || t - merged.back() > tol) merged.push_back(t);
    }
    return merged;
}

double SiacKernel::reproduction_residual(int p) const {
    if (p < 0 || p > 2 * k_) {
        throw std::invalid_argument("reproduction_residual: need 0 <= p <= 2k");
    }
    const std::vector<double> breaks = breakpoints();
    const int npts = 2 * k_ + 2;  // integrand degree <= k + p <= 3k
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
        const double x = s / 3.0 - 1.5;
        double conv = 0.0;
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            conv += integrate_gauss(
                [&](double t) { return evaluate(t) * std::pow(x - t, p); },
                breaks[i], breaks[i + 1], npts);
        }
        worst = std::max(worst, std::abs(conv - std::pow(x, p)));
    }
    return worst;
}

LineKernel::LineKernel(SiacKernel base, double theta)
    : base_(std::move(base)),
      theta_(theta),
      direction_{std::cos(theta), std::sin(theta)} {
    const double norm = std::hypot(direction_.ux, direction_.uy);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("LineKernel: direction must have unit norm");
    }
}

double LineKernel::arc_parameter(double x, double y) const {
    return x * direction_.ux + y * direction_.uy;
}

double LineKernel::evaluate(double x, double y) const {
    return base_.evaluate(arc_parameter(x, y));
}

Point2 change_of_basis(double theta, Point2 p, BasisChange direction) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (direction == BasisChange::to_rotated) {
        return {c * p.x + s * p.y, -s * p.x + c * p.y};
    }
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace siac
