#pragma once

#include <vector>

#include "siac/bspline.hpp"
#include "siac/divided_differences.hpp"

namespace siac {

/// Symmetric smoothing kernel for a degree-k field: 2k+1 central B-splines of
/// order k+1 at integer centres, weighted so the kernel reproduces polynomials
/// up to degree 2k, then scaled by H in the mesh length units.
class SiacKernel {
public:
    SiacKernel(int k, double scaling);

    int k() const { return k_; }
    int num_splines() const { return 2 * k_ + 1; }
    int spline_order() const { return k_ + 1; }
    double scaling() const { return scaling_; }

    /// Weights c_gamma, gamma = -k..k.
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// Scaled kernel value (1/H) sum_gamma c_gamma psi^(k+1)(t/H - gamma).
    double evaluate(double t) const;

    /// Unscaled kernel value at eta (the H = 1 kernel).
    double evaluate_unscaled(double eta) const;

    /// Half-width of the scaled support, (3k+1) H / 2.
    double support_half_width() const { return 0.5 * (3 * k_ + 1) * scaling_; }

    /// All knots of all shifted splines, merged within 1e-12 * H, scaled by H.
    std::vector<double> breakpoints() const;

    /// Max over sample points of |(K_H * t^p)(x) - x^p|, exact per-piece
    /// quadrature. Valid for 0 <= p <= 2k.
    double reproduction_residual(int p) const;

    /// Weights for the degree-k kernel, from the moment conditions
    /// integral K(t) t^q dt = delta_{q0}, q = 0..2k, assembled with exact
    /// shifted-spline moments and solved by partially pivoted elimination.
    static std::vector<double> solve_coefficients(int k);

private:
    int k_;
    double scaling_;
    std::vector<double> coeffs_;
    CentralBSpline spline_;
};

/// The kernel restricted to the line through the origin with direction
/// (cos theta, sin theta), parametrized by arc length.
class LineKernel {
public:
    LineKernel(SiacKernel base, double theta);

    const SiacKernel& base() const { return base_; }
    double theta() const { return theta_; }
    Direction2 direction() const { return direction_; }

    /// Arc parameter of a point on the line: x cos theta + y sin theta.
    double arc_parameter(double x, double y) const;

    /// Kernel value at a Cartesian point on the line.
    double evaluate(double x, double y) const;

private:
    SiacKernel base_;
    double theta_;
    Direction2 direction_;
};

enum class BasisChange { to_rotated, to_cartesian };

/// Exchanges point coordinates between the Cartesian frame and the frame
/// rotated by theta. to_rotated returns the coordinates of p in the rotated
/// basis {(cos t, sin t), (-sin t, cos t)}; to_cartesian inverts it.
Point2 change_of_basis(double theta, Point2 p, BasisChange direction);

}  // namespace siac
