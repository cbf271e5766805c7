#pragma once

#include <functional>
#include <vector>

#include "siac/mesh.hpp"

namespace siac {

/// Per-element tensor modal coefficients of degree k per direction, in the
/// orthonormal Legendre basis on the reference square [-1, 1]^2. Element (i, j)
/// owns the half-open cell [x_i, x_{i+1}) x [y_j, y_{j+1}); evaluation wraps
/// periodically, so every point of the plane is valid.
class ModalField2D {
public:
    ModalField2D(UniformMesh2D mesh, int degree);
    ModalField2D(UniformMesh2D mesh, int degree, std::vector<double> coeffs);

    const UniformMesh2D& mesh() const { return mesh_; }
    int degree() const { return degree_; }
    int modes_per_axis() const { return degree_ + 1; }

    std::vector<double>& coefficients() { return coeffs_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// Coefficient of x-mode m, y-mode n on element (i, j).
    double& coeff(int i, int j, int m, int n) { return coeffs_[index(i, j, m, n)]; }
    double coeff(int i, int j, int m, int n) const { return coeffs_[index(i, j, m, n)]; }

    std::size_t index(int i, int j, int m, int n) const {
        const int nm = degree_ + 1;
        return ((static_cast<std::size_t>(j) * mesh_.nx + i) * nm + n) * nm + m;
    }

    /// Point value; x and y are wrapped into the domain first.
    double evaluate(double x, double y) const;

    /// Domain integral of the field (exact from the mean modes).
    double integral() const;

private:
    UniformMesh2D mesh_;
    int degree_;
    std::vector<double> coeffs_;
};

/// Element-wise L2 projection with (k+2)^2 Gauss points per element.
ModalField2D project_initial(const UniformMesh2D& mesh, int degree,
                             const std::function<double(double, double)>& u0);

/// Global L2 error against a reference function, (k+3)-point Gauss per
/// direction per element. points_per_axis overrides the rule when > 0.
double l2_error(const ModalField2D& field,
                const std::function<double(double, double)>& exact,
                int points_per_axis = 0);

}  // namespace siac
