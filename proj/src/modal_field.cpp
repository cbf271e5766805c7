#include "siac/modal_field.hpp"

#include <cmath>
#include <stdexcept>

#include "siac/legendre.hpp"
#include "siac/quadrature.hpp"

namespace siac {

ModalField2D::ModalField2D(UniformMesh2D mesh, int degree)
    : mesh_(mesh),
      degree_(degree),
      coeffs_(static_cast<std::size_t>(mesh.nx) * mesh.ny * (degree + 1) * (degree + 1),
              0.0) {
    if (degree < 0) throw std::invalid_argument("ModalField2D: degree must be >= 0");
    if (degree > 15) throw std::invalid_argument("ModalField2D: degree too large");
}

ModalField2D::ModalField2D(UniformMesh2D mesh, int degree, std::vector<double> coeffs)
    : ModalField2D(mesh, degree) {
    if (coeffs.size() != coeffs_.size()) {
        throw std::invalid_argument("ModalField2D: coefficient array dimension mismatch");
    }
    coeffs_ = std::move(coeffs);
}

double ModalField2D::evaluate(double x, double y) const {
    const double wx = mesh_.wrap_x(x) - mesh_.xmin;
    const double wy = mesh_.wrap_y(y) - mesh_.ymin;
    int i = static_cast<int>(wx / mesh_.hx());
    int j = static_cast<int>(wy / mesh_.hy());
    if (i >= mesh_.nx) i = mesh_.nx - 1;
    if (j >= mesh_.ny) j = mesh_.ny - 1;
    const double xi = 2.0 * (wx - i * mesh_.hx()) / mesh_.hx() - 1.0;
    const double eta = 2.0 * (wy - j * mesh_.hy()) / mesh_.hy() - 1.0;

    const int nm = degree_ + 1;
    double px[16], py[16];
    legendre_orthonormal(degree_, xi, px);
    legendre_orthonormal(degree_, eta, py);
    const double* cell = &coeffs_[index(i, j, 0, 0)];
    double sum = 0.0;
    for (int n = 0; n < nm; ++n) {
        double row = 0.0;
        for (int m = 0; m < nm; ++m) row += cell[n * nm + m] * px[m];
        sum += row * py[n];
    }
    return sum;
}

double ModalField2D::integral() const {
    // phi_0 = 1/sqrt(2) per axis, so each element contributes c_00 * hx*hy / 2.
    double sum = 0.0;
    for (int j = 0; j < mesh_.ny; ++j) {
        for (int i = 0; i < mesh_.nx; ++i) sum += coeff(i, j, 0, 0);
    }
    return sum * mesh_.hx() * mesh_.hy() / 2.0;
}

ModalField2D project_initial(const UniformMesh2D& mesh, int degree,
                             const std::function<double(double, double)>& u0) {
    ModalField2D field(mesh, degree);
    const int nm = degree + 1;
    const int nq = degree + 2;
    const GaussRule& rule = gauss_legendre(nq);

    std::vector<double> phi(static_cast<std::size_t>(nq) * nm);
    for (int q = 0; q < nq; ++q) {
        legendre_orthonormal(degree, rule.nodes[q], &phi[q * nm]);
    }

    std::vector<double> fvals(static_cast<std::size_t>(nq) * nq);
    for (int j = 0; j < mesh.ny; ++j) {
        for (int i = 0; i < mesh.nx; ++i) {
            const double x0 = mesh.xmin + i * mesh.hx();
            const double y0 = mesh.ymin + j * mesh.hy();
            for (int r = 0; r < nq; ++r) {
                const double y = y0 + 0.5 * (rule.nodes[r] + 1.0) * mesh.hy();
                for (int q = 0; q < nq; ++q) {
                    const double x = x0 + 0.5 * (rule.nodes[q] + 1.0) * mesh.hx();
                    fvals[r * nq + q] = u0(x, y);
                }
            }
            for (int n = 0; n < nm; ++n) {
                for (int m = 0; m < nm; ++m) {
                    double acc = 0.0;
                    for (int r = 0; r < nq; ++r) {
                        double inner = 0.0;
                        for (int q = 0; q < nq; ++q) {
                            inner += rule.weights[q] * phi[q * nm + m] * fvals[r * nq + q];
                        }
                        acc += rule.weights[r] * phi[r * nm + n] * inner;
                    }
                    field.coeff(i, j, m, n) = acc;
                }
            }
        }
    }
    return field;
}

double l2_error(const ModalField2D& field,
                const std::function<double(double, double)>& exact,
                int points_per_axis) {
    const UniformMesh2D& mesh = field.mesh();
    const int nq = points_per_axis > 0 ? points_per_axis : field.degree() + 3;
    const GaussRule& rule = gauss_legendre(nq);
    const double jac = mesh.hx() * mesh.hy() / 4.0;
    double sum = 0.0;
    for (int j = 0; j < mesh.ny; ++j) {
        for (int i = 0; i < mesh.nx; ++i) {
            const double x0 = mesh.xmin + i * mesh.hx();
            const double y0 = mesh.ymin + j * mesh.hy();
            for (int r = 0; r < nq; ++r) {
                const double y = y0 + 0.5 * (rule.nodes[r] + 1.0) * mesh.hy();
                for (int q = 0; q < nq; ++q) {
                    const double x = x0 + 0.5 * (rule.nodes[q] + 1.0) * mesh.hx();
                    const double diff = field.evaluate(x, y) - exact(x, y);
                    sum += rule.weights[q] * rule.weights[r] * diff * diff;
                }
            }
        }
    }
    return std::sqrt(sum * jac);
}

}  // namespace siac
