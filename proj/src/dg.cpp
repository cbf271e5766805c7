#include "siac/dg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "siac/legendre.hpp"
#include "siac/quadrature.hpp"

namespace siac {

namespace {

// Precomputed 1D modal operators for one polynomial degree.
struct DgOperators {
    int nm;                      // modes per axis, k+1
    std::vector<double> stiff;   // stiff[p*nm+m] = integral phi_m phi_p'
    std::vector<double> trace_r; // phi_m(+1)
    std::vector<double> trace_l; // phi_m(-1)

    explicit DgOperators(int degree) : nm(degree + 1) {
        stiff.assign(nm * nm, 0.0);
        trace_r.resize(nm);
        trace_l.resize(nm);
        legendre_orthonormal(degree, 1.0, trace_r.data());
        legendre_orthonormal(degree, -1.0, trace_l.data());
        // Integrand degree <= 2k-1, exact with k+1 points.
        const GaussRule& rule = gauss_legendre(nm);
        std::vector<double> phi(nm), dphi(nm);
        for (int q = 0; q < nm; ++q) {
            legendre_orthonormal(degree, rule.nodes[q], phi.data());
            legendre_orthonormal_derivative(degree, rule.nodes[q], dphi.data());
            for (int p = 0; p < nm; ++p) {
                for (int m = 0; m < nm; ++m) {
                    stiff[p * nm + m] += rule.weights[q] * phi[m] * dphi[p];
                }
            }
        }
    }
};

class AdvectionRhs {
public:
    AdvectionRhs(const UniformMesh2D& mesh, int degree)
        : mesh_(mesh),
          ops_(degree),
          nm_(degree + 1),
          cell_(static_cast<std::size_t>(nm_) * nm_),
          trace_x_(static_cast<std::size_t>(mesh.nx) * mesh.ny * nm_),
          trace_y_(static_cast<std::size_t>(mesh.nx) * mesh.ny * nm_) {}

    void operator()(const std::vector<double>& u, std::vector<double>& dudt) {
        const int nx = mesh_.nx, ny = mesh_.ny, nm = nm_;
        const double sx = 2.0 / mesh_.hx();
        const double sy = 2.0 / mesh_.hy();

        // Outflow traces: along x at xi = +1 for each y-mode, along y at
        // eta = +1 for each x-mode.
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const std::size_t e = static_cast<std::size_t>(j) * nx + i;
                const double* c = &u[e * nm * nm];
                for (int q = 0; q < nm; ++q) {
                    double tx = 0.0, ty = 0.0;
                    for (int m = 0; m < nm; ++m) {
                        tx += c[q * nm + m] * ops_.trace_r[m];
                        ty += c[m * nm + q] * ops_.trace_r[m];
                    }
                    trace_x_[e * nm + q] = tx;
                    trace_y_[e * nm + q] = ty;
                }
            }
        }

        for (int j = 0; j < ny; ++j) {
            const int js = (j + ny - 1) % ny;
            for (int i = 0; i < nx; ++i) {
                const int iw = (i + nx - 1) % nx;
                const std::size_t e = static_cast<std::size_t>(j) * nx + i;
                const std::size_t ew = static_cast<std::size_t>(j) * nx + iw;
                const std::size_t es = static_cast<std::size_t>(js) * nx + i;
                const double* c = &u[e * nm * nm];
                double* out = &dudt[e * nm * nm];

                for (int q = 0; q < nm; ++q) {
                    // x direction, y-mode q fixed
                    const double own_x = trace_x_[e * nm + q];
                    const double west_x = trace_x_[ew * nm + q];
                    for (int p = 0; p < nm; ++p) {
                        double vol = 0.0;
                        for (int m = 0; m < nm; ++m) vol += ops_.stiff[p * nm + m] * c[q * nm + m];
                        cell_[q * nm + p] =
                            sx * (vol - ops_.trace_r[p] * own_x + ops_.trace_l[p] * west_x);
                    }
                }
                for (int p = 0; p < nm; ++p) {
                    // y direction, x-mode p fixed
                    const double own_y = trace_y_[e * nm + p];
                    const double south_y = trace_y_[es * nm + p];
                    for (int q = 0; q < nm; ++q) {
                        double vol = 0.0;
                        for (int n = 0; n < nm; ++n) vol += ops_.stiff[q * nm + n] * c[n * nm + p];
                        cell_[q * nm + p] +=
                            sy * (vol - ops_.trace_r[q] * own_y + ops_.trace_l[q] * south_y);
                    }
                }
                for (int idx = 0; idx < nm * nm; ++idx) out[idx] = cell_[idx];
            }
        }
    }

private:
    UniformMesh2D mesh_;
    DgOperators ops_;
    int nm_;
    std::vector<double> cell_;
    std::vector<double> trace_x_;
    std::vector<double> trace_y_;
};

double norm_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

}  // namespace

double advection_time_step(const UniformMesh2D& mesh, int degree, double cfl) {
    const double h = std::min(mesh.hx(), mesh.hy());
    const double expo = std::max(1.0, (2.0 * degree + 1.0) / 4.0);
    return cfl * std::pow(h, expo);
}

ModalField2D solve_advection(const ModalField2D& field0, double tfinal, double cfl) {
    if (!(tfinal > 0.0)) throw std::invalid_argument("solve_advection: tfinal must be > 0");
    if (!(cfl > 0.0)) throw std::invalid_argument("solve_advection: cfl must be > 0");

    const UniformMesh2D& mesh = field0.mesh();
    const int degree = field0.degree();
    const double dt_target = advection_time_step(mesh, degree, cfl);
    const long nsteps = static_cast<long>(std::ceil(tfinal / dt_target));
    const double dt = tfinal / nsteps;

    AdvectionRhs rhs(mesh, degree);
    std::vector<double> u = field0.coefficients();
    const std::size_t n = u.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), stage(n);
    const double norm0 = norm_sq(u);

    for (long step = 0; step < nsteps; ++step) {
        rhs(u, k1);
        for (std::size_t a = 0; a < n; ++a) stage[a] = u[a] + 0.5 * dt * k1[a];
        rhs(stage, k2);
        for (std::size_t a = 0; a < n; ++a) stage[a] = u[a] + 0.5 * dt * k2[a];
        rhs(stage, k3);
        for (std::size_t a = 0; a < n; ++a) stage[a] = u[a] + dt * k3[a];
        rhs(stage, k4);
        for (std::size_t a = 0; a < n; ++a) {
            u[a] += dt / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
        }
        if (norm_sq(u) > 100.0 * norm0 + 1e-30) {
            throw std::runtime_error("solve_advection: time step too large");
        }
    }
    return ModalField2D(mesh, degree, std::move(u));
}

}  // namespace siac
