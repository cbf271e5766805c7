#include "siac/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "siac/quadrature.hpp"

namespace siac {

namespace {

double require_square_h(const UniformMesh2D& mesh) {
    if (std::abs(mesh.hx() - mesh.hy()) > 1e-9 * mesh.hx()) {
        throw std::invalid_argument("line filter requires a square mesh (hx == hy)");
    }
    return mesh.hx();
}

SiacKernel line_kernel_for(const ModalField2D& field, const FilterConfig& config) {
    const double h = require_square_h(field.mesh());
    return SiacKernel(config.resolved_k(field), config.resolved_mu() * h);
}

void check_line_support(const SiacKernel& kernel, const UniformMesh2D& mesh) {
    const double support = 2.0 * kernel.support_half_width();
    if (support > std::min(mesh.lx(), mesh.ly())) {
        throw std::invalid_argument(
            "line filter support exceeds the domain; the periodic footprint would self-overlap");
    }
}

void check_tensor_support(const SiacKernel& kx, const SiacKernel& ky,
                          const UniformMesh2D& mesh) {
    if (2.0 * kx.support_half_width() > mesh.lx() ||
        2.0 * ky.support_half_width() > mesh.ly()) {
        throw std::invalid_argument(
            "tensor filter support exceeds the domain; the periodic footprint would self-overlap");
    }
}

// Kernels resolved once for a field/config pair, for the bulk sampling loops.
struct PreparedFilter {
    FilterKind kind;
    double theta;
    SiacKernel kx;
    SiacKernel ky;

    PreparedFilter(const ModalField2D& field, const FilterConfig& config)
        : kind(config.kind),
          theta(config.theta),
          kx(config.resolved_k(field),
             config.resolved_mu() * (config.kind == FilterKind::line
                                         ? require_square_h(field.mesh())
                                         : field.mesh().hx())),
          ky(config.resolved_k(field), config.resolved_mu() * field.mesh().hy()) {
        if (kind == FilterKind::line) {
            check_line_support(kx, field.mesh());
        } else {
            check_tensor_support(kx, ky, field.mesh());
        }
    }

    double apply(const ModalField2D& field, Point2 p, Counters* counters) const {
        if (kind == FilterKind::line) {
            return filter_point_line(field, p, kx, theta, counters);
        }
        return filter_point_tensor(field, p, kx, ky, counters);
    }
};

// Crossings of the segment coord(t) = p0 - t*rate, |t| < limit, with the grid
// {origin + i*spacing : i in Z}, on the unwrapped line. Appends the crossing
// parameters and counts one scan per candidate grid line tested.
void append_grid_crossings(double p0, double rate, double limit, double origin,
                           double spacing, std::vector<double>& out,
                           std::int64_t& scans) {
    if (std::abs(rate) < 1e-14) return;
    const double reach = limit * std::abs(rate);
    const long imin = static_cast<long>(std::ceil((p0 - reach - origin) / spacing));
    const long imax = static_cast<long>(std::floor((p0 + reach - origin) / spacing));
    for (long i = imin; i <= imax; ++i) {
        ++scans;
        const double t = (p0 - (origin + i * spacing)) / rate;
        if (std::abs(t) < limit) out.push_back(t);
    }
}

std::vector<double> merge_breaks(std::vector<double> breaks, double tol) {
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> merged;
    merged.reserve(breaks.size());
    for (double b : breaks) {
        if (merged.empty() || b - merged.back() > tol) merged.push_back(b);
    }
    return merged;
}

// Crossings of the support interval [centre - half, centre + half] with one
// axis grid, in absolute axis coordinates (strictly inside the support).
void axis_crossings(double centre, double half, double origin, double spacing,
                    std::vector<double>& out, std::int64_t& scans) {
    const long imin = static_cast<long>(std::ceil((centre - half - origin) / spacing));
    const long imax = static_cast<long>(std::floor((centre + half - origin) / spacing));
    for (long i = imin; i <= imax; ++i) {
        ++scans;
        const double v = origin + i * spacing;
        if (std::abs(v - centre) < half) out.push_back(v);
    }
}

}  // namespace

double FilterConfig::resolved_mu() const {
    if (mu > 0.0) return mu;
    if (kind == FilterKind::line) return std::abs(std::cos(theta)) + std::abs(std::sin(theta));
    return 1.0;
}

int FilterConfig::resolved_k(const ModalField2D& field) const {
    return k_override >= 0 ? k_override : field.degree();
}

int line_gauss_points(int k) { return (3 * k + 1) / 2 + ((3 * k + 1) % 2 ? 1 : 0); }

int tensor_gauss_points(int k) { return k + 2; }

RegionDecomposition line_footprint(Point2 point, const SiacKernel& kernel,
                                   double theta, const UniformMesh2D& mesh,
                                   const std::vector<double>& extra_breaks) {
    check_line_support(kernel, mesh);
    const double half = kernel.support_half_width();
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    RegionDecomposition region;
    std::vector<double> breaks = kernel.breakpoints();
    append_grid_crossings(point.x, c, half, mesh.xmin, mesh.hx(), breaks,
                          region.counters.intersection_scans);
    append_grid_crossings(point.y, s, half, mesh.ymin, mesh.hy(), breaks,
                          region.counters.intersection_scans);
    for (double b : extra_breaks) {
        if (std::abs(b) < half) breaks.push_back(b);
    }
    region.breaks = merge_breaks(std::move(breaks), 1e-12 * kernel.scaling());
    region.counters.integrals = static_cast<std::int64_t>(region.breaks.size()) - 1;
    region.counters.quadrature_evals =
        region.counters.integrals * line_gauss_points(kernel.k());
    return region;
}

RegionDecomposition tensor_footprint(Point2 point, const SiacKernel& kernel_x,
                                     const SiacKernel& kernel_y,
                                     const UniformMesh2D& mesh) {
    check_tensor_support(kernel_x, kernel_y, mesh);
    RegionDecomposition region;

    std::vector<double> bx;
    for (double b : kernel_x.breakpoints()) bx.push_back(point.x - b);
    axis_crossings(point.x, kernel_x.support_half_width(), mesh.xmin, mesh.hx(), bx,
                   region.counters.intersection_scans);
    region.breaks_x = merge_breaks(std::move(bx), 1e-12 * kernel_x.scaling());

    std::vector<double> by;
    for (double b : kernel_y.breakpoints()) by.push_back(point.y - b);
    axis_crossings(point.y, kernel_y.support_half_width(), mesh.ymin, mesh.hy(), by,
                   region.counters.intersection_scans);
    region.breaks_y = merge_breaks(std::move(by), 1e-12 * kernel_y.scaling());

    const std::int64_t nxr = static_cast<std::int64_t>(region.breaks_x.size()) - 1;
    const std::int64_t nyr = static_cast<std::int64_t>(region.breaks_y.size()) - 1;
    region.counters.integrals = nxr * nyr;
    const int n = tensor_gauss_points(kernel_x.k());
    region.counters.quadrature_evals = region.counters.integrals * n * n;
    return region;
}

double filter_point_line(const ModalField2D& field, Point2 point,
                         const SiacKernel& kernel, double theta, Counters* counters,
                         const std::vector<double>& extra_breaks) {
    const RegionDecomposition region =
        line_footprint(point, kernel, theta, field.mesh(), extra_breaks);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const int n = line_gauss_points(kernel.k());
    const GaussRule& rule = gauss_legendre(n);

    double sum = 0.0;
    for (std::size_t r = 0; r + 1 < region.breaks.size(); ++r) {
        const double mid = 0.5 * (region.breaks[r] + region.breaks[r + 1]);
        const double halfw = 0.5 * (region.breaks[r + 1] - region.breaks[r]);
        double part = 0.0;
        for (int q = 0; q < n; ++q) {
            const double t = mid + halfw * rule.nodes[q];
            part += rule.weights[q] * kernel.evaluate(t) *
                    field.evaluate(point.x - t * c, point.y - t * s);
        }
        sum += halfw * part;
    }
    if (counters) *counters += region.counters;
    return sum;
}

double filter_point_tensor(const ModalField2D& field, Point2 point,
                           const SiacKernel& kernel_x, const SiacKernel& kernel_y,
                           Counters* counters) {
    const RegionDecomposition region =
        tensor_footprint(point, kernel_x, kernel_y, field.mesh());
    const int n = tensor_gauss_points(kernel_x.k());
    const GaussRule& rule = gauss_legendre(n);

    double sum = 0.0;
    for (std::size_t ry = 0; ry + 1 < region.breaks_y.size(); ++ry) {
        const double ymid = 0.5 * (region.breaks_y[ry] + region.breaks_y[ry + 1]);
        const double yhalf = 0.5 * (region.breaks_y[ry + 1] - region.breaks_y[ry]);
        for (std::size_t rx = 0; rx + 1 < region.breaks_x.size(); ++rx) {
            const double xmid = 0.5 * (region.breaks_x[rx] + region.breaks_x[rx + 1]);
            const double xhalf = 0.5 * (region.breaks_x[rx + 1] - region.breaks_x[rx]);
            double part = 0.0;
            for (int qy = 0; qy < n; ++qy) {
                const double y = ymid + yhalf * rule.nodes[qy];
                const double ky = kernel_y.evaluate(point.y - y);
                double inner = 0.0;
                for (int qx = 0; qx < n; ++qx) {
                    const double x = xmid + xhalf * rule.nodes[qx];
                    inner += rule.weights[qx] * kernel_x.evaluate(point.x - x) *
                             field.evaluate(x, y);
                }
                part += rule.weights[qy] * ky * inner;
            }
            sum += xhalf * yhalf * part;
        }
    }
    if (counters) *counters += region.counters;
    return sum;
}

double filter_point(const ModalField2D& field, Point2 point,
                    const FilterConfig& config, Counters* counters) {
    return PreparedFilter(field, config).apply(field, point, counters);
}

double brute_force_filter_point(const ModalField2D& field, Point2 point,
                                const FilterConfig& config) {
    if (config.kind == FilterKind::line) {
        const SiacKernel kernel = line_kernel_for(field, config);
        check_line_support(kernel, field.mesh());
        const double half = kernel.support_half_width();
        const double c = std::cos(config.theta);
        const double s = std::sin(config.theta);
        const int slots = 20000;
        const double dt = 2.0 * half / slots;
        double sum = 0.0;
        for (int m = 0; m < slots; ++m) {
            const double t = -half + (m + 0.5) * dt;
            sum += kernel.evaluate(t) * field.evaluate(point.x - t * c, point.y - t * s);
        }
        return sum * dt;
    }
    const int k = config.resolved_k(field);
    const double mu = config.resolved_mu();
    const SiacKernel kx(k, mu * field.mesh().hx());
    const SiacKernel ky(k, mu * field.mesh().hy());
    check_tensor_support(kx, ky, field.mesh());
    const int slots = 2000;
    const double hxw = kx.support_half_width();
    const double hyw = ky.support_half_width();
    const double dx = 2.0 * hxw / slots;
    const double dy = 2.0 * hyw / slots;
    std::vector<double> kxv(slots), kyv(slots);
    for (int m = 0; m < slots; ++m) {
        kxv[m] = kx.evaluate(-hxw + (m + 0.5) * dx);
        kyv[m] = ky.evaluate(-hyw + (m + 0.5) * dy);
    }
    double sum = 0.0;
    for (int my = 0; my < slots; ++my) {
        const double y = point.y - (-hyw + (my + 0.5) * dy);
        double inner = 0.0;
        for (int mx = 0; mx < slots; ++mx) {
            const double x = point.x - (-hxw + (mx + 0.5) * dx);
            inner += kxv[mx] * field.evaluate(x, y);
        }
        sum += kyv[my] * inner;
    }
    return sum * dx * dy;
}

SampledFilterField filter_field(const ModalField2D& field, const FilterConfig& config,
                                const Sampling& sampling) {
    const UniformMesh2D& mesh = field.mesh();
    const PreparedFilter prepared(field, config);
    SampledFilterField out;
    if (sampling.mode == Sampling::Mode::uniform) {
        if (sampling.nx < 1 || sampling.ny < 1) {
            throw std::invalid_argument("filter_field: uniform sampling needs nx, ny >= 1");
        }
        out.x.reserve(static_cast<std::size_t>(sampling.nx) * sampling.ny);
        for (int j = 0; j < sampling.ny; ++j) {
            const double y = mesh.ymin + (j + 0.5) * mesh.ly() / sampling.ny;
            for (int i = 0; i < sampling.nx; ++i) {
                const double x = mesh.xmin + (i + 0.5) * mesh.lx() / sampling.nx;
                out.x.push_back(x);
                out.y.push_back(y);
                out.value.push_back(prepared.apply(field, {x, y}, &out.counters));
            }
        }
        return out;
    }
    const int nq = field.degree() + 3;
    const GaussRule& rule = gauss_legendre(nq);
    for (int j = 0; j < mesh.ny; ++j) {
        for (int i = 0; i < mesh.nx; ++i) {
            const double x0 = mesh.xmin + i * mesh.hx();
            const double y0 = mesh.ymin + j * mesh.hy();
            for (int r = 0; r < nq; ++r) {
                const double y = y0 + 0.5 * (rule.nodes[r] + 1.0) * mesh.hy();
                for (int q = 0; q < nq; ++q) {
                    const double x = x0 + 0.5 * (rule.nodes[q] + 1.0) * mesh.hx();
                    out.x.push_back(x);
                    out.y.push_back(y);
                    out.value.push_back(prepared.apply(field, {x, y}, &out.counters));
                }
            }
        }
    }
    return out;
}

double filtered_l2_error(const ModalField2D& field, const FilterConfig& config,
                         const std::function<double(double, double)>& exact,
                         Counters* counters) {
    const UniformMesh2D& mesh = field.mesh();
    const PreparedFilter prepared(field, config);
    const int nq = field.degree() + 3;
    const GaussRule& rule = gauss_legendre(nq);
    const double jac = mesh.hx() * mesh.hy() / 4.0;
    Counters local;
    double sum = 0.0;
    for (int j = 0; j < mesh.ny; ++j) {
        for (int i = 0; i < mesh.nx; ++i) {
            const double x0 = mesh.xmin + i * mesh.hx();
            const double y0 = mesh.ymin + j * mesh.hy();
            for (int r = 0; r < nq; ++r) {
                const double y = y0 + 0.5 * (rule.nodes[r] + 1.0) * mesh.hy();
                for (int q = 0; q < nq; ++q) {
                    const double x = x0 + 0.5 * (rule.nodes[q] + 1.0) * mesh.hx();
                    const double diff = prepared.apply(field, {x, y}, &local) - exact(x, y);
                    sum += rule.weights[q] * rule.weights[r] * diff * diff;
                }
            }
        }
    }
    if (counters) *counters += local;
    return std::sqrt(sum * jac);
}

}  // namespace siac
