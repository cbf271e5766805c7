#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "siac/kernel.hpp"
#include "siac/modal_field.hpp"

namespace siac {

enum class FilterKind { tensor, line };

/// Filter selection: kind, rotation (line only; the tensor filter is axis
/// aligned), and the scaling multiplier mu with H = mu * h. A non-positive mu
/// requests the default: |cos theta| + |sin theta| for line filters (sqrt(2)
/// on the diagonals), 1 for the tensor filter.
struct FilterConfig {
    FilterKind kind = FilterKind::line;
    double theta = 0.0;
    double mu = 0.0;
    int k_override = -1;  // kernel degree; < 0 means the field degree

    double resolved_mu() const;
    int resolved_k(const ModalField2D& field) const;
};

struct Counters {
    std::int64_t intersection_scans = 0;
    std::int64_t integrals = 0;
    std::int64_t quadrature_evals = 0;

    Counters& operator+=(const Counters& o) {
        intersection_scans += o.intersection_scans;
        integrals += o.integrals;
        quadrature_evals += o.quadrature_evals;
        return *this;
    }
    bool operator==(const Counters&) const = default;
};

/// Break points of one convolution footprint plus the work counters.
/// Line footprints fill `breaks` (arc parameters around the query point);
/// tensor footprints fill the per-axis sequences.
struct RegionDecomposition {
    std::vector<double> breaks;
    std::vector<double> breaks_x;
    std::vector<double> breaks_y;
    Counters counters;
};

/// Gauss points per line subinterval: the integrand is piecewise polynomial of
/// degree at most 3k (kernel piece times a degree-k tensor polynomial traced
/// along a line), so ceil((3k+1)/2) points integrate it exactly.
int line_gauss_points(int k);

/// Gauss points per axis of a tensor subrectangle (integrand degree <= 2k).
int tensor_gauss_points(int k);

/// Break points of the line convolution around a point: kernel knots plus
/// every crossing of the (unwrapped) footprint segment with a mesh line,
/// merged within 1e-12 * H. extra_breaks, if given, are inserted verbatim
/// (used to check refinement invariance).
RegionDecomposition line_footprint(Point2 point, const SiacKernel& kernel,
                                   double theta, const UniformMesh2D& mesh,
                                   const std::vector<double>& extra_breaks = {});

/// Per-axis break points of the tensor-product convolution footprint.
RegionDecomposition tensor_footprint(Point2 point, const SiacKernel& kernel_x,
                                     const SiacKernel& kernel_y,
                                     const UniformMesh2D& mesh);

/// Convolution of the field with the rotated line kernel at one point,
/// integral K_H(t) u_h(point - t (cos theta, sin theta)) dt, as exact Gauss
/// sums over the footprint subintervals. Field evaluation wraps periodically.
double filter_point_line(const ModalField2D& field, Point2 point,
                         const SiacKernel& kernel, double theta,
                         Counters* counters = nullptr,
                         const std::vector<double>& extra_breaks = {});

/// Tensor-product convolution at one point over the per-axis footprint grid.
double filter_point_tensor(const ModalField2D& field, Point2 point,
                           const SiacKernel& kernel_x, const SiacKernel& kernel_y,
                           Counters* counters = nullptr);

/// Point filter dispatch on a config.
double filter_point(const ModalField2D& field, Point2 point,
                    const FilterConfig& config, Counters* counters = nullptr);

/// Blind composite-midpoint evaluation of the same convolution, ignoring all
/// break points: 20,000 slots across the line support, 2,000 per axis for the
/// tensor filter. A slow cross-check oracle, accurate only to the sampling.
double brute_force_filter_point(const ModalField2D& field, Point2 point,
                                const FilterConfig& config);

struct Sampling {
    enum class Mode { error_grid, uniform };
    Mode mode = Mode::error_grid;
    int nx = 0;
    int ny = 0;

    static Sampling error_grid() { return {Mode::error_grid, 0, 0}; }
    static Sampling uniform(int nx, int ny) { return {Mode::uniform, nx, ny}; }
};

struct SampledFilterField {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> value;
    Counters counters;
};

/// Applies the configured point filter at each sample location. The error
/// grid places the (k+3)^2 per-element Gauss points used by l2_error, so
/// filtered L2 errors are quadrature consistent; the uniform grid samples
/// cell centres of an nx-by-ny partition of the domain.
SampledFilterField filter_field(const ModalField2D& field, const FilterConfig& config,
                                const Sampling& sampling);

/// L2 error of the filtered field against a reference function, on the same
/// Gauss grid as l2_error.
double filtered_l2_error(const ModalField2D& field, const FilterConfig& config,
                         const std::function<double(double, double)>& exact,
                         Counters* counters = nullptr);

}  // namespace siac
