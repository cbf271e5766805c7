#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "siac/filtering.hpp"
#include "siac/quadrature.hpp"

using namespace siac;

namespace {

const double kTwoPi = 2.0 * M_PI;

ModalField2D sin_field(int k, int n) {
    return project_initial(UniformMesh2D::unit_torus(n, n), k,
                           [](double x, double y) { return std::sin(x + y); });
}

// Independent enumeration of the line footprint break points: spline knots of
// every shifted spline plus brute-force mesh-line crossings, merged.
std::vector<double> enumerate_line_breaks(Point2 p, int k, double H, double theta,
                                          const UniformMesh2D& mesh) {
    const double half = 0.5 * (3 * k + 1) * H;
    std::vector<double> breaks;
    for (int g = -k; g <= k; ++g) {
        for (int j = 0; j <= k + 1; ++j) breaks.push_back((g + j - 0.5 * (k + 1)) * H);
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (int i = -4000; i <= 4000; ++i) {
        if (std::abs(c) > 1e-14) {
            const double t = (p.x - (mesh.xmin + i * mesh.hx())) / c;
            if (std::abs(t) < half) breaks.push_back(t);
        }
        if (std::abs(s) > 1e-14) {
            const double t = (p.y - (mesh.ymin + i * mesh.hy())) / s;
            if (std::abs(t) < half) breaks.push_back(t);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> merged;
    for (double b : breaks) {
        if (merged.empty() || b - merged.back() > 1e-12 * H) merged.push_back(b);
    }
    return merged;
}

// Test-local 1D SIAC filter of a scalar trace, for the separability check.
double filter_1d(const std::function<double(double)>& g, double x, const SiacKernel& kernel,
                 const UniformMesh2D& mesh) {
    std::vector<double> breaks = kernel.breakpoints();
    const double half = kernel.support_half_width();
    const long imin = static_cast<long>(std::ceil((x - half - mesh.xmin) / mesh.hx()));
    const long imax = static_cast<long>(std::floor((x + half - mesh.xmin) / mesh.hx()));
    for (long i = imin; i <= imax; ++i) {
        const double t = x - (mesh.xmin + i * mesh.hx());
        if (std::abs(t) < half) breaks.push_back(t);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [&](double a, double b) {
                                 return std::abs(a - b) < 1e-12 * kernel.scaling();
                             }),
                 breaks.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        sum += integrate_gauss(
            [&](double t) { return kernel.evaluate(t) * g(x - t); }, breaks[i],
            breaks[i + 1], line_gauss_points(kernel.k()));
    }
    return sum;
}

}  // namespace

TEST_CASE("axis-aligned footprint at an element centre has 8 subintervals") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(20, 20);
    const double h = mesh.hx();
    const SiacKernel kernel(1, h);  // k=1, mu=1
    const Point2 centre{mesh.xmin + 4.5 * h, mesh.ymin + 7.5 * h};
    const RegionDecomposition region = line_footprint(centre, kernel, 0.0, mesh);
    CHECK(region.breaks.size() == 9);
    CHECK(region.counters.integrals == 8);
    // Knots at multiples of h, crossings at half-integer multiples.
    const std::vector<double> expected{-2 * h, -1.5 * h, -h,      -0.5 * h, 0,
                                       0.5 * h, h,       1.5 * h, 2 * h};
    REQUIRE(region.breaks.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(region.breaks[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("diagonal footprint merges coincident crossings") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(20, 20);
    const double h = mesh.hx();
    const double H = std::sqrt(2.0) * h;
    const SiacKernel kernel(1, H);
    // On the main diagonal the x- and y-crossings land at identical arc values.
    const Point2 p{mesh.xmin + 3.3 * h, mesh.ymin + 3.3 * h};
    const RegionDecomposition region = line_footprint(p, kernel, M_PI / 4, mesh);
    const auto oracle = enumerate_line_breaks(p, 1, H, M_PI / 4, mesh);
    REQUIRE(region.breaks.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(region.breaks[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
    }
    // 5 knots + 4 merged crossing pairs.
    CHECK(region.breaks.size() == 9);
}

TEST_CASE("generic rotated footprint matches the enumeration oracle") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(20, 20);
    const double H = std::sqrt(2.0) * mesh.hx();
    const double theta = 3.0 * M_PI / 4.0;
    const SiacKernel kernel(1, H);
    const Point2 p{3.03, 2.71};
    const RegionDecomposition region = line_footprint(p, kernel, theta, mesh);
    const auto oracle = enumerate_line_breaks(p, 1, H, theta, mesh);
    REQUIRE(region.breaks.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(region.breaks[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
    }
    // The generic count: 5 knots, 4 x-crossings, 4 y-crossings.
    CHECK(region.counters.integrals == 12);
    CHECK(region.counters.quadrature_evals ==
          region.counters.integrals * line_gauss_points(1));
    CHECK(region.counters.intersection_scans > 0);
}

TEST_CASE("tensor footprint counters") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(20, 20);
    const SiacKernel kx(1, mesh.hx());
    const SiacKernel ky(1, mesh.hy());
    const Point2 p{3.03, 2.71};
    const RegionDecomposition region = tensor_footprint(p, kx, ky, mesh);
    const auto nx = static_cast<std::int64_t>(region.breaks_x.size()) - 1;
    const auto ny = static_cast<std::int64_t>(region.breaks_y.size()) - 1;
    CHECK(region.counters.integrals == nx * ny);
    CHECK(region.counters.quadrature_evals == nx * ny * 9);
    CHECK(nx == 8);  // 5 knots + 4 mesh crossings at a generic point
    CHECK(ny == 8);
}

TEST_CASE("constant fields are reproduced") {
    const ModalField2D field = project_initial(UniformMesh2D::unit_torus(12, 12), 1,
                                               [](double, double) { return -4.2; });
    FilterConfig line{FilterKind::line, 3.0 * M_PI / 4.0, std::sqrt(2.0), -1};
    FilterConfig tensor{FilterKind::tensor, 0.0, 1.0, -1};
    for (const Point2 p : {Point2{3.0, 3.0}, Point2{0.37, 5.9}, Point2{4.44, 1.23}}) {
        CHECK(std::abs(filter_point(field, p, line) - (-4.2)) < 1e-12);
        CHECK(std::abs(filter_point(field, p, tensor) - (-4.2)) < 1e-12);
    }
    // Brute-force oracle on constants.
    CHECK(std::abs(brute_force_filter_point(field, {3.0, 3.0}, line) - (-4.2)) < 1e-9);
    CHECK(std::abs(brute_force_filter_point(field, {3.0, 3.0}, tensor) - (-4.2)) < 1e-9);
}

TEST_CASE("global polynomials up to degree 2k pass through the filters") {
    for (int k : {1, 2}) {
        const UniformMesh2D mesh = UniformMesh2D::unit_torus(20, 20);
        for (int p = 0; p <= 2 * k; ++p) {
            const ModalField2D field = project_initial(
                mesh, k, [p](double x, double) { return std::pow(x, p); });
            const Point2 query{2.2, 3.1};  // footprint stays clear of the seam
            const double expected = std::pow(query.x, p);

            FilterConfig line{FilterKind::line, M_PI / 4.0, std::sqrt(2.0), -1};
            CHECK(std::abs(filter_point(field, query, line) - expected) < 1e-10);

            FilterConfig tensor{FilterKind::tensor, 0.0, 1.0, -1};
            CHECK(std::abs(filter_point(field, query, tensor) - expected) < 1e-10);
        }
    }
}

TEST_CASE("decomposed quadrature matches the blind oracle") {
    for (int k : {1, 2}) {
        const ModalField2D field = sin_field(k, 20);
        std::mt19937 rng(1000 + k);
        std::uniform_real_distribution<double> dist(0.0, kTwoPi);
        FilterConfig line{FilterKind::line, 3.0 * M_PI / 4.0, std::sqrt(2.0), -1};
        FilterConfig tensor{FilterKind::tensor, 0.0, 1.0, -1};
        for (int trial = 0; trial < 3; ++trial) {
            const Point2 p{dist(rng), dist(rng)};
            CHECK(std::abs(filter_point(field, p, line) -
                           brute_force_filter_point(field, p, line)) < 1e-6);
            CHECK(std::abs(filter_point(field, p, tensor) -
                           brute_force_filter_point(field, p, tensor)) < 1e-5);
        }
    }
}

TEST_CASE("zero rotation separates into a 1D filter of the x-trace") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(16, 16);
    // Constant in y, so every horizontal trace is the same 1D profile.
    const ModalField2D field =
        project_initial(mesh, 2, [](double x, double) { return std::sin(x); });
    const SiacKernel kernel(2, mesh.hx());
    const double y0 = 2.13;
    const auto trace = [&](double x) { return field.evaluate(x, y0); };
    for (double x : {0.4, 2.9, 5.5}) {
        const double two_d = filter_point_line(field, {x, y0}, kernel, 0.0);
        const double one_d = filter_1d(trace, x, kernel, mesh);
        CHECK(std::abs(two_d - one_d) < 1e-12);
    }
}

TEST_CASE("inserting an artificial break point does not change the value") {
    const ModalField2D field = sin_field(2, 16);
    const SiacKernel kernel(2, std::sqrt(2.0) * field.mesh().hx());
    const double theta = 3.0 * M_PI / 4.0;
    const Point2 p{2.9, 3.3};
    const double base = filter_point_line(field, p, kernel, theta);
    for (double extra : {0.123, -0.741, 1.03}) {
        const double refined = filter_point_line(field, p, kernel, theta, nullptr, {extra});
        CHECK(std::abs(refined - base) < 1e-13);
    }
}

TEST_CASE("theta and theta+pi filter identically") {
    const ModalField2D field = sin_field(1, 16);
    const SiacKernel kernel(1, std::sqrt(2.0) * field.mesh().hx());
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> angle(0.0, M_PI);
    std::uniform_real_distribution<double> coord(0.0, kTwoPi);
    for (int trial = 0; trial < 10; ++trial) {
        const double theta = angle(rng);
        const Point2 p{coord(rng), coord(rng)};
        const double a = filter_point_line(field, p, kernel, theta);
        const double b = filter_point_line(field, p, kernel, theta + M_PI);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("line filtering needs far fewer quadrature evaluations") {
    for (int k : {1, 2}) {
        const ModalField2D field = sin_field(k, 20);
        const double mu = std::sqrt(2.0);
        FilterConfig line{FilterKind::line, 3.0 * M_PI / 4.0, mu, -1};
        FilterConfig tensor{FilterKind::tensor, 0.0, mu, -1};
        Counters cline, ctensor;
        filter_point(field, {3.03, 2.71}, line, &cline);
        filter_point(field, {3.03, 2.71}, tensor, &ctensor);
        CHECK(cline.quadrature_evals * 20 < ctensor.quadrature_evals);
    }
}

TEST_CASE("footprints larger than the domain are rejected") {
    const ModalField2D small = sin_field(3, 4);
    FilterConfig line{FilterKind::line, 3.0 * M_PI / 4.0, std::sqrt(2.0), -1};
    CHECK_THROWS_AS(filter_point(small, {3.0, 3.0}, line), std::invalid_argument);
    FilterConfig tensor{FilterKind::tensor, 0.0, 2.0, -1};
    CHECK_THROWS_AS(filter_point(small, {3.0, 3.0}, tensor), std::invalid_argument);
}

TEST_CASE("line filters require a square mesh") {
    const ModalField2D field = project_initial(UniformMesh2D(10, 14, 0, kTwoPi, 0, kTwoPi),
                                               1, [](double, double) { return 1.0; });
    FilterConfig line{FilterKind::line, M_PI / 4.0, std::sqrt(2.0), -1};
    CHECK_THROWS_AS(filter_point(field, {3.0, 3.0}, line), std::invalid_argument);
}

TEST_CASE("default scaling multiplier") {
    FilterConfig line{FilterKind::line, 3.0 * M_PI / 4.0, 0.0, -1};
    CHECK(line.resolved_mu() == doctest::Approx(std::sqrt(2.0)));
    FilterConfig axis{FilterKind::line, 0.0, 0.0, -1};
    CHECK(axis.resolved_mu() == doctest::Approx(1.0));
    FilterConfig tensor{FilterKind::tensor, 0.0, 0.0, -1};
    CHECK(tensor.resolved_mu() == doctest::Approx(1.0));
}

TEST_CASE("uniform sampling mode") {
    const ModalField2D field = sin_field(1, 12);
    FilterConfig line{FilterKind::line, 3.0 * M_PI / 4.0, std::sqrt(2.0), -1};
    const SampledFilterField sampled = filter_field(field, line, Sampling::uniform(5, 3));
    REQUIRE(sampled.value.size() == 15);
    CHECK(sampled.x[0] == doctest::Approx(kTwoPi * 0.5 / 5));
    CHECK(sampled.counters.integrals > 0);
    // Spot check one sample against the point filter.
    Counters scratch;
    const double direct = filter_point(field, {sampled.x[7], sampled.y[7]}, line, &scratch);
    CHECK(sampled.value[7] == doctest::Approx(direct).epsilon(1e-14));
}
