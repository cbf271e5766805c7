#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "siac/field_io.hpp"
#include "siac/legendre.hpp"
#include "siac/modal_field.hpp"
#include "siac/quadrature.hpp"

using namespace siac;

namespace {

// Per-element monomial re-expansion: converts the modal coefficients of one
// element to a monomial table via Legendre values at k+1 distinct abscissae
// (Vandermonde solve), then evaluates with Horner. Independent of
// ModalField2D::evaluate.
double monomial_oracle(const ModalField2D& field, double x, double y) {
    const UniformMesh2D& mesh = field.mesh();
    const double wx = mesh.wrap_x(x) - mesh.xmin;
    const double wy = mesh.wrap_y(y) - mesh.ymin;
    int i = std::min(static_cast<int>(wx / mesh.hx()), mesh.nx - 1);
    int j = std::min(static_cast<int>(wy / mesh.hy()), mesh.ny - 1);
    const double xi = 2.0 * (wx - i * mesh.hx()) / mesh.hx() - 1.0;
    const double eta = 2.0 * (wy - j * mesh.hy()) / mesh.hy() - 1.0;

    const int nm = field.degree() + 1;
    // mono[a][b]: coefficient of xi^a eta^b.
    std::vector<std::vector<double>> mono(nm, std::vector<double>(nm, 0.0));
    // Legendre-to-monomial conversion by interpolation through nm nodes.
    std::vector<double> nodes(nm);
    for (int q = 0; q < nm; ++q) nodes[q] = -0.9 + 1.8 * q / std::max(1, nm - 1);
    // Build the monomial coefficients of each 1D basis function.
    std::vector<std::vector<double>> basis_mono(nm, std::vector<double>(nm, 0.0));
    for (int m = 0; m < nm; ++m) {
        // Solve V c = phi_m(nodes) with V the monomial Vandermonde.
        std::vector<std::vector<double>> v(nm, std::vector<double>(nm));
        std::vector<double> rhs(nm);
        std::vector<double> phi(nm);
        for (int q = 0; q < nm; ++q) {
            double pw = 1.0;
            for (int a = 0; a < nm; ++a) {
                v[q][a] = pw;
                pw *= nodes[q];
            }
            legendre_orthonormal(field.degree(), nodes[q], phi.data());
            rhs[q] = phi[m];
        }
        // Gaussian elimination, no pivoting needed for these tiny systems.
        for (int col = 0; col < nm; ++col) {
            for (int row = col + 1; row < nm; ++row) {
                const double f = v[row][col] / v[col][col];
                for (int c = col; c < nm; ++c) v[row][c] -= f * v[col][c];
                rhs[row] -= f * rhs[col];
            }
        }
        for (int row = nm - 1; row >= 0; --row) {
            double acc = rhs[row];
            for (int c = row + 1; c < nm; ++c) acc -= v[row][c] * basis_mono[m][c];
            basis_mono[m][row] = acc / v[row][row];
        }
    }
    for (int n = 0; n < nm; ++n) {
        for (int m = 0; m < nm; ++m) {
            const double c = field.coeff(i, j, m, n);
            for (int a = 0; a < nm; ++a) {
                for (int b = 0; b < nm; ++b) {
                    mono[a][b] += c * basis_mono[m][a] * basis_mono[n][b];
                }
            }
        }
    }
    double result = 0.0;
    for (int a = nm - 1; a >= 0; --a) {
        double row = 0.0;
        for (int b = nm - 1; b >= 0; --b) row = row * eta + mono[a][b];
        result = result * xi + row;
    }
    return result;
}

}  // namespace

TEST_CASE("mesh invariants") {
    CHECK_THROWS_AS(UniformMesh2D(0, 4, 0, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(UniformMesh2D(4, 4, 0, 0, 0, 1), std::invalid_argument);
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(8, 8);
    CHECK(mesh.hx() == doctest::Approx(2.0 * M_PI / 8));
}

TEST_CASE("constant projection keeps only the mean mode") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(6, 6);
    const ModalField2D field = project_initial(mesh, 2, [](double, double) { return 3.25; });
    for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
            if (m == 0 && n == 0) continue;
            CHECK(std::abs(field.coeff(2, 4, m, n)) < 1e-13);
        }
    }
    CHECK(std::abs(field.evaluate(1.234, 5.0) - 3.25) < 1e-13);
}

TEST_CASE("polynomials inside the space project exactly") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(5, 5);
    const ModalField2D field = project_initial(mesh, 1, [](double x, double) { return x; });
    CHECK(l2_error(field, [](double x, double) { return x; }) < 1e-12);
    CHECK(std::abs(field.evaluate(2.7, 0.4) - 2.7) < 1e-12);
}

TEST_CASE("projection error: oversampled-quadrature consistency and h^2 order") {
    const auto u0 = [](double x, double y) { return std::sin(x + y); };
    double errors[2];
    int idx = 0;
    for (int n : {20, 40}) {
        const UniformMesh2D mesh = UniformMesh2D::unit_torus(n, n);
        const ModalField2D field = project_initial(mesh, 1, u0);
        const double standard = l2_error(field, u0);
        const double oversampled = l2_error(field, u0, 10 * (1 + 3));
        CHECK(std::abs(standard - oversampled) < 1e-3 * standard);
        errors[idx++] = standard;
    }
    const double order = std::log2(errors[0] / errors[1]);
    CHECK(order > 1.8);
    CHECK(order < 2.2);
}

TEST_CASE("evaluation conventions") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(4, 4);
    ModalField2D field(mesh, 0);
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) field.coeff(i, j, 0, 0) = 2.0 * (j * 4 + i);
    }
    // (k=0 basis value is 1/sqrt(2) per axis, so the cell value is c/2.)
    const double edge = mesh.hx();  // boundary between elements 0 and 1
    CHECK(field.evaluate(edge, 0.1) == doctest::Approx(field.coeff(1, 0, 0, 0) / 2.0));
    CHECK(field.evaluate(2.0 * M_PI + 0.1, 0.1) == doctest::Approx(field.evaluate(0.1, 0.1)));
    CHECK(field.evaluate(-0.1, 0.1) ==
          doctest::Approx(field.evaluate(2.0 * M_PI - 0.1, 0.1)));
}

TEST_CASE("evaluation matches the monomial re-expansion oracle") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(7, 5);
    const ModalField2D field = project_initial(
        mesh, 3, [](double x, double y) { return std::sin(x) * std::cos(2.0 * y) + x * 0.1; });
    std::mt19937 rng(607);
    std::uniform_real_distribution<double> dist(-5.0, 15.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = dist(rng);
        const double y = dist(rng);
        const double direct = field.evaluate(x, y);
        const double oracle = monomial_oracle(field, x, y);
        CHECK(std::abs(direct - oracle) < 1e-12 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("l2_error basics") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(6, 6);
    const auto poly = [](double x, double y) { return 0.5 * x - 0.25 * y + 1.0; };
    const ModalField2D field = project_initial(mesh, 1, poly);
    CHECK(l2_error(field, poly) < 1e-13);

    const auto wave = [](double x, double y) { return std::sin(x + y); };
    const ModalField2D wfield = project_initial(mesh, 2, wave);
    const double base = l2_error(wfield, wave);
    const double doubled = l2_error(wfield, wave, 2 * (2 + 3));
    CHECK(std::abs(base - doubled) < 1e-3 * base);
}

TEST_CASE("field file round trip is bit exact") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(3, 4);
    const ModalField2D field = project_initial(
        mesh, 2, [](double x, double y) { return std::sin(x) + std::exp(std::cos(y)); });
    std::stringstream buffer;
    save_field(field, buffer);
    const ModalField2D loaded = load_field(buffer);
    REQUIRE(loaded.coefficients().size() == field.coefficients().size());
    CHECK(std::memcmp(loaded.coefficients().data(), field.coefficients().data(),
                      field.coefficients().size() * sizeof(double)) == 0);
    CHECK(loaded.mesh() == field.mesh());
    CHECK(loaded.degree() == field.degree());
}

TEST_CASE("field file header validation") {
    {
        std::stringstream in("SIACFIELD v1 0 4 1 0 6.28 0 6.28\n");
        CHECK_THROWS_WITH_AS(load_field(in),
                             "load_field: element counts must be >= 1 (line 1)",
                             std::runtime_error);
    }
    {
        std::stringstream in("WRONGMAGIC v1 4 4 1 0 6.28 0 6.28\n");
        CHECK_THROWS_AS(load_field(in), std::runtime_error);
    }
    {
        std::stringstream in("SIACFIELD v2 4 4 1 0 6.28 0 6.28\n");
        CHECK_THROWS_AS(load_field(in), std::runtime_error);
    }
}

TEST_CASE("truncated and malformed field files") {
    const UniformMesh2D mesh = UniformMesh2D::unit_torus(2, 2);
    const ModalField2D field = project_initial(mesh, 1, [](double x, double) { return x; });
    std::stringstream buffer;
    save_field(field, buffer);
    const std::string text = buffer.str();

    {
        // Drop the last line entirely.
        const auto cut = text.rfind('\n', text.size() - 2);
        std::stringstream in(text.substr(0, cut + 1));
        try {
            load_field(in);
            FAIL("expected a load error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("unexpected end of data") != std::string::npos);
        }
    }
    {
        // Remove one coefficient from the last line.
        const auto cut = text.rfind(' ');
        std::stringstream in(text.substr(0, cut) + "\n");
        CHECK_THROWS_AS(load_field(in), std::runtime_error);
    }
    {
        // Corrupt one value.
        std::string bad = text;
        bad.replace(bad.find(' ', bad.find('\n')), 1, " nan");
        std::stringstream in(bad);
        CHECK_THROWS_AS(load_field(in), std::runtime_error);
    }
}
