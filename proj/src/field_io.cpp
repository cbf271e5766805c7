#include "siac/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace siac {

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
    throw std::runtime_error("load_field: " + what + " (line " + std::to_string(line) + ")");
}

}  // namespace

void save_field(const ModalField2D& field, std::ostream& out) {
    const UniformMesh2D& mesh = field.mesh();
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf;
    };
    out << "SIACFIELD v1 " << mesh.nx << ' ' << mesh.ny << ' ' << field.degree() << ' ';
    put(mesh.xmin);
    out << ' ';
    put(mesh.xmax);
    out << ' ';
    put(mesh.ymin);
    out << ' ';
    put(mesh.ymax);
    out << '\n';
    const int nm = field.modes_per_axis();
    for (int j = 0; j < mesh.ny; ++j) {
        for (int i = 0; i < mesh.nx; ++i) {
            for (int n = 0; n < nm; ++n) {
                for (int m = 0; m < nm; ++m) {
                    if (n != 0 || m != 0) out << ' ';
                    put(field.coeff(i, j, m, n));
                }
            }
            out << '\n';
        }
    }
}

void save_field(const ModalField2D& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_field: cannot open " + path);
    save_field(field, out);
    if (!out) throw std::runtime_error("save_field: write failed for " + path);
}

ModalField2D load_field(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) fail("unexpected end of data", 1);
    std::istringstream hs(header);
    std::string magic, version;
    int nx = 0, ny = 0, k = -1;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    if (!(hs >> magic >> version >> nx >> ny >> k >> xmin >> xmax >> ymin >> ymax) ||
        magic != "SIACFIELD" || version != "v1") {
        fail("malformed header", 1);
    }
    std::string trailing;
    if (hs >> trailing) fail("malformed header, trailing content", 1);
    if (nx < 1 || ny < 1) fail("element counts must be >= 1", 1);
    if (k < 0) fail("polynomial degree must be >= 0", 1);
    if (!(xmax > xmin) || !(ymax > ymin)) fail("empty domain box", 1);

    UniformMesh2D mesh(nx, ny, xmin, xmax, ymin, ymax);
    ModalField2D field(mesh, k);
    const int nm = k + 1;
    std::string line;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int lineno = 2 + j * nx + i;
            if (!std::getline(in, line)) fail("unexpected end of data", lineno);
            std::istringstream ls(line);
            for (int n = 0; n < nm; ++n) {
                for (int m = 0; m < nm; ++m) {
                    double v;
                    if (!(ls >> v)) fail("dimension mismatch, too few coefficients", lineno);
                    if (!std::isfinite(v)) fail("non-finite coefficient", lineno);
                    field.coeff(i, j, m, n) = v;
                }
            }
            double extra;
            if (ls >> extra) fail("dimension mismatch, too many coefficients", lineno);
        }
    }
    return field;
}

ModalField2D load_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    return load_field(in);
}

}  // namespace siac
